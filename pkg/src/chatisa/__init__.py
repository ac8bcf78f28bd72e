"""ChatISA: an in-house, multi-model tutoring chatbot service.

Four prompt-engineered modules (Coding Companion, Project Coach, Exam Ally,
Interview Mentor) over interchangeable LLM backends, with conversation
reconstruction over stateless provider APIs, PDF ingestion, token/cost
accounting, and PDF transcript export.
"""

__version__ = "0.1.0"
