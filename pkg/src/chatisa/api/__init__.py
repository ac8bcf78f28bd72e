"""HTTP facade for the tutoring service."""

from .app import create_app
from .documents import DocumentStore

__all__ = ["DocumentStore", "create_app"]
