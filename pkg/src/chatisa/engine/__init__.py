"""Module-bound chat sessions over the stateless provider gateway."""

from .engine import ConversationEngine
from .policy import EXAM_TYPES, POLICIES, ModulePolicy, policy_for
from .session import ModelUsage, Session, StudentLabel, UsageLedger
from .store import SessionStore
from .truncation import DEFAULT_RESERVED_OUTPUT, truncate_for_context

__all__ = [
    "EXAM_TYPES",
    "POLICIES",
    "ConversationEngine",
    "ModelUsage",
    "ModulePolicy",
    "Session",
    "SessionStore",
    "StudentLabel",
    "UsageLedger",
    "DEFAULT_RESERVED_OUTPUT",
    "policy_for",
    "truncate_for_context",
]
