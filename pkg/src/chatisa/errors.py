"""Error taxonomy shared by every layer.

Each exception carries a stable ``code`` drawn from the API error enum, so
the HTTP facade can map any engine/gateway/ingestion failure to exactly one
wire-level code without inspecting types it does not know about.
"""

from __future__ import annotations

from typing import Any

#: The complete set of wire-level error codes.
ERROR_CODES = (
    "validation",
    "policy",
    "not_found",
    "busy",
    "upstream",
    "unreadable_document",
    "context_overflow",
    "config",
)


class ChatIsaError(Exception):
    """Base class; every subclass pins one wire code."""

    code: str = "config"

    def __init__(self, message: str, *, details: dict[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ValidationError(ChatIsaError):
    code = "validation"


class PolicyError(ChatIsaError):
    code = "policy"


class NotFoundError(ChatIsaError):
    code = "not_found"


class BusyError(ChatIsaError):
    code = "busy"


class UpstreamError(ChatIsaError):
    code = "upstream"


class UnreadableDocumentError(ChatIsaError):
    code = "unreadable_document"


class ContextOverflowError(ChatIsaError):
    code = "context_overflow"


class ConfigurationError(ChatIsaError):
    code = "config"


class PdfParseError(ValidationError):
    """Structurally broken PDF bytes (distinct from an unreadable text layer)."""


class NothingToExportError(ValidationError):
    """Transcript export requested for a session without a completed turn."""
