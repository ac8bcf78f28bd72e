"""PDF ingestion: uploads to markdown text for prompt bindings."""

from .markdown import MarkdownDocument, extract_markdown
from .validate import DEFAULT_MAX_UPLOAD_BYTES, UploadCheck, validate_upload

__all__ = [
    "DEFAULT_MAX_UPLOAD_BYTES",
    "MarkdownDocument",
    "UploadCheck",
    "extract_markdown",
    "validate_upload",
]
