"""Cheap upload screening before any parsing happens."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_MAX_UPLOAD_BYTES = 20 * 1024 * 1024

_PDF_MAGIC = b"%PDF-"


@dataclass(frozen=True)
class UploadCheck:
    ok: bool
    reason: str | None = None
    max_bytes: int | None = None


def validate_upload(pdf_bytes: bytes,
                    max_bytes: int = DEFAULT_MAX_UPLOAD_BYTES) -> UploadCheck:
    """Reject oversize payloads and non-PDF magic bytes; never raises."""
    if len(pdf_bytes) > max_bytes:
        return UploadCheck(
            ok=False,
            reason=f"upload of {len(pdf_bytes)} bytes exceeds the "
                   f"{max_bytes}-byte limit",
            max_bytes=max_bytes,
        )
    if not pdf_bytes.startswith(_PDF_MAGIC):
        return UploadCheck(ok=False, reason="not a PDF (missing %PDF- header)")
    return UploadCheck(ok=True)
