"""Server-side document storage under content-hash names.

Uploads never leave the host: the raw PDF, its extracted markdown and a
small metadata record are written under DATA_DIR/documents keyed by the
SHA-256 of the bytes, so re-uploading the same file is idempotent.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from ..errors import NotFoundError, ValidationError
from ..ingest.markdown import MarkdownDocument, extract_markdown
from ..ingest.validate import DEFAULT_MAX_UPLOAD_BYTES, validate_upload


class DocumentStore:
    def __init__(self, data_dir: str | Path,
                 max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES):
        self.root = Path(data_dir) / "documents"
        self.root.mkdir(parents=True, exist_ok=True)
        self.max_upload_bytes = max_upload_bytes

    def save(self, pdf_bytes: bytes, source_name: str = "upload.pdf") -> MarkdownDocument:
        """Validate, extract and persist; returns the extracted document.

        The document id is available as ``document_id_for(pdf_bytes)``.
        """
        check = validate_upload(pdf_bytes, self.max_upload_bytes)
        if not check.ok:
            raise ValidationError(
                check.reason or "upload rejected",
                details={"max_bytes": check.max_bytes} if check.max_bytes else {},
            )
        doc = extract_markdown(pdf_bytes, source_name)
        doc_id = self.document_id_for(pdf_bytes)
        (self.root / f"{doc_id}.pdf").write_bytes(pdf_bytes)
        (self.root / f"{doc_id}.md").write_text(doc.markdown, encoding="utf-8")
        (self.root / f"{doc_id}.json").write_text(
            json.dumps(
                {
                    "source_name": doc.source_name,
                    "page_count": doc.page_count,
                    "char_count": doc.char_count,
                },
                sort_keys=True,
            ),
            encoding="utf-8",
        )
        return doc

    @staticmethod
    def document_id_for(pdf_bytes: bytes) -> str:
        return hashlib.sha256(pdf_bytes).hexdigest()

    def get_markdown(self, document_id: str) -> str:
        if not document_id.isalnum():
            raise ValidationError(f"bad document id {document_id!r}")
        path = self.root / f"{document_id}.md"
        if not path.exists():
            raise NotFoundError(f"unknown document {document_id!r}")
        return path.read_text(encoding="utf-8")
