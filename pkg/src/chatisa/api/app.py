"""HTTP facade: sessions, messages, uploads, model listing, export.

JSON over HTTP; assistant replies stream as newline-delimited JSON events
(chunks, then one usage event). Every error body carries exactly one code
from the shared taxonomy. No authentication here: deployment sits behind a
campus reverse proxy.
"""

from __future__ import annotations

import json
from typing import Iterator

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, StreamingResponse
from pydantic import BaseModel, Field

from ..config import Runtime, ServiceConfig, build_runtime
from ..engine.policy import policy_for
from ..engine.session import StudentLabel
from ..errors import ChatIsaError, ValidationError
from ..export.transcript import render_transcript_pdf
from ..gateway.gateway import Gateway
from .documents import DocumentStore

STATUS_BY_CODE = {
    "validation": 400,
    "policy": 403,
    "not_found": 404,
    "busy": 409,
    "context_overflow": 413,
    "unreadable_document": 422,
    "config": 500,
    "upstream": 502,
}

#: Binding keys that reference an uploaded document by id and the text
#: placeholder each one feeds.
DOCUMENT_BINDINGS = {
    "course_document_id": "course_text",
    "resume_document_id": "resume_text",
}

STREAM_CHUNK_CHARS = 64


class CreateSessionBody(BaseModel):
    module: str
    model_id: str
    bindings: dict[str, str] = Field(default_factory=dict)
    role: str | None = None  # template id; defaults per module
    student_name: str | None = None
    course_number: str | None = None


class MessageBody(BaseModel):
    text: str


class SwitchModelBody(BaseModel):
    model_id: str


class ExportBody(BaseModel):
    student_name: str
    course_number: str


def _error_response(code: str, message: str, details: dict) -> JSONResponse:
    return JSONResponse(
        status_code=STATUS_BY_CODE.get(code, 500),
        content={"error": {"code": code, "message": message, "details": details}},
    )


def create_app(config: ServiceConfig | None = None, *,
               gateway: Gateway | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    runtime: Runtime = build_runtime(config, gateway=gateway)
    documents = DocumentStore(config.data_dir, config.max_upload_bytes)

    app = FastAPI(title="chatisa", version="0.1.0")
    app.state.runtime = runtime
    app.state.documents = documents

    @app.exception_handler(ChatIsaError)
    async def _domain_error(_: Request, exc: ChatIsaError):
        return _error_response(exc.code, exc.message, exc.details)

    @app.exception_handler(RequestValidationError)
    async def _shape_error(_: Request, exc: RequestValidationError):
        return _error_response("validation", "malformed request body",
                               {"errors": exc.errors()})

    @app.exception_handler(Exception)
    async def _unexpected_error(_: Request, exc: Exception):
        return _error_response("config", f"internal error: {exc}", {})

    def _resolve_bindings(raw: dict[str, str]) -> dict[str, str]:
        bindings = dict(raw)
        for key, target in DOCUMENT_BINDINGS.items():
            if key in bindings:
                doc_id = bindings.pop(key)
                bindings[target] = documents.get_markdown(doc_id)
        return bindings

    @app.get("/api/models")
    def list_models(module: str | None = Query(default=None)):
        if module is None:
            models = runtime.registry.list_models()
        else:
            policy = policy_for(module)
            models = runtime.registry.list_for_tiers(policy.allowed_tiers)
        return [
            {"model_id": m.model_id, "display_name": m.display_name, "tier": m.tier}
            for m in models
        ]

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        label = None
        if body.student_name and body.course_number:
            label = StudentLabel(body.student_name, body.course_number)
        session = runtime.engine.create_session(
            body.module,
            body.model_id,
            _resolve_bindings(body.bindings),
            template_id=body.role,
            student_label=label,
        )
        return {"session_id": session.session_id}

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = runtime.engine.get_session(session_id)
        return {
            "session_id": session.session_id,
            "module_kind": session.module_kind,
            "template_id": session.template_id,
            "model_id": session.model_id,
            "temperature": session.temperature,
            "messages": [
                {"role": m.role, "content": m.content} for m in session.history
            ],
        }

    @app.post("/api/sessions/{session_id}/messages")
    def post_message(session_id: str, body: MessageBody,
                     stream: bool = Query(default=True)):
        session = runtime.engine.get_session(session_id)
        assistant, response = runtime.engine.post_user_message(session, body.text)
        usage_event = {
            "type": "usage",
            "model_id": response.model_id,
            "input_tokens": response.input_tokens,
            "output_tokens": response.output_tokens,
            "usage_estimated": response.usage_estimated,
        }
        if not stream:
            return {"content": assistant.content, "usage": usage_event}

        def _events() -> Iterator[str]:
            content = assistant.content
            for start in range(0, len(content), STREAM_CHUNK_CHARS):
                chunk = content[start:start + STREAM_CHUNK_CHARS]
                yield json.dumps({"type": "chunk", "content": chunk}) + "\n"
            yield json.dumps(usage_event) + "\n"

        return StreamingResponse(_events(), media_type="application/x-ndjson")

    @app.post("/api/sessions/{session_id}/model")
    def switch_model(session_id: str, body: SwitchModelBody):
        session = runtime.engine.get_session(session_id)
        runtime.engine.switch_model(session, body.model_id)
        return {"session_id": session.session_id, "model_id": session.model_id}

    @app.post("/api/documents")
    async def upload_document(request: Request):
        payload = await request.body()
        source_name = request.headers.get("x-source-name", "upload.pdf")
        doc = documents.save(payload, source_name)
        return {
            "document_id": documents.document_id_for(payload),
            "char_count": doc.char_count,
            "page_count": doc.page_count,
        }

    @app.post("/api/sessions/{session_id}/export")
    def export_session(session_id: str, body: ExportBody):
        if not body.student_name.strip():
            raise ValidationError("student_name must not be empty")
        session = runtime.engine.get_session(session_id)
        pdf = render_transcript_pdf(
            session, body.student_name, body.course_number,
            runtime.registry, runtime.clock,
        )
        return Response(content=pdf, media_type="application/pdf")

    return app
