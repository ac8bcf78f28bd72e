"""Append-only session persistence.

One JSON-Lines file per session, one record per event, so transcripts
survive restarts and never leave the host. The format is stable and is the
contract the transcript exporter reads.

Event records (all carry ``event`` and ``ts``, ISO-8601 UTC):

- ``created``: session_id, module_kind, template_id, model_id, temperature,
  system_prompt, student_label (object or null)
- ``user_msg``: content
- ``assistant_msg``: model_id, content
- ``usage``: model_id, input_tokens, output_tokens, estimated
- ``model_switched``: from_model, to_model

A turn appends user_msg, assistant_msg and usage together after the
provider call succeeds; a failed turn appends nothing.
"""

from __future__ import annotations

import json
from datetime import datetime
from pathlib import Path

from ..errors import NotFoundError, ValidationError
from ..gateway.messages import Message
from .session import Session, StudentLabel


def _record(event: str, ts: datetime, **fields) -> str:
    payload = {"event": event, "ts": ts.isoformat(), **fields}
    return json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n"


class SessionStore:
    def __init__(self, data_dir: str | Path):
        self.root = Path(data_dir) / "sessions"
        self.root.mkdir(parents=True, exist_ok=True)

    def path_for(self, session_id: str) -> Path:
        if not session_id or "/" in session_id or session_id.startswith("."):
            raise ValidationError(f"bad session id {session_id!r}")
        return self.root / f"{session_id}.jsonl"

    def append_created(self, session: Session) -> None:
        label = None
        if session.student_label is not None:
            label = {
                "name": session.student_label.name,
                "course_number": session.student_label.course_number,
            }
        self._append(
            session.session_id,
            _record(
                "created",
                session.created_at,
                session_id=session.session_id,
                module_kind=session.module_kind,
                template_id=session.template_id,
                model_id=session.model_id,
                temperature=session.temperature,
                system_prompt=session.rendered_system_prompt,
                student_label=label,
            ),
        )

    def append_turn(
        self,
        session_id: str,
        ts: datetime,
        user: Message,
        assistant: Message,
        model_id: str,
        input_tokens: int,
        output_tokens: int,
        estimated: bool,
    ) -> None:
        lines = (
            _record("user_msg", ts, content=user.content)
            + _record("assistant_msg", ts, model_id=model_id, content=assistant.content)
            + _record(
                "usage",
                ts,
                model_id=model_id,
                input_tokens=input_tokens,
                output_tokens=output_tokens,
                estimated=estimated,
            )
        )
        self._append(session_id, lines)

    def append_model_switched(self, session_id: str, ts: datetime,
                              from_model: str, to_model: str) -> None:
        self._append(
            session_id,
            _record("model_switched", ts, from_model=from_model, to_model=to_model),
        )

    def _append(self, session_id: str, text: str) -> None:
        with self.path_for(session_id).open("a", encoding="utf-8") as fh:
            fh.write(text)

    def exists(self, session_id: str) -> bool:
        return self.path_for(session_id).exists()

    def read_bytes(self, session_id: str) -> bytes:
        return self.path_for(session_id).read_bytes()

    def list_session_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.jsonl"))

    def iter_usage_events(self):
        """Yield (session_id, ts, model_id, input_tokens, output_tokens,
        estimated) across all stored sessions; feeds budget accounting."""
        for session_id in self.list_session_ids():
            for line in self.path_for(session_id).read_text(
                    encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                if rec.get("event") != "usage":
                    continue
                yield (
                    session_id,
                    datetime.fromisoformat(rec["ts"]),
                    rec["model_id"],
                    rec["input_tokens"],
                    rec["output_tokens"],
                    rec["estimated"],
                )

    def load(self, session_id: str) -> Session:
        """Rebuild a session by replaying its event log."""
        path = self.path_for(session_id)
        if not path.exists():
            raise NotFoundError(f"unknown session {session_id!r}")
        session: Session | None = None
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            rec = json.loads(line)
            event = rec["event"]
            if event == "created":
                label = rec.get("student_label")
                session = Session(
                    session_id=rec["session_id"],
                    module_kind=rec["module_kind"],
                    template_id=rec["template_id"],
                    model_id=rec["model_id"],
                    temperature=rec["temperature"],
                    rendered_system_prompt=rec["system_prompt"],
                    created_at=datetime.fromisoformat(rec["ts"]),
                    student_label=StudentLabel(**label) if label else None,
                )
            elif session is None:
                raise ValidationError(
                    f"session record {session_id!r} does not start with 'created'"
                )
            elif event == "user_msg":
                session.history.append(Message("user", rec["content"]))
            elif event == "assistant_msg":
                session.history.append(Message("assistant", rec["content"]))
            elif event == "usage":
                session.usage.add(
                    rec["model_id"], rec["input_tokens"], rec["output_tokens"],
                    rec["estimated"],
                )
            elif event == "model_switched":
                session.model_id = rec["to_model"]
        if session is None:
            raise ValidationError(f"session record {session_id!r} is empty")
        return session
