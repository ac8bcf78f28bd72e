"""Conversation engine: session lifecycle over the stateless gateway.

Provider APIs keep no conversation memory, so every turn reconstructs the
full payload: rendered system prompt, then all prior (user, assistant)
pairs, then the new user message, truncated only when the context window
forces it. Turns are atomic: a failed provider call leaves history, ledger
and the on-disk record untouched. Turns within one session are serialized;
a second post while one is in flight is rejected as busy.
"""

from __future__ import annotations

import threading
import uuid
from datetime import datetime, timezone
from typing import Callable, Mapping

from ..errors import BusyError, NotFoundError, PolicyError, ValidationError
from ..gateway.gateway import Gateway
from ..gateway.messages import ChatRequest, ChatResponse, Message
from ..prompts.library import PromptLibrary
from .policy import EXAM_TYPES, policy_for
from .session import Session, StudentLabel, UsageLedger
from .store import SessionStore
from .truncation import DEFAULT_RESERVED_OUTPUT, truncate_for_context

Clock = Callable[[], datetime]


def _utc_now() -> datetime:
    return datetime.now(timezone.utc)


def _default_id_factory() -> str:
    return uuid.uuid4().hex


class ConversationEngine:
    def __init__(
        self,
        gateway: Gateway,
        library: PromptLibrary,
        store: SessionStore,
        *,
        reserved_output: int = DEFAULT_RESERVED_OUTPUT,
        clock: Clock | None = None,
        id_factory: Callable[[], str] | None = None,
    ):
        self.gateway = gateway
        self.library = library
        self.store = store
        self.reserved_output = reserved_output
        self.clock = clock or _utc_now
        self.id_factory = id_factory or _default_id_factory
        self._sessions: dict[str, Session] = {}
        self._turn_locks: dict[str, threading.Lock] = {}
        self._index_lock = threading.Lock()

    # -- lifecycle ---------------------------------------------------------

    def create_session(
        self,
        module_kind: str,
        model_id: str,
        bindings: Mapping[str, str],
        *,
        template_id: str | None = None,
        student_label: StudentLabel | None = None,
    ) -> Session:
        policy = policy_for(module_kind)
        spec = self.gateway.registry.resolve(model_id)
        self._check_tier(policy, spec)

        template_id = template_id or policy.default_template
        template = self.library.get(template_id)
        if template.module_kind != module_kind:
            raise ValidationError(
                f"template {template_id!r} belongs to module "
                f"{template.module_kind!r}, not {module_kind!r}"
            )

        bindings = dict(bindings)
        if module_kind == "exam":
            exam_type = bindings.get("exam_type")
            if exam_type not in EXAM_TYPES:
                raise ValidationError(
                    f"exam_type {exam_type!r} is not one of the offered styles",
                    details={"allowed": list(EXAM_TYPES)},
                )
        # The scoping document is faculty-authored; fall back to the shipped
        # default so students need not provide one.
        if ("project_scoping_document" in template.placeholders
                and "project_scoping_document" not in bindings):
            bindings["project_scoping_document"] = self.library.default_scoping_document

        rendered = self.library.render(template_id, bindings)
        session = Session(
            session_id=self.id_factory(),
            module_kind=module_kind,
            template_id=template_id,
            model_id=model_id,
            temperature=policy.temperature,
            rendered_system_prompt=rendered,
            created_at=self.clock(),
            student_label=student_label,
        )
        with self._index_lock:
            self._sessions[session.session_id] = session
            self._turn_locks[session.session_id] = threading.Lock()
        self.store.append_created(session)
        return session

    def get_session(self, session_id: str) -> Session:
        with self._index_lock:
            session = self._sessions.get(session_id)
        if session is not None:
            return session
        # Not in memory (restart, or created by another process): replay disk.
        session = self.store.load(session_id)
        with self._index_lock:
            resident = self._sessions.setdefault(session.session_id, session)
            self._turn_locks.setdefault(session.session_id, threading.Lock())
        return resident

    # -- turns -------------------------------------------------------------

    def post_user_message(self, session: Session, text: str) -> tuple[Message, ChatResponse]:
        user = Message("user", text)  # validates non-empty
        lock = self._turn_locks.setdefault(session.session_id, threading.Lock())
        if not lock.acquire(blocking=False):
            raise BusyError(
                f"session {session.session_id} already has a turn in flight"
            )
        try:
            spec = self.gateway.registry.resolve(session.model_id)
            system = Message("system", session.rendered_system_prompt)
            payload = truncate_for_context(
                system, session.history, user,
                spec.context_window, self.reserved_output,
            )
            response = self.gateway.complete(
                ChatRequest(
                    model_id=session.model_id,
                    messages=tuple(payload),
                    temperature=session.temperature,
                )
            )
            # Success: only now mutate session state and the on-disk record.
            assistant = Message("assistant", response.content)
            session.history.append(user)
            session.history.append(assistant)
            session.usage.add(
                response.model_id, response.input_tokens, response.output_tokens,
                response.usage_estimated,
            )
            self.store.append_turn(
                session.session_id, self.clock(), user, assistant,
                response.model_id, response.input_tokens, response.output_tokens,
                response.usage_estimated,
            )
            return assistant, response
        finally:
            lock.release()

    def switch_model(self, session: Session, new_model_id: str) -> Session:
        if new_model_id == session.model_id:
            return session  # identity switch is a no-op
        policy = policy_for(session.module_kind)
        spec = self.gateway.registry.resolve(new_model_id)
        self._check_tier(policy, spec)
        old = session.model_id
        session.model_id = new_model_id
        self.store.append_model_switched(
            session.session_id, self.clock(), old, new_model_id
        )
        return session

    # -- helpers -----------------------------------------------------------

    def _check_tier(self, policy, spec) -> None:
        if spec.tier not in policy.allowed_tiers:
            allowed = [
                m.model_id
                for m in self.gateway.registry.list_for_tiers(policy.allowed_tiers)
            ]
            raise PolicyError(
                f"model {spec.model_id!r} (tier {spec.tier}) is not allowed for "
                f"{policy.module_kind} sessions",
                details={"allowed_models": allowed},
            )
