"""Session state: one module-bound conversation plus its usage ledger."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime

from ..errors import ValidationError
from ..gateway.messages import Message


@dataclass
class ModelUsage:
    input_tokens: int = 0
    output_tokens: int = 0
    any_estimated: bool = False


@dataclass
class UsageLedger:
    """Per-model token accumulation; counts only ever grow."""

    per_model: dict[str, ModelUsage] = field(default_factory=dict)

    def add(self, model_id: str, input_tokens: int, output_tokens: int,
            estimated: bool) -> None:
        if input_tokens < 0 or output_tokens < 0:
            raise ValidationError("usage increments must be non-negative")
        usage = self.per_model.setdefault(model_id, ModelUsage())
        usage.input_tokens += input_tokens
        usage.output_tokens += output_tokens
        usage.any_estimated = usage.any_estimated or estimated

    def copy(self) -> "UsageLedger":
        return UsageLedger(
            {mid: ModelUsage(u.input_tokens, u.output_tokens, u.any_estimated)
             for mid, u in self.per_model.items()}
        )


@dataclass
class StudentLabel:
    name: str
    course_number: str


@dataclass
class Session:
    session_id: str
    module_kind: str
    template_id: str
    model_id: str
    temperature: float
    rendered_system_prompt: str  # immutable for the session's lifetime
    created_at: datetime
    history: list[Message] = field(default_factory=list)
    usage: UsageLedger = field(default_factory=UsageLedger)
    student_label: StudentLabel | None = None

    @property
    def turn_count(self) -> int:
        return len(self.history) // 2

    def models_used(self) -> list[str]:
        return list(self.usage.per_model)
