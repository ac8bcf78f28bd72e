"""Conversational wire types: Message, ChatRequest, ChatResponse.

Provider APIs are stateless, so a ChatRequest always carries the full
reconstructed conversation: one system message, then strictly alternating
user/assistant turns ending with the newest user message.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ValidationError

ROLES = ("system", "user", "assistant")


@dataclass(frozen=True)
class Message:
    role: str
    content: str

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValidationError(f"unknown message role {self.role!r}")
        if not self.content.strip():
            raise ValidationError("message content is empty")


@dataclass(frozen=True)
class ChatRequest:
    model_id: str
    messages: tuple[Message, ...]
    temperature: float

    def __post_init__(self):
        object.__setattr__(self, "messages", tuple(self.messages))
        if not 0.0 <= self.temperature <= 1.0:
            raise ValidationError(
                f"temperature {self.temperature} outside [0, 1]"
            )
        msgs = self.messages
        if not msgs:
            raise ValidationError("request has no messages")
        if msgs[0].role != "system":
            raise ValidationError("first message must be the system prompt")
        if sum(1 for m in msgs if m.role == "system") != 1:
            raise ValidationError("exactly one system message is allowed")
        for i, msg in enumerate(msgs[1:], start=1):
            expected = "user" if (i - 1) % 2 == 0 else "assistant"
            if msg.role != expected:
                raise ValidationError(
                    f"message {i} has role {msg.role!r}, expected {expected!r}: "
                    "history must strictly alternate user/assistant"
                )
        if msgs[-1].role != "user":
            raise ValidationError("request must end with a user message")


@dataclass(frozen=True)
class ChatResponse:
    """Normalized completion. ``usage_estimated`` is true iff the token
    counts came from the local estimator rather than the provider."""

    content: str
    input_tokens: int
    output_tokens: int
    usage_estimated: bool
    model_id: str

    def __post_init__(self):
        if self.input_tokens < 0 or self.output_tokens < 0:
            raise ValidationError("token counts must be non-negative")


@dataclass
class AdapterResult:
    """Raw adapter output before normalization; None counts mean the
    provider did not report usage."""

    content: str
    input_tokens: int | None = None
    output_tokens: int | None = None
    extras: dict = field(default_factory=dict)
