"""Multi-provider chat-completion gateway with a deterministic mock backend."""

from .gateway import Gateway, default_adapters
from .messages import AdapterResult, ChatRequest, ChatResponse, Message
from .mock import MockAdapter, MockRule, MockScript
from .registry import ModelRegistry, ModelSpec
from .tokens import estimate_tokens

__all__ = [
    "AdapterResult",
    "ChatRequest",
    "ChatResponse",
    "Gateway",
    "Message",
    "MockAdapter",
    "MockRule",
    "MockScript",
    "ModelRegistry",
    "ModelSpec",
    "default_adapters",
    "estimate_tokens",
]
