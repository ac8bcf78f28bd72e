"""Uniform chat-completion interface over all registered providers.

Routes a validated ChatRequest to the adapter for its model's provider,
bounds retries on transport faults, and normalizes the response, filling
token counts from the local estimator when the provider omits usage.
There is no automatic failover: upstream errors carry a machine-readable
hint listing same-tier alternates so the caller can switch models.
"""

from __future__ import annotations

import time

from ..errors import ContextOverflowError, ConfigurationError, UpstreamError
from .adapters import (
    AnthropicLikeAdapter,
    CohereLikeAdapter,
    GroqLikeAdapter,
    OpenAiLikeAdapter,
    ProviderAdapter,
    ProviderRejection,
    TransportFailure,
)
from .messages import ChatRequest, ChatResponse
from .mock import MockAdapter, MockScript
from .registry import ModelRegistry
from .tokens import estimate_tokens

DEFAULT_MAX_RETRIES = 2


def default_adapters(*, timeout: float = 30.0,
                     mock_script: MockScript | None = None) -> dict[str, ProviderAdapter]:
    return {
        "openai-like": OpenAiLikeAdapter(timeout=timeout),
        "anthropic-like": AnthropicLikeAdapter(timeout=timeout),
        "cohere-like": CohereLikeAdapter(timeout=timeout),
        "groq-like": GroqLikeAdapter(timeout=timeout),
        "mock": MockAdapter(script=mock_script),
    }


class Gateway:
    def __init__(
        self,
        registry: ModelRegistry,
        adapters: dict[str, ProviderAdapter] | None = None,
        *,
        max_retries: int = DEFAULT_MAX_RETRIES,
        backoff_base: float = 0.25,
        timeout: float = 30.0,
    ):
        if adapters is None:
            script_path = registry.extras.get("mock_script")
            script = MockScript.from_file(script_path) if script_path else None
            adapters = default_adapters(timeout=timeout, mock_script=script)
        self.registry = registry
        self.adapters = adapters
        self.max_retries = max_retries
        self.backoff_base = backoff_base

    def list_models(self, tier_filter: str | None = None):
        return self.registry.list_models(tier_filter)

    def complete(self, request: ChatRequest) -> ChatResponse:
        spec = self.registry.resolve(request.model_id)

        payload_tokens = sum(estimate_tokens(m.content) for m in request.messages)
        if payload_tokens > spec.context_window:
            raise ContextOverflowError(
                f"estimated {payload_tokens} tokens exceed the {spec.context_window}-token "
                f"context window of {spec.model_id}",
                details={"limit": spec.context_window, "estimated_tokens": payload_tokens},
            )

        adapter = self.adapters.get(spec.provider)
        if adapter is None:
            raise ConfigurationError(
                f"no adapter configured for provider {spec.provider!r}"
            )

        last_fault: Exception | None = None
        for attempt in range(self.max_retries + 1):
            if attempt:
                time.sleep(self.backoff_base * (2 ** (attempt - 1)))
            try:
                result = adapter.complete(spec, request)
                break
            except TransportFailure as exc:
                last_fault = exc
            except ProviderRejection as exc:
                # 4xx-class rejections are never retried.
                raise self._upstream_error(spec, adapter, exc)
        else:
            raise self._upstream_error(spec, adapter, last_fault)

        estimated = result.input_tokens is None or result.output_tokens is None
        input_tokens = result.input_tokens
        output_tokens = result.output_tokens
        if input_tokens is None:
            input_tokens = sum(estimate_tokens(m.content) for m in request.messages)
        if output_tokens is None:
            output_tokens = estimate_tokens(result.content)
        return ChatResponse(
            content=result.content,
            input_tokens=input_tokens,
            output_tokens=output_tokens,
            usage_estimated=estimated,
            model_id=spec.model_id,
        )

    def _upstream_error(self, spec, adapter, cause) -> UpstreamError:
        return UpstreamError(
            f"provider {adapter.name!r} failed for model {spec.model_id!r}: {cause}",
            details={
                "provider": adapter.name,
                "model_id": spec.model_id,
                "alternate_models": self.registry.alternates_for(spec.model_id),
                "hint": "switch to an alternate model of the same tier",
            },
        )
