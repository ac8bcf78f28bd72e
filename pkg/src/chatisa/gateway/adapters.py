"""Provider adapters, one per wire protocol.

Each adapter speaks its provider's native chat-completions HTTP contract and
returns an AdapterResult; the gateway owns retries, normalization and error
mapping. Adapters are stateless and safe to call concurrently.

Credentials come from ``PROVIDER_<NAME>_API_KEY`` environment variables and
base URLs can be overridden with ``PROVIDER_<NAME>_BASE_URL``.
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod

import requests

from ..errors import ConfigurationError
from .messages import AdapterResult, ChatRequest
from .registry import ModelSpec


class TransportFailure(Exception):
    """Network-level or provider-side (5xx) failure; the gateway may retry."""


class ProviderRejection(Exception):
    """Definite 4xx-class rejection; retrying would only repeat it."""

    def __init__(self, message: str, status_code: int | None = None):
        super().__init__(message)
        self.status_code = status_code


class ProviderAdapter(ABC):
    """One adapter per provider enum value."""

    name: str

    @abstractmethod
    def complete(self, spec: ModelSpec, request: ChatRequest) -> AdapterResult:
        """Execute the request against the provider and return raw output.

        Raises TransportFailure for retryable faults and ProviderRejection
        for definitive rejections.
        """


class _HttpAdapter(ProviderAdapter):
    """Shared plumbing for the real HTTP providers."""

    name = ""
    default_base_url = ""
    env_prefix = ""

    def __init__(self, *, timeout: float = 30.0, session: requests.Session | None = None):
        self.timeout = timeout
        self._http = session or requests.Session()

    def _api_key(self) -> str:
        key = os.environ.get(f"PROVIDER_{self.env_prefix}_API_KEY", "")
        if not key:
            raise ConfigurationError(
                f"missing PROVIDER_{self.env_prefix}_API_KEY for provider {self.name!r}"
            )
        return key

    def _base_url(self) -> str:
        return os.environ.get(
            f"PROVIDER_{self.env_prefix}_BASE_URL", self.default_base_url
        ).rstrip("/")

    def _post(self, url: str, *, headers: dict, payload: dict) -> dict:
        try:
            resp = self._http.post(url, json=payload, headers=headers, timeout=self.timeout)
        except (requests.ConnectionError, requests.Timeout) as exc:
            raise TransportFailure(f"{self.name}: {exc}") from exc
        if resp.status_code >= 500:
            raise TransportFailure(f"{self.name}: HTTP {resp.status_code}")
        if resp.status_code >= 400:
            raise ProviderRejection(
                f"{self.name}: HTTP {resp.status_code}: {resp.text[:300]}",
                status_code=resp.status_code,
            )
        try:
            return resp.json()
        except ValueError as exc:
            raise TransportFailure(f"{self.name}: non-JSON response body") from exc


class OpenAiLikeAdapter(_HttpAdapter):
    name = "openai-like"
    default_base_url = "https://api.openai.com/v1"
    env_prefix = "OPENAI"

    def complete(self, spec: ModelSpec, request: ChatRequest) -> AdapterResult:
        body = self._post(
            f"{self._base_url()}/chat/completions",
            headers={"Authorization": f"Bearer {self._api_key()}"},
            payload={
                "model": spec.model_id,
                "messages": [{"role": m.role, "content": m.content} for m in request.messages],
                "temperature": request.temperature,
            },
        )
        try:
            content = body["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise TransportFailure(f"{self.name}: malformed completion body") from exc
        usage = body.get("usage") or {}
        return AdapterResult(
            content=content,
            input_tokens=usage.get("prompt_tokens"),
            output_tokens=usage.get("completion_tokens"),
        )


class GroqLikeAdapter(OpenAiLikeAdapter):
    # Groq exposes an OpenAI-compatible surface under its own host/keys.
    name = "groq-like"
    default_base_url = "https://api.groq.com/openai/v1"
    env_prefix = "GROQ"


class AnthropicLikeAdapter(_HttpAdapter):
    name = "anthropic-like"
    default_base_url = "https://api.anthropic.com"
    env_prefix = "ANTHROPIC"

    def complete(self, spec: ModelSpec, request: ChatRequest) -> AdapterResult:
        system = request.messages[0].content
        turns = [
            {"role": m.role, "content": m.content}
            for m in request.messages[1:]
        ]
        body = self._post(
            f"{self._base_url()}/v1/messages",
            headers={
                "x-api-key": self._api_key(),
                "anthropic-version": "2023-06-01",
            },
            payload={
                "model": spec.model_id,
                "system": system,
                "messages": turns,
                "temperature": request.temperature,
                "max_tokens": 4096,
            },
        )
        try:
            content = "".join(
                block["text"] for block in body["content"] if block.get("type") == "text"
            )
        except (KeyError, TypeError) as exc:
            raise TransportFailure(f"{self.name}: malformed completion body") from exc
        usage = body.get("usage") or {}
        return AdapterResult(
            content=content,
            input_tokens=usage.get("input_tokens"),
            output_tokens=usage.get("output_tokens"),
        )


class CohereLikeAdapter(_HttpAdapter):
    name = "cohere-like"
    default_base_url = "https://api.cohere.com"
    env_prefix = "COHERE"

    def complete(self, spec: ModelSpec, request: ChatRequest) -> AdapterResult:
        body = self._post(
            f"{self._base_url()}/v2/chat",
            headers={"Authorization": f"Bearer {self._api_key()}"},
            payload={
                "model": spec.model_id,
                "messages": [{"role": m.role, "content": m.content} for m in request.messages],
                "temperature": request.temperature,
            },
        )
        try:
            content = "".join(
                block["text"]
                for block in body["message"]["content"]
                if block.get("type") == "text"
            )
        except (KeyError, TypeError) as exc:
            raise TransportFailure(f"{self.name}: malformed completion body") from exc
        tokens = (body.get("usage") or {}).get("billed_units") or {}
        return AdapterResult(
            content=content,
            input_tokens=tokens.get("input_tokens"),
            output_tokens=tokens.get("output_tokens"),
        )
