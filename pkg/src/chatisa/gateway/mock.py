"""Deterministic mock provider: a first-class adapter driven by a script.

A script maps request fingerprints (the newest user message, verbatim) to
canned replies and usage numbers, with a default for everything else.
Entries may omit usage (exercising the estimator path) or inject transport
failures (exercising retries and turn atomicity). The adapter records every
request it receives so tests can assert the exact payload the provider saw.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ConfigurationError
from .adapters import ProviderAdapter, TransportFailure
from .messages import AdapterResult, ChatRequest
from .registry import ModelSpec


@dataclass
class MockRule:
    content: str = "OK"
    match: str | None = None  # None = default rule
    input_tokens: int | None = None
    output_tokens: int | None = None
    fail_times: int = 0  # raise TransportFailure this many times first
    fail_always: bool = False

    @classmethod
    def from_dict(cls, raw: dict, *, match: str | None = None) -> "MockRule":
        return cls(
            content=raw.get("content", "OK"),
            match=raw.get("match", match),
            input_tokens=raw.get("input_tokens"),
            output_tokens=raw.get("output_tokens"),
            fail_times=int(raw.get("fail_times", 0)),
            fail_always=bool(raw.get("fail_always", False)),
        )


@dataclass
class MockScript:
    rules: list[MockRule] = field(default_factory=list)
    default: MockRule = field(default_factory=MockRule)

    @classmethod
    def from_dict(cls, raw: dict) -> "MockScript":
        rules = [MockRule.from_dict(entry) for entry in raw.get("rules", [])]
        default = MockRule.from_dict(raw.get("default", {}))
        return cls(rules=rules, default=default)

    @classmethod
    def from_file(cls, path: str | Path) -> "MockScript":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError as exc:
            raise ConfigurationError(f"mock script not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"mock script {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(raw)

    def rule_for(self, fingerprint: str) -> MockRule:
        for rule in self.rules:
            if rule.match == fingerprint:
                return rule
        return self.default


class MockAdapter(ProviderAdapter):
    name = "mock"

    def __init__(self, script: MockScript | None = None):
        self.script = script or MockScript()
        self.calls: list[ChatRequest] = []
        self.attempts = 0
        self._fail_counts: dict[int, int] = {}
        self._lock = threading.Lock()

    def complete(self, spec: ModelSpec, request: ChatRequest) -> AdapterResult:
        rule = self.script.rule_for(request.messages[-1].content)
        with self._lock:
            self.attempts += 1
            self.calls.append(request)
            if rule.fail_always:
                raise TransportFailure("mock: scripted permanent failure")
            remaining = self._fail_counts.setdefault(id(rule), rule.fail_times)
            if remaining > 0:
                self._fail_counts[id(rule)] = remaining - 1
                raise TransportFailure("mock: scripted transient failure")
        return AdapterResult(
            content=rule.content,
            input_tokens=rule.input_tokens,
            output_tokens=rule.output_tokens,
        )
