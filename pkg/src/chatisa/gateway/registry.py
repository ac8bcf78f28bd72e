"""Model registry: which models exist, who serves them, what they cost.

Loaded from a human-editable JSON config file; pricing never lives in code.
The registry is read-only after load and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path

from ..errors import ConfigurationError, NotFoundError
from ..money import Money

PROVIDERS = ("openai-like", "anthropic-like", "cohere-like", "groq-like", "mock")
TIERS = ("frontier", "light")

MIN_CONTEXT_WINDOW = 1024


@dataclass(frozen=True)
class ModelSpec:
    model_id: str
    provider: str
    tier: str
    context_window: int
    input_price: Money  # per 1,000,000 input tokens
    output_price: Money  # per 1,000,000 output tokens
    display_name: str

    def __post_init__(self):
        if self.provider not in PROVIDERS:
            raise ConfigurationError(
                f"model {self.model_id!r}: unknown provider {self.provider!r}"
            )
        if self.tier not in TIERS:
            raise ConfigurationError(
                f"model {self.model_id!r}: unknown tier {self.tier!r}"
            )
        if self.context_window < MIN_CONTEXT_WINDOW:
            raise ConfigurationError(
                f"model {self.model_id!r}: context_window {self.context_window} "
                f"below minimum {MIN_CONTEXT_WINDOW}"
            )
        if self.input_price.micros < 0 or self.output_price.micros < 0:
            raise ConfigurationError(
                f"model {self.model_id!r}: prices must be non-negative"
            )


class ModelRegistry:
    """Ordered collection of ModelSpec entries (config order is API order)."""

    def __init__(self, models: list[ModelSpec], *, extras: dict | None = None):
        self._models: dict[str, ModelSpec] = {}
        for spec in models:
            if spec.model_id in self._models:
                raise ConfigurationError(f"duplicate model_id {spec.model_id!r}")
            self._models[spec.model_id] = spec
        self.extras = extras or {}

    @classmethod
    def load(cls, path: str | Path) -> "ModelRegistry":
        path = Path(path)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"), parse_float=Decimal)
        except FileNotFoundError as exc:
            raise ConfigurationError(f"registry config not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"registry config {path} is not valid JSON: {exc}") from exc
        return cls.from_config(raw, base_dir=path.parent)

    @classmethod
    def from_config(cls, raw: dict, *, base_dir: Path | None = None) -> "ModelRegistry":
        if not isinstance(raw, dict) or not isinstance(raw.get("models", None), list):
            raise ConfigurationError("registry config must contain a 'models' array")
        models = []
        for entry in raw["models"]:
            try:
                models.append(
                    ModelSpec(
                        model_id=entry["model_id"],
                        provider=entry["provider"],
                        tier=entry["tier"],
                        context_window=int(entry["context_window"]),
                        input_price=Money.parse(entry["input_price"]),
                        output_price=Money.parse(entry["output_price"]),
                        display_name=entry.get("display_name", entry["model_id"]),
                    )
                )
            except KeyError as exc:
                raise ConfigurationError(
                    f"registry entry {entry.get('model_id', '?')!r} missing field {exc}"
                ) from exc
        extras = {k: v for k, v in raw.items() if k != "models"}
        if base_dir is not None and "mock_script" in extras:
            extras["mock_script"] = str((base_dir / extras["mock_script"]).resolve())
        return cls(models, extras=extras)

    def list_models(self, tier_filter: str | None = None) -> list[ModelSpec]:
        """All models in config order, optionally restricted to one tier."""
        if not self._models:
            raise ConfigurationError("model registry is empty")
        if tier_filter is not None and tier_filter not in TIERS:
            raise ConfigurationError(f"unknown tier filter {tier_filter!r}")
        models = list(self._models.values())
        if tier_filter is None:
            return models
        return [m for m in models if m.tier == tier_filter]

    def list_for_tiers(self, tiers) -> list[ModelSpec]:
        if not self._models:
            raise ConfigurationError("model registry is empty")
        return [m for m in self._models.values() if m.tier in tiers]

    def resolve(self, model_id: str) -> ModelSpec:
        if not self._models:
            raise ConfigurationError("model registry is empty")
        try:
            return self._models[model_id]
        except KeyError:
            raise NotFoundError(
                f"unknown model {model_id!r}",
                details={"known_models": list(self._models)},
            ) from None

    def alternates_for(self, model_id: str) -> list[str]:
        """Same-tier alternatives a user could switch to by hand."""
        spec = self.resolve(model_id)
        return [m.model_id for m in self._models.values()
                if m.tier == spec.tier and m.model_id != model_id]

    def __len__(self) -> int:
        return len(self._models)

    def __contains__(self, model_id: str) -> bool:
        return model_id in self._models
