"""Service runtime wiring shared by the HTTP facade and the CLI driver.

Environment variables: DATA_DIR, BIND_ADDR, MONTHLY_BUDGET, plus the
per-provider PROVIDER_<NAME>_API_KEY credentials read by the adapters.
CHATISA_FIXED_TIME and CHATISA_ID_PREFIX pin the clock and the session-id
sequence for reproducible records (used by scripted runs and tests).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Callable

from .engine.engine import ConversationEngine
from .engine.store import SessionStore
from .errors import ConfigurationError
from .gateway.gateway import Gateway
from .gateway.registry import ModelRegistry
from .ingest.validate import DEFAULT_MAX_UPLOAD_BYTES
from .money import Money
from .prompts.library import PromptLibrary

DEFAULT_BIND_ADDR = "127.0.0.1:8080"
DEFAULT_MONTHLY_BUDGET = "250.00"


def packaged_registry_path() -> Path:
    return Path(str(resources.files("chatisa") / "data" / "models.json"))


def _clock_from_env() -> Callable[[], datetime] | None:
    fixed = os.environ.get("CHATISA_FIXED_TIME")
    if not fixed:
        return None
    try:
        instant = datetime.fromisoformat(fixed)
    except ValueError as exc:
        raise ConfigurationError(f"CHATISA_FIXED_TIME is not ISO-8601: {fixed!r}") from exc
    if instant.tzinfo is None:
        instant = instant.replace(tzinfo=timezone.utc)
    return lambda: instant


def _id_factory_from_env() -> Callable[[], str] | None:
    prefix = os.environ.get("CHATISA_ID_PREFIX")
    if not prefix:
        return None
    counter = itertools.count(1)
    return lambda: f"{prefix}{next(counter):06d}"


@dataclass
class ServiceConfig:
    registry_path: Path = field(default_factory=packaged_registry_path)
    data_dir: Path = Path("./data")
    bind_addr: str = DEFAULT_BIND_ADDR
    monthly_budget: Money = field(
        default_factory=lambda: Money.parse(DEFAULT_MONTHLY_BUDGET)
    )
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES

    @classmethod
    def from_env(cls, registry_path: str | Path | None = None,
                 data_dir: str | Path | None = None) -> "ServiceConfig":
        cfg = cls()
        if registry_path is not None:
            cfg.registry_path = Path(registry_path)
        if data_dir is not None:
            cfg.data_dir = Path(data_dir)
        elif os.environ.get("DATA_DIR"):
            cfg.data_dir = Path(os.environ["DATA_DIR"])
        if os.environ.get("BIND_ADDR"):
            cfg.bind_addr = os.environ["BIND_ADDR"]
        if os.environ.get("MONTHLY_BUDGET"):
            cfg.monthly_budget = Money.parse(os.environ["MONTHLY_BUDGET"])
        return cfg


@dataclass
class Runtime:
    config: ServiceConfig
    registry: ModelRegistry
    gateway: Gateway
    library: PromptLibrary
    store: SessionStore
    engine: ConversationEngine
    clock: Callable[[], datetime]


def build_runtime(config: ServiceConfig, *, gateway: Gateway | None = None) -> Runtime:
    registry = gateway.registry if gateway else ModelRegistry.load(config.registry_path)
    if "monthly_budget" in registry.extras:
        config.monthly_budget = Money.parse(registry.extras["monthly_budget"])
    if gateway is None:
        gateway = Gateway(registry)
    library = PromptLibrary.load()
    store = SessionStore(config.data_dir)
    clock = _clock_from_env() or (lambda: datetime.now(timezone.utc))
    engine = ConversationEngine(
        gateway, library, store,
        clock=clock,
        id_factory=_id_factory_from_env(),
    )
    return Runtime(
        config=config, registry=registry, gateway=gateway, library=library,
        store=store, engine=engine, clock=clock,
    )
