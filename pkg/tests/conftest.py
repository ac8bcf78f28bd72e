"""Shared fixtures: mock-backed engine stacks and PDF fixture generation."""

from __future__ import annotations

import io
import json
from datetime import datetime, timezone
from pathlib import Path

import pytest
from reportlab.pdfgen import canvas as rl_canvas

from chatisa.config import packaged_registry_path
from chatisa.engine import ConversationEngine, SessionStore
from chatisa.gateway import (
    Gateway,
    MockAdapter,
    MockRule,
    MockScript,
    ModelRegistry,
)
from chatisa.prompts import PromptLibrary

MOCK_MODELS = [
    {
        "model_id": "mock-frontier",
        "provider": "mock",
        "tier": "frontier",
        "context_window": 8192,
        "input_price": "1.00",
        "output_price": "2.00",
        "display_name": "Mock Frontier",
    },
    {
        "model_id": "mock-light",
        "provider": "mock",
        "tier": "light",
        "context_window": 4096,
        "input_price": "0.10",
        "output_price": "0.20",
        "display_name": "Mock Light",
    },
    {
        "model_id": "mock-tiny",
        "provider": "mock",
        "tier": "light",
        "context_window": 1600,
        "input_price": "0.10",
        "output_price": "0.20",
        "display_name": "Mock Tiny Window",
    },
]

FIXED_TIME = datetime(2026, 8, 8, 12, 0, 0, tzinfo=timezone.utc)


def seed_config_dict() -> dict:
    return json.loads(packaged_registry_path().read_text(encoding="utf-8"))


def mock_config_dict() -> dict:
    raw = seed_config_dict()
    raw["models"] = raw["models"] + [dict(m) for m in MOCK_MODELS]
    return raw


def write_config(path: Path, raw: dict) -> Path:
    path.write_text(json.dumps(raw, indent=2), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def seed_registry() -> ModelRegistry:
    return ModelRegistry.load(packaged_registry_path())


@pytest.fixture()
def mock_registry(tmp_path) -> ModelRegistry:
    return ModelRegistry.load(write_config(tmp_path / "models.json", mock_config_dict()))


@pytest.fixture(scope="session")
def library() -> PromptLibrary:
    return PromptLibrary.load()


class EngineStack:
    """A mock-backed engine with every collaborator reachable for asserts."""

    def __init__(self, tmp_path: Path, script: MockScript | None = None,
                 clock=None, registry: ModelRegistry | None = None):
        tmp_path.mkdir(parents=True, exist_ok=True)
        config_path = write_config(tmp_path / "models.json", mock_config_dict())
        self.registry = registry or ModelRegistry.load(config_path)
        self.adapter = MockAdapter(script or MockScript(
            default=MockRule(content="OK", input_tokens=12, output_tokens=3)
        ))
        self.gateway = Gateway(self.registry, {"mock": self.adapter},
                               backoff_base=0.0)
        self.library = PromptLibrary.load()
        self.store = SessionStore(tmp_path / "data")
        self.engine = ConversationEngine(
            self.gateway, self.library, self.store,
            clock=clock or (lambda: FIXED_TIME),
        )


@pytest.fixture()
def stack(tmp_path) -> EngineStack:
    return EngineStack(tmp_path)


def make_stack(tmp_path, script=None, clock=None) -> EngineStack:
    return EngineStack(tmp_path, script=script, clock=clock)


# -- PDF fixture generation -------------------------------------------------

def make_pdf(pages: list[list[tuple[str, float]]]) -> bytes:
    """Build a PDF with known text: pages of (line_text, font_size) entries."""
    buf = io.BytesIO()
    pdf = rl_canvas.Canvas(buf)
    for lines in pages:
        y = 780.0
        for text, size in lines:
            pdf.setFont("Helvetica", size)
            pdf.drawString(72, y, text)
            y -= size * 1.6
        pdf.showPage()
    pdf.save()
    return buf.getvalue()


def make_image_only_pdf() -> bytes:
    """A page with drawings but no text layer at all."""
    buf = io.BytesIO()
    pdf = rl_canvas.Canvas(buf)
    pdf.rect(100, 100, 300, 400, fill=1)
    pdf.circle(300, 600, 50, fill=1)
    pdf.showPage()
    pdf.save()
    return buf.getvalue()


# -- acceptance reporting ----------------------------------------------------

def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in nodeid:
                name = nodeid.split("::")[-1]
                lines.append((name, outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{outcome:6s}  {name}")
