"""Session transcript export as a PDF document.

The exported record always carries, in order: an auto-generated title, a
purpose section listing every model used, a note on the output style and
layout, the token/cost breakdown, the full conversation with each message
prefixed by its role (code fences set in a monospaced face), and finally
the session's custom instructions (its rendered system prompt).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from datetime import date, datetime
from importlib import resources
from typing import Callable

from reportlab.lib.pagesizes import letter
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfgen import canvas

from ..engine.session import Session
from ..errors import NothingToExportError, ValidationError
from ..gateway.registry import ModelRegistry
from .cost import CostReport, compute_cost

SECTIONS = (
    "purpose",
    "style_and_layout",
    "token_cost_breakdown",
    "full_transcript",
    "custom_instructions",
)

SECTION_HEADINGS = {
    "purpose": "ChatISA's Purpose",
    "style_and_layout": "ChatISA's PDF Output Style and Layout",
    "token_cost_breakdown": "Token Counts and Cost Breakdown",
    "full_transcript": "Full Transcript",
    "custom_instructions": "Custom Instructions",
}

_PAGE_W, _PAGE_H = letter
_MARGIN = 72.0
_BODY = ("Helvetica", 10)
_CODE = ("Courier", 9)
_HEADING = ("Helvetica-Bold", 13)
_TITLE = ("Helvetica-Bold", 16)
_LEADING = 13.0


@dataclass(frozen=True)
class TranscriptLayout:
    title: str
    sections: tuple[str, ...] = SECTIONS

    def __post_init__(self):
        if self.sections != SECTIONS:
            raise ValidationError("transcript section order is fixed")


def build_title(student_name: str, when: date | datetime) -> str:
    if not student_name or not student_name.strip():
        raise ValidationError("student name must not be empty")
    if isinstance(when, datetime):
        when = when.date()
    return f"{student_name}'s Interaction with ChatISA on {when.isoformat()}"


def _boilerplate(name: str) -> str:
    root = resources.files("chatisa.prompts") / "assets"
    return (root / name).read_text(encoding="utf-8").strip()


def _sanitize(text: str) -> str:
    # The built-in Type1 fonts cover WinAnsi only.
    return text.encode("cp1252", errors="replace").decode("cp1252")


class _Writer:
    """Tiny top-down text layout over a reportlab canvas."""

    def __init__(self, pdf: canvas.Canvas):
        self.pdf = pdf
        self.y = _PAGE_H - _MARGIN
        self.width = _PAGE_W - 2 * _MARGIN

    def _ensure_room(self) -> None:
        if self.y < _MARGIN + _LEADING:
            self.pdf.showPage()
            self.y = _PAGE_H - _MARGIN

    def line(self, text: str, font=_BODY) -> None:
        self._ensure_room()
        self.pdf.setFont(*font)
        self.pdf.drawString(_MARGIN, self.y, _sanitize(text))
        self.y -= _LEADING

    def gap(self, points: float = _LEADING) -> None:
        self.y -= points

    def wrapped(self, text: str, font=_BODY) -> None:
        name, size = font
        for raw_line in text.split("\n"):
            if not raw_line.strip():
                self.gap()
                continue
            for piece in self._wrap(raw_line, name, size):
                self.line(piece, font)

    def _wrap(self, text: str, name: str, size: float) -> list[str]:
        words = text.split(" ")
        lines: list[str] = []
        current = ""
        for word in words:
            while pdfmetrics.stringWidth(word, name, size) > self.width:
                head, word = self._split_word(word, name, size)
                if current:
                    lines.append(current)
                    current = ""
                lines.append(head)
            candidate = f"{current} {word}".strip()
            if pdfmetrics.stringWidth(candidate, name, size) <= self.width:
                current = candidate
            else:
                if current:
                    lines.append(current)
                current = word
        if current or not lines:
            lines.append(current)
        return lines

    def _split_word(self, word: str, name: str, size: float) -> tuple[str, str]:
        for cut in range(len(word), 0, -1):
            if pdfmetrics.stringWidth(word[:cut], name, size) <= self.width:
                return word[:cut], word[cut:]
        return word[:1], word[1:]


def _write_message(writer: _Writer, role: str, content: str) -> None:
    writer.line(f"{role.capitalize()}:", ("Helvetica-Bold", 10))
    in_code = False
    for raw_line in content.split("\n"):
        if raw_line.strip().startswith("```"):
            writer.wrapped(raw_line, _CODE)
            in_code = not in_code
        else:
            writer.wrapped(raw_line if raw_line.strip() else "", _CODE if in_code else _BODY)
    writer.gap()


def _write_cost_section(writer: _Writer, report: CostReport) -> None:
    for row in report.rows:
        writer.wrapped(
            f"{row.model_id}: input {row.input_tokens} tokens (${row.input_cost}), "
            f"output {row.output_tokens} tokens (${row.output_cost})"
        )
    writer.wrapped(f"Total cost: ${report.total_cost}")
    if report.any_estimated:
        writer.wrapped(
            "Some token counts were estimated locally because the provider "
            "did not report usage."
        )


def render_transcript_pdf(
    session: Session,
    student_name: str,
    course_number: str,
    registry: ModelRegistry,
    clock: Callable[[], datetime],
) -> bytes:
    """Render the transcript to PDF 1.x bytes. Requires a completed turn."""
    if session.turn_count < 1:
        raise NothingToExportError(
            f"session {session.session_id} has no completed turns to export"
        )
    if not course_number or not course_number.strip():
        raise ValidationError("course number must not be empty")

    layout = TranscriptLayout(title=build_title(student_name, clock()))
    report = compute_cost(session.usage, registry)

    buf = io.BytesIO()
    pdf = canvas.Canvas(buf, pagesize=letter)
    pdf.setTitle(layout.title)
    writer = _Writer(pdf)

    writer.wrapped(layout.title, _TITLE)
    writer.wrapped(f"Course: {course_number}")
    writer.gap()

    for section in layout.sections:
        writer.line(SECTION_HEADINGS[section], _HEADING)
        writer.gap(4)
        if section == "purpose":
            writer.wrapped(_boilerplate("transcript_purpose.md"))
            writer.wrapped("Models used: " + ", ".join(session.models_used()))
        elif section == "style_and_layout":
            writer.wrapped(_boilerplate("transcript_style.md"))
        elif section == "token_cost_breakdown":
            _write_cost_section(writer, report)
        elif section == "full_transcript":
            for message in session.history:
                _write_message(writer, message.role, message.content)
        elif section == "custom_instructions":
            writer.wrapped(session.rendered_system_prompt)
        writer.gap()

    pdf.save()
    return buf.getvalue()
