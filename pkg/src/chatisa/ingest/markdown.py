"""PDF course materials and resumes to markdown for prompt bindings.

Reading order is recovered by grouping runs into lines (top to bottom, left
to right), page boundaries become horizontal rules, and a line set in a
dominant font size above 1.3x the document median becomes a heading. Only
PDFs with a readable text layer are accepted; image-only scans are rejected
with a distinct error so the UI can ask for a readable PDF.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import median

from ..errors import ChatIsaError, PdfParseError, UnreadableDocumentError
from .pdfparse import TextRun, extract_runs

HEADING_RATIO = 1.3
LINE_TOLERANCE = 2.0  # points of y-drift allowed within one visual line
PAGE_RULE = "\n\n---\n\n"


@dataclass(frozen=True)
class MarkdownDocument:
    markdown: str
    page_count: int
    char_count: int
    source_name: str


def _group_lines(runs: list[TextRun]) -> list[list[TextRun]]:
    lines: list[list[TextRun]] = []
    for run in sorted(runs, key=lambda r: (-r.y, r.x)):
        if lines and abs(lines[-1][0].y - run.y) <= LINE_TOLERANCE:
            lines[-1].append(run)
        else:
            lines.append([run])
    return lines


def _dominant_size(line: list[TextRun]) -> float:
    weights: dict[float, int] = {}
    for run in line:
        weights[run.size] = weights.get(run.size, 0) + len(run.text)
    return max(weights, key=lambda size: (weights[size], size))


def _line_text(line: list[TextRun]) -> str:
    return " ".join(run.text.strip() for run in sorted(line, key=lambda r: r.x)
                    if run.text.strip())


def extract_markdown(pdf_bytes: bytes, source_name: str) -> MarkdownDocument:
    """Convert PDF bytes to markdown. Raises PdfParseError for broken bytes
    and UnreadableDocumentError when there is no text layer to extract."""
    try:
        runs, page_count = extract_runs(pdf_bytes)
    except ChatIsaError:
        raise
    except Exception as exc:  # any parser surprise is a parse error, not a crash
        raise PdfParseError(f"could not parse PDF: {exc}") from exc

    if page_count < 1:
        raise PdfParseError("document has no pages")

    runs = [r for r in runs if r.text.strip()]
    if not runs:
        raise UnreadableDocumentError(
            "no extractable text; please provide a readable PDF "
            "(image-only scans are not supported)"
        )

    doc_median = median(size for run in runs for size in [run.size] * len(run.text))

    page_chunks: list[str] = []
    for page in range(page_count):
        page_lines = []
        for line in _group_lines([r for r in runs if r.page == page]):
            text = _line_text(line)
            if not text:
                continue
            if _dominant_size(line) > HEADING_RATIO * doc_median:
                text = f"# {text}"
            page_lines.append(text)
        page_chunks.append("\n".join(page_lines))

    markdown = PAGE_RULE.join(page_chunks)
    return MarkdownDocument(
        markdown=markdown,
        page_count=page_count,
        char_count=len(markdown),
        source_name=source_name,
    )
