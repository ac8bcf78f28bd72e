"""Cost reports and PDF transcript export."""

from .cost import (
    BudgetStatus,
    CostReport,
    CostRow,
    check_budget,
    collect_month_ledgers,
    compute_cost,
    token_cost,
)
from .transcript import (
    SECTION_HEADINGS,
    SECTIONS,
    TranscriptLayout,
    build_title,
    render_transcript_pdf,
)

__all__ = [
    "BudgetStatus",
    "CostReport",
    "CostRow",
    "SECTIONS",
    "SECTION_HEADINGS",
    "TranscriptLayout",
    "build_title",
    "check_budget",
    "collect_month_ledgers",
    "compute_cost",
    "render_transcript_pdf",
    "token_cost",
]
