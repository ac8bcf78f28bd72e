"""Cost reports and the monthly budget guard.

Costs are exact: tokens times the per-1M price, computed in Decimal and
quantized half-even to micro-units. No binary floating point touches money.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable

from ..engine.session import UsageLedger
from ..errors import ConfigurationError
from ..gateway.registry import ModelRegistry
from ..money import Money

_PER = Decimal(1_000_000)


class BudgetStatus(enum.Enum):
    OK = "ok"
    WARN = "warn"
    EXCEEDED = "exceeded"


@dataclass(frozen=True)
class CostRow:
    model_id: str
    input_tokens: int
    output_tokens: int
    input_cost: Money
    output_cost: Money


@dataclass(frozen=True)
class CostReport:
    rows: tuple[CostRow, ...]
    total_cost: Money
    any_estimated: bool


def token_cost(tokens: int, price_per_million: Money) -> Money:
    exact = Decimal(tokens) * price_per_million.as_decimal() / _PER
    return Money.from_decimal(exact)


def compute_cost(ledger: UsageLedger, registry: ModelRegistry) -> CostReport:
    """Per-model token counts and money amounts for one session ledger."""
    rows = []
    total = Money(0)
    any_estimated = False
    for model_id, usage in ledger.per_model.items():
        if model_id not in registry:
            raise ConfigurationError(
                f"ledger references model {model_id!r} absent from the registry"
            )
        spec = registry.resolve(model_id)
        input_cost = token_cost(usage.input_tokens, spec.input_price)
        output_cost = token_cost(usage.output_tokens, spec.output_price)
        rows.append(
            CostRow(model_id, usage.input_tokens, usage.output_tokens,
                    input_cost, output_cost)
        )
        total = total + input_cost + output_cost
        any_estimated = any_estimated or usage.any_estimated
    return CostReport(rows=tuple(rows), total_cost=total, any_estimated=any_estimated)


def check_budget(
    month_ledgers: Iterable[UsageLedger],
    monthly_limit: Money,
    registry: ModelRegistry,
    warn_ratio: str | Decimal = "0.8",
) -> BudgetStatus:
    """Compare one month's total spend against the configured limit."""
    if monthly_limit.micros <= 0:
        raise ConfigurationError("monthly budget limit must be positive")
    total = Money(0)
    for ledger in month_ledgers:
        total = total + compute_cost(ledger, registry).total_cost
    if total.micros > monthly_limit.micros:
        return BudgetStatus.EXCEEDED
    threshold = monthly_limit.as_decimal() * Decimal(warn_ratio)
    if total.as_decimal() >= threshold:
        return BudgetStatus.WARN
    return BudgetStatus.OK


def collect_month_ledgers(store, year: int, month: int) -> list[UsageLedger]:
    """One ledger per session, restricted to usage recorded in the month."""
    by_session: dict[str, UsageLedger] = {}
    for session_id, ts, model_id, inp, out, estimated in store.iter_usage_events():
        if (ts.year, ts.month) != (year, month):
            continue
        by_session.setdefault(session_id, UsageLedger()).add(
            model_id, inp, out, estimated
        )
    return list(by_session.values())
