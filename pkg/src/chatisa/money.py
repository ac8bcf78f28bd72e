"""Fixed-point money in integer micro-units.

Per-1M-token prices make sub-cent amounts routine, so money is stored as an
integer count of millionths of the configured currency unit. Binary floating
point never touches an amount; parsing and arithmetic go through Decimal or
plain integers, and display rounds half-even to six decimals.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, ROUND_HALF_EVEN

from .errors import ValidationError

_MICRO = Decimal("0.000001")
MICROS_PER_UNIT = 1_000_000


@dataclass(frozen=True, order=True)
class Money:
    """An exact amount: ``micros`` millionths of the currency unit."""

    micros: int

    @classmethod
    def parse(cls, text: str | int | Decimal) -> "Money":
        """Parse a config-file amount (string or exact number) to micro-units.

        Rejects amounts finer than six decimals rather than silently rounding:
        prices live in a human-edited file and a typo should fail loudly.
        """
        if isinstance(text, float):
            raise ValidationError(
                "money must be given as a string or exact decimal, not a float"
            )
        try:
            value = Decimal(text) if not isinstance(text, Decimal) else text
        except InvalidOperation as exc:
            raise ValidationError(f"not a money amount: {text!r}") from exc
        scaled = value.scaleb(6)
        if scaled != scaled.to_integral_value():
            raise ValidationError(
                f"money amount {text!r} has more than six decimal places"
            )
        return cls(int(scaled))

    @classmethod
    def from_decimal(cls, value: Decimal) -> "Money":
        """Quantize an exact Decimal amount to micro-units, half-even."""
        return cls(int(value.quantize(_MICRO, rounding=ROUND_HALF_EVEN).scaleb(6)))

    def as_decimal(self) -> Decimal:
        return Decimal(self.micros).scaleb(-6)

    def __add__(self, other: "Money") -> "Money":
        return Money(self.micros + other.micros)

    def __str__(self) -> str:
        sign = "-" if self.micros < 0 else ""
        units, frac = divmod(abs(self.micros), MICROS_PER_UNIT)
        return f"{sign}{units}.{frac:06d}"


ZERO = Money(0)
