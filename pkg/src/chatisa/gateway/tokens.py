"""Local token estimator used when a provider omits usage numbers."""

from __future__ import annotations


def estimate_tokens(text: str) -> int:
    """Deterministic estimate: ceil(codepoints / 4).

    Monotone non-decreasing in text length and within +1 of subadditive,
    which is all the cost accounting and truncation logic rely on.
    """
    return (len(text) + 3) // 4
