"""Context-window truncation for the manual-append protocol.

When the reconstructed conversation would not fit a model's window, the
oldest (user, assistant) pairs are dropped, never the system prompt and
never the newest user message, until the estimator-counted total fits
``context_window - reserved_output``. Alternation is preserved because
drops happen only in whole pairs from the front.
"""

from __future__ import annotations

from ..errors import ContextOverflowError
from ..gateway.messages import Message
from ..gateway.tokens import estimate_tokens

DEFAULT_RESERVED_OUTPUT = 1024


def truncate_for_context(
    system: Message,
    history: list[Message],
    new_user: Message,
    context_window: int,
    reserved_output: int = DEFAULT_RESERVED_OUTPUT,
) -> list[Message]:
    budget = context_window - reserved_output
    base = estimate_tokens(system.content) + estimate_tokens(new_user.content)
    if base > budget:
        raise ContextOverflowError(
            f"system prompt and new message alone are ~{base} tokens, over the "
            f"{budget}-token budget (window {context_window} minus "
            f"{reserved_output} reserved for output)",
            details={
                "limit": context_window,
                "reserved_output": reserved_output,
                "estimated_tokens": base,
            },
        )

    pairs = [history[i:i + 2] for i in range(0, len(history), 2)]
    pair_costs = [sum(estimate_tokens(m.content) for m in pair) for pair in pairs]
    total = base + sum(pair_costs)
    drop = 0
    while total > budget and drop < len(pairs):
        total -= pair_costs[drop]
        drop += 1

    kept: list[Message] = [system]
    for pair in pairs[drop:]:
        kept.extend(pair)
    kept.append(new_user)
    return kept
