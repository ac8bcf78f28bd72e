import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chatisa.engine import truncate_for_context
from chatisa.errors import ContextOverflowError
from chatisa.gateway import Message, estimate_tokens


def oracle_truncate(system, history, new_user, window, reserved):
    """Brute force: smallest k dropped pairs satisfying the budget bound."""
    budget = window - reserved
    pairs = [history[i:i + 2] for i in range(0, len(history), 2)]
    for k in range(len(pairs) + 1):
        kept = [m for pair in pairs[k:] for m in pair]
        total = sum(estimate_tokens(m.content) for m in [system, *kept, new_user])
        if total <= budget:
            return [system, *kept, new_user]
    return None  # irreducible


def _history(sizes):
    out = []
    for i, size in enumerate(sizes):
        role = "user" if i % 2 == 0 else "assistant"
        out.append(Message(role, "m" * size))
    return out


SYSTEM = Message("system", "s" * 40)
NEW_USER = Message("user", "u" * 40)


def test_everything_fits_is_a_no_op():
    history = _history([20, 20, 20, 20])
    result = truncate_for_context(SYSTEM, history, NEW_USER, 4096, 1024)
    assert result == [SYSTEM, *history, NEW_USER]


def test_window_forcing_one_drop_matches_oracle():
    history = _history([400, 400, 40, 40])  # oldest pair is the heavy one
    window, reserved = 1024 + 200, 1024
    result = truncate_for_context(SYSTEM, history, NEW_USER, window, reserved)
    expected = oracle_truncate(SYSTEM, history, NEW_USER, window, reserved)
    assert result == expected
    assert result == [SYSTEM, *history[2:], NEW_USER]
    roles = [m.role for m in result]
    assert roles == ["system", "user", "assistant", "user"]


def test_new_user_alone_exceeding_window_raises():
    big = Message("user", "u" * 8000)
    with pytest.raises(ContextOverflowError) as err:
        truncate_for_context(SYSTEM, [], big, 2048, 1024)
    assert err.value.details["limit"] == 2048


def test_system_prompt_is_never_dropped():
    history = _history([4000, 4000])
    result = truncate_for_context(SYSTEM, history, NEW_USER, 1200, 1024)
    assert result[0] is SYSTEM
    assert result[-1] is NEW_USER


def test_randomized_histories_match_oracle():
    rng = random.Random(7)
    for _ in range(300):
        n_pairs = rng.randint(0, 8)
        history = _history([rng.randint(1, 600) for _ in range(2 * n_pairs)])
        window = rng.randint(1100, 2400)
        expected = oracle_truncate(SYSTEM, history, NEW_USER, window, 1024)
        if expected is None:
            with pytest.raises(ContextOverflowError):
                truncate_for_context(SYSTEM, history, NEW_USER, window, 1024)
        else:
            got = truncate_for_context(SYSTEM, history, NEW_USER, window, 1024)
            assert got == expected


@given(
    sizes=st.lists(st.integers(min_value=1, max_value=500),
                   min_size=0, max_size=12).map(lambda xs: xs[:len(xs) // 2 * 2]),
    window=st.integers(min_value=1100, max_value=4096),
)
def test_result_always_alternates_and_fits(sizes, window):
    history = _history(sizes)
    budget = window - 1024
    base = estimate_tokens(SYSTEM.content) + estimate_tokens(NEW_USER.content)
    if base > budget:
        with pytest.raises(ContextOverflowError):
            truncate_for_context(SYSTEM, history, NEW_USER, window, 1024)
        return
    result = truncate_for_context(SYSTEM, history, NEW_USER, window, 1024)
    assert result[0].role == "system"
    assert result[-1].role == "user"
    for i, msg in enumerate(result[1:], start=1):
        assert msg.role == ("user" if (i - 1) % 2 == 0 else "assistant")
    assert sum(estimate_tokens(m.content) for m in result) <= budget
