from hypothesis import given
from hypothesis import strategies as st

from chatisa.gateway import estimate_tokens


def test_empty_string_is_zero():
    assert estimate_tokens("") == 0


def test_four_chars_is_one_token():
    assert estimate_tokens("abcd") == 1


def test_five_chars_rounds_up():
    assert estimate_tokens("abcde") == 2


def test_counts_codepoints_not_bytes():
    # four codepoints even though UTF-8 needs more bytes
    assert estimate_tokens("éééé") == 1


@given(st.text(), st.text())
def test_subadditive_within_one(a, b):
    assert estimate_tokens(a + b) <= estimate_tokens(a) + estimate_tokens(b) + 1


@given(st.text(), st.text())
def test_monotone_in_length(a, b):
    assert estimate_tokens(a + b) >= estimate_tokens(a)
