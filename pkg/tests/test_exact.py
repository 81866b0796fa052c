"""Exact convolution rows and the independent enumeration cross-check."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnomial import (
    EnumerationCapExceeded,
    Params,
    central_coefficient,
    expand_power,
    multinomial_direct,
)


def test_power_one_is_the_polynomial_itself():
    assert expand_power(Params(1, 1)).coeffs == (1, 1, 1)


def test_trinomial_square_row():
    # [1,1,1] * [1,1,1] by hand
    assert expand_power(Params(1, 2)).coeffs == (1, 2, 3, 2, 1)


def test_pentanomial_square_row():
    # two all-ones rows of length 5 by hand
    assert expand_power(Params(2, 2)).coeffs == (1, 2, 3, 4, 5, 4, 3, 2, 1)


def test_power_zero_collapses_to_unit_row():
    assert expand_power(Params(3, 0)).coeffs == (1,)


def test_central_trinomial_square():
    assert central_coefficient(Params(1, 2)) == 3


def test_central_any_first_power_is_one():
    for k in range(1, 5):
        assert central_coefficient(Params(k, 1)) == 1


def test_central_trinomial_fifth_power():
    # prefix of the central trinomial sequence: 1, 1, 3, 7, 19, 51
    assert central_coefficient(Params(1, 5)) == 51


def test_table_central_property():
    table = expand_power(Params(2, 3))
    assert table.central == table.coeffs[6]


def test_row_structure_on_grid():
    for k in range(1, 5):
        for n in range(0, 13):
            p = Params(k, n)
            row = expand_power(p).coeffs
            assert len(row) == p.degree + 1
            assert row[0] == row[p.degree] == 1
            assert row == row[::-1]
            assert sum(row) == p.width**n
            if n >= 1:
                assert row[1] == n


def test_strategies_produce_identical_rows():
    for k in range(1, 4):
        for n in range(0, 11):
            p = Params(k, n)
            assert (
                expand_power(p, strategy="iterative").coeffs
                == expand_power(p, strategy="binary").coeffs
            )


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        expand_power(Params(1, 2), strategy="fft")


def test_multinomial_central_tuples():
    # (n0,n1,n2) = (1,0,1) contributes 2!/(1!0!1!) = 2, (0,2,0) contributes 1
    assert multinomial_direct(Params(1, 2), 2) == 3


def test_multinomial_leading_tuple():
    assert multinomial_direct(Params(1, 2), 0) == 1


def test_multinomial_matches_hand_convolution():
    assert multinomial_direct(Params(2, 2), 4) == 5


def test_multinomial_equals_convolution_everywhere():
    # full oracle-equivalence grid; the enumeration prunes enough to stay fast
    for k in range(1, 5):
        for n in range(1, 13):
            p = Params(k, n)
            row = expand_power(p).coeffs
            for l in range(p.degree + 1):
                assert multinomial_direct(p, l) == row[l], (k, n, l)


def test_multinomial_range_errors():
    with pytest.raises(ValueError):
        multinomial_direct(Params(1, 2), -1)
    with pytest.raises(ValueError):
        multinomial_direct(Params(1, 2), 5)


def test_enumeration_cap_trips():
    with pytest.raises(EnumerationCapExceeded):
        multinomial_direct(Params(3, 8), 24, cap=50)


@given(k=st.integers(1, 4), n=st.integers(0, 25))
@settings(max_examples=40, deadline=None)
def test_row_invariants_fuzzed(k, n):
    p = Params(k, n)
    row = expand_power(p).coeffs
    assert row == row[::-1]
    assert sum(row) == p.width**n
    assert all(c >= 1 for c in row)


@given(k=st.integers(1, 3), n=st.integers(0, 12))
@settings(max_examples=30, deadline=None)
def test_binary_strategy_fuzzed(k, n):
    p = Params(k, n)
    assert expand_power(p, "binary").coeffs == expand_power(p, "iterative").coeffs
