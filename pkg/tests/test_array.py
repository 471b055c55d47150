from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binarray import (
    BinomialArray, InvariantError, UnsupportedError, Window, binomial, border_profile, diff_table,
    entry, linear_combination, make_array, pascal_basis, reverse_involution, shift_origin,
    taylor_at_minus_one, trapezoid_interchange,
)

coeffs = st.lists(st.integers(-9, 9), min_size=1, max_size=7)


def test_entries():
    assert entry(make_array([1, -1]), 3, 6) == 5
    assert entry(pascal_basis(0), 2, -3) == 6
    assert entry(make_array([1, -1]), 1, -1) == -2
    assert entry(make_array([3, -2]), 0, -5) == 3


def test_next_column():
    w = make_array([1, 6, 15, 20, 29]).window(0, 4, 0, 1)
    assert w.column(1) == [1, 7, 21, 35, 49]


def test_extended_pascal_is_p0():
    P = pascal_basis(0)
    for n in range(-8, 9):
        for k in range(10):
            assert P.entry(k, n) == binomial(n, k)


def test_pascal_basis():
    P2 = pascal_basis(2)
    assert P2.entry(3, 4) == 4
    assert P2.entry(1, 4) == 0
    assert P2.column(0, 4) == [0, 0, 1, 0]


def test_linear_combination():
    diff = linear_combination([(1, pascal_basis(0)), (-1, pascal_basis(1))])
    assert diff.window(0, 5, -3, 3) == make_array([1, -1]).window(0, 5, -3, 3)
    total = linear_combination([(1, make_array([1, -1])), (1, make_array([0, 1]))])
    assert total.window(0, 5, -3, 3) == pascal_basis(0).window(0, 5, -3, 3)


def test_shift_origin():
    A = shift_origin(make_array([1, -1]), 1)
    assert A.column(0, 4) == [1, 0, -1, 0]
    assert A.entry(2, 3) == make_array([1, -1]).entry(2, 4)


def test_shift_left_gives_series():
    A = shift_origin(make_array([1, 2]), -1)
    assert not A.is_polynomial
    assert A.column(0, 4) == [1, 1, -1, 1]
    with pytest.raises(UnsupportedError):
        A.require_polynomial()


def test_taylor_at_minus_one():
    assert taylor_at_minus_one([2, 5, 1, -6]) == [4, -15, 19, -6]
    assert taylor_at_minus_one([-6, 1, 5, 2]) == [-4, -3, -1, 2]


def test_diff_table_rows():
    rows = diff_table(make_array([2, 5, 1, -6])).rows()
    assert rows[:4] == [[2] * 5, [-1, 1, 3, 5], [-3, -2, 1], [-4, -6]]


def test_diff_table_reflect():
    t = diff_table(make_array([2, 5, 1, -6])).reflect()
    assert t.rows()[:4] == [[2] * 5, [-5, -3, -1, 1], [1, -2, -3], [6, 4]]


def test_reverse_involution():
    assert reverse_involution(make_array([2, 1, 5, -6])).column(0, 4) == [-6, 5, 1, 2]


def test_trapezoid():
    assert trapezoid_interchange(make_array([1, -1])).column(0, 2) == [1, 2]
    assert trapezoid_interchange(make_array([1, -2])).column(0, 2) == [1, 3]


def test_border_profile():
    assert border_profile(make_array([1, -1])) == (1, -1, 2)
    assert border_profile(make_array([1])) == (1, 1, 1)
    assert border_profile(make_array([2, 1, 5, -6])) == (2, -6, 12)
    assert border_profile(make_array([2, 5, 1, -6])) == (2, -6, 4)


def test_csv_round_trip():
    w = make_array([Fraction(1, 2), -3]).window(0, 3, -2, 2)
    assert Window.from_csv(w.to_csv()) == w
    assert w.to_csv().splitlines()[0] == "k\\n,-2,-1,0,1,2"


def test_window_rejects_broken_recurrence():
    with pytest.raises(InvariantError):
        Window(0, 1, 0, 1, ((Fraction(1), Fraction(1)), (Fraction(1), Fraction(5))))


@settings(max_examples=60, deadline=None)
@given(coeffs, st.integers(0, 6), st.integers(-6, 6))
def test_pascal_recurrence(p, k, n):
    A = make_array(p)
    assert A.entry(k + 1, n + 1) == A.entry(k + 1, n) + A.entry(k, n)


@settings(max_examples=40, deadline=None)
@given(coeffs)
def test_trapezoid_involution(p):
    A = make_array(p)
    if sum((-1) ** i * c for i, c in enumerate(p)) == 0:
        return
    twice = trapezoid_interchange(trapezoid_interchange(A))
    assert twice.column(0, len(p) + 2) == A.column(0, len(p) + 2)


@settings(max_examples=40, deadline=None)
@given(coeffs, st.integers(-4, 4))
def test_shift_composes(p, t):
    A = make_array(p)
    assert shift_origin(shift_origin(A, t), -t).window(0, 6, -3, 3) == A.window(0, 6, -3, 3)


def test_from_column_origin():
    A = BinomialArray.from_column([1, -1], origin=2)
    assert A.entry(0, 2) == 1
    assert A.entry(1, 2) == -1
