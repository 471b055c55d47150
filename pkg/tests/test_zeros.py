import pytest

from binarray import RangeError, catalan, make_array
from binarray.zeros import (
    ballot_diagonal, c_sequence, c_sequence_scan, cg_initial_condition, generalized_catalan,
    generate, near_zero_cg, near_zero_cg_scan, near_zero_cg_sum, predicted_linear_zeros,
    proper_zeros, scan_proper_zeros, shapiro_entry, shapiro_recurrence, shapiro_row,
    skew_diagonal_zeros, skew_near_zero, skew_near_zero_scan,
)


def test_catalan_near_zero():
    A = make_array([1, -1])
    for t in range(1, 13):
        assert A.entry(t, 2 * t) == catalan(t)
    assert A.entry(12, 24) == 208012


def test_b1minusx_zeros():
    A = make_array([1, -1])
    assert scan_proper_zeros(A, 8, -8, 16) == [(t, 2 * t - 1) for t in range(1, 9)]


def test_linear_prediction():
    assert predicted_linear_zeros(1, -1, 6, -6, 6) == [(1, 1), (2, 3), (3, 5)]
    assert predicted_linear_zeros(2, 1, 6, -6, 6) == []


@pytest.mark.parametrize("r, s", [(1, 1), (1, 2), (2, 3), (3, 1), (2, 5)])
def test_proper_zeros_right(r, s):
    assert proper_zeros(r, s, 12, (-14, 14)).matches


@pytest.mark.parametrize("r, s", [(1, 2), (1, 3), (2, 3), (2, 5)])
def test_proper_zeros_left(r, s):
    locus = proper_zeros(r, s, 12, (-14, 14), side="left")
    assert locus.matches
    assert {(-k, -n) for k, n in locus.literal} >= set(locus.positions)


def test_proper_zeros_needs_nonzero():
    with pytest.raises(RangeError):
        proper_zeros(0, 1, 5, (-3, 3))


def test_generalized_catalan():
    assert [generalized_catalan(1, 1, t) for t in range(1, 7)] == [catalan(t) for t in range(1, 7)]
    assert generate("fuss", {"r": 2}, count=5) == [1, 3, 12, 55, 273]
    assert generalized_catalan(1, 2, 3) == 42


def test_skew_diagonal():
    locus = skew_diagonal_zeros([1, 0, -1], 4)
    assert locus.matches
    assert locus.positions[:3] == ((1, 0), (2, 2), (3, 4))


def test_shapiro():
    assert shapiro_row(4) == [14, 14, 6, 1]
    assert shapiro_entry(6, 1) == 132
    assert shapiro_entry(5, 3) == 27
    assert shapiro_entry(5, 1) == 42
    for n in range(2, 10):
        for k in range(1, n + 1):
            assert shapiro_recurrence(n, k) == shapiro_entry(n, k)


def test_cg_initial_condition():
    assert cg_initial_condition(3, 1).prefix(2) == (3, -3)


@pytest.mark.parametrize("m, k", [(3, 1), (5, 1), (5, 3), (7, 3), (9, 5)])
def test_cg_near_zero(m, k):
    for t in range(1, 7):
        assert near_zero_cg(m, k, t) == near_zero_cg_scan(m, k, t) == near_zero_cg_sum(m, k, t)


def test_c_sequence():
    for j in range(1, 7):
        for t in range(1, 7):
            assert c_sequence(j, t) == c_sequence_scan(j, t)


def test_ballot():
    assert [ballot_diagonal(0, l) for l in range(5)] == [catalan(l) for l in range(5)]


def test_skew_near_zero():
    d = [1, 2, -2, -1]
    for t in range(1, 6):
        assert skew_near_zero(d, t) == skew_near_zero_scan(d, t)


def test_generate():
    assert generate("catalan", {}, count=5) == [1, 1, 2, 5, 14]
    assert generate("crs", {"r": 1, "s": 1}, count=4) == [1, 2, 5, 14]
    with pytest.raises(RangeError):
        generate("nope", {})
