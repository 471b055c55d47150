import random
from fractions import Fraction

import pytest

from binarray import (
    NotApplicable, RangeError, cauchy_product, dwyer_frankel_check, forward_transform,
    inverse_transform, make_array, transform, vandermonde_expand,
)
from binarray.transform import (
    cauchy_sequence, e_sequence, multi_factor_check, rotated_window, same_shift_check, t_sequence,
    zero_propagation_check,
)

A = (3, 4, -1, -2)
B = (2, 2, -1, -1)


def test_forward_inverse_examples():
    assert forward_transform((1, 10, 45, 120, 224), 0) == (1, 10, 45, 120, 224)
    assert inverse_transform((1, 10, 45, 120, 224), 1) == (1, 9, 36, 84, 140)
    assert forward_transform((1, -1, 0, 0, 0), 2) == (1, 1, -1, -1, 0)
    assert transform((1, -1, 0, 0, 0), -2) == (1, -3, 5, -7, 9)


def test_transform_is_a_column():
    p = (2, -1, 5)
    arr = make_array(p)
    for n in range(-5, 6):
        assert list(transform(p + (0,) * 6, n)) == arr.column(n, 9)


def test_negative_power_rejected():
    with pytest.raises(RangeError):
        forward_transform((1, 2), -1)


def test_cauchy():
    assert cauchy_product(A, B, 3) == -13
    assert cauchy_product((1, 1), (1, -1), 1) == 0
    with pytest.raises(RangeError):
        cauchy_product((1, 2), (1, 2, 3), 2)


def test_e_and_t():
    a = (5, -2, 7, 1)
    assert cauchy_sequence(a, e_sequence(4)) == a
    assert t_sequence(3, 5) == (1, 3, 3, 1, 0)
    assert t_sequence(-1, 4) == (1, -1, 1, -1)
    assert cauchy_sequence(t_sequence(4, 6), t_sequence(-4, 6)) == e_sequence(6)
    assert cauchy_sequence(t_sequence(2, 6), a + (0, 0)) == transform(a + (0, 0), 2)


def test_ring_laws():
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = ([Fraction(rng.randint(-9, 9)) for _ in range(8)] for _ in range(3))
        ab = cauchy_sequence(a, b)
        assert ab == cauchy_sequence(b, a)
        assert cauchy_sequence(ab, c) == cauchy_sequence(a, cauchy_sequence(b, c))
        bc = [x + y for x, y in zip(b, c)]
        assert cauchy_sequence(a, bc) == tuple(x + y for x, y in zip(ab, cauchy_sequence(a, c)))


def test_dwyer_frankel_random():
    rng = random.Random(11)
    for _ in range(100):
        m = rng.randint(0, 12)
        a = [rng.randint(-9, 9) for _ in range(m + 1)]
        b = [rng.randint(-9, 9) for _ in range(m + 1)]
        assert dwyer_frankel_check(a, b, rng.randint(-8, 8), m)[2]


def test_vandermonde_example():
    rows = vandermonde_expand(A, B, 3, range(-2, 3))
    assert [dot for _, _, _, dot in rows] == [-13] * 5
    n, left, right, _ = rows[2]
    assert (n, left, right) == (0, A, tuple(reversed(B)))


def test_rotated_window():
    w = rotated_window(B, 3, 0, 0)
    assert [r[0] for r in w] == [-1, -1, 2, 2]


def test_multi_factor():
    assert multi_factor_check([A, B, (1, 0, 2, 0)], [2, -1, 3], 3)


def test_zero_propagation():
    assert zero_propagation_check((1, 1), (1, -1), 1, range(-4, 5))
    with pytest.raises(NotApplicable):
        zero_propagation_check(A, B, 3, range(2))


def test_same_shift():
    lhs, rhs = same_shift_check(A, B, 2, 3)
    assert lhs == rhs
    lhs, rhs = same_shift_check(A, B, -1, 3, adjacent=True)
    assert lhs == rhs
