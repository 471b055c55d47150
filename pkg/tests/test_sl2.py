import random

import pytest

from binarray import (
    DimensionError, RangeError, RepVector, b_f, b_f_inverse, cauchy_product, f_action,
    invariant_form, pairing_check, primed_form, s_involution,
)
from binarray.sl2 import pairing_matches_convolution


def phi(n):
    return RepVector.basis(n, 0)


def test_form_values():
    f = f_action
    assert invariant_form(f(f(phi(2))), phi(2)) == 1
    assert invariant_form(f(phi(2)), f(phi(2))) == -1
    assert primed_form(f(phi(2)), f(phi(2))) == 1
    assert primed_form(phi(1), phi(1)) == 0


def test_pairing_example():
    assert pairing_check([1, 1, 1], [1, 1, 1], 2) == (3, 3, 3, True)


def test_f_is_nilpotent():
    v = RepVector(3, (1, 2, 3, 4))
    for _ in range(4):
        v = f_action(v)
    assert v.is_zero


def test_s_is_involution():
    v = RepVector(4, (1, -2, 3, 5, 7))
    assert s_involution(s_involution(v)) == v


def test_b_f_inverse():
    v = RepVector(5, (2, 0, -1, 4, 1, 3))
    assert b_f_inverse(b_f(v)) == v
    assert b_f(b_f_inverse(v)) == v


def test_random_pairings():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(0, 10)
        p = [rng.randint(-9, 9) for _ in range(rng.randint(1, n + 1))]
        q = [rng.randint(-9, 9) for _ in range(rng.randint(1, n + 1))]
        lhs, mid, rhs, ok = pairing_check(p, q, n)
        assert ok
        pad = lambda s: s + [0] * (n + 1 - len(s))
        assert rhs == cauchy_product(pad(p), pad(q), n)
        assert pairing_matches_convolution(p, q, n)


def test_errors():
    with pytest.raises(DimensionError):
        RepVector(2, (1, 2))
    with pytest.raises(RangeError):
        RepVector.from_polynomial([1, 2, 3], 1)
    with pytest.raises(DimensionError):
        invariant_form(phi(1), phi(2))
