"""Basis model of the highest-weight-n representation V(n) of SL(2).

A vector is stored by its coordinates in the basis ``phi, f phi, ..., f^n phi``.
Only the lowering operator ``f``, the sign involution ``S`` and ``B_f = 1 + f``
are modelled; that is all the convolution pairing needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ZERO, ScalarLike, scalar
from .errors import DimensionError, RangeError
from .transform import cauchy_product, dwyer_frankel_check


@dataclass(frozen=True)
class RepVector:
    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise RangeError("highest weight must be non-negative")
        coeffs = tuple(scalar(c) for c in self.coeffs)
        if len(coeffs) != self.n + 1:
            raise DimensionError(f"V({self.n}) needs {self.n + 1} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def basis(cls, n: int, k: int) -> "RepVector":
        """``f^k phi`` in ``V(n)``."""
        if not 0 <= k <= n:
            raise RangeError("basis index out of range")
        return cls(n, tuple(Fraction(int(i == k)) for i in range(n + 1)))

    @classmethod
    def from_polynomial(cls, p: Sequence[ScalarLike], n: int) -> "RepVector":
        """``p(f) phi``; the degree of ``p`` must not exceed ``n``."""
        coeffs = [scalar(c) for c in p]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > n + 1:
            raise RangeError(f"polynomial of degree {len(coeffs) - 1} exceeds n = {n}")
        return cls(n, tuple(coeffs) + (ZERO,) * (n + 1 - len(coeffs)))

    def __add__(self, other: "RepVector") -> "RepVector":
        _same_space(self, other)
        return RepVector(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RepVector") -> "RepVector":
        _same_space(self, other)
        return RepVector(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, r: ScalarLike) -> "RepVector":
        r = scalar(r)
        return RepVector(self.n, tuple(r * a for a in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _same_space(u: RepVector, v: RepVector) -> None:
    if u.n != v.n:
        raise DimensionError(f"vectors live in V({u.n}) and V({v.n})")


def f_action(v: RepVector) -> RepVector:
    """Apply ``f``: ``f^k phi -> f^(k+1) phi`` with ``f^(n+1) phi = 0``."""
    return RepVector(v.n, (ZERO,) + v.coeffs[:-1])


def s_involution(v: RepVector) -> RepVector:
    return RepVector(v.n, tuple((-1) ** k * c for k, c in enumerate(v.coeffs)))


def invariant_form(u: RepVector, v: RepVector) -> Fraction:
    """Invariant form normalized by ``<f^n phi, phi> = 1``:
    ``<f^l phi, f^k phi> = (-1)^k`` when ``l = n - k``, else 0."""
    _same_space(u, v)
    n = u.n
    return sum(((-1) ** k * u.coeffs[n - k] * v.coeffs[k] for k in range(n + 1)), ZERO)


def primed_form(u: RepVector, v: RepVector) -> Fraction:
    """``<u, S v>``: the anti-diagonal pairing ``sum_k u_(n-k) v_k``."""
    _same_space(u, v)
    return invariant_form(u, s_involution(v))


def b_f(v: RepVector) -> RepVector:
    """``B_f v = (1 + f) v``."""
    return v + f_action(v)


def b_f_inverse(v: RepVector) -> RepVector:
    """``(1 - f + f^2 - ... + (-f)^n) v``."""
    total = v
    term = v
    for _ in range(v.n):
        term = f_action(term).scale(-1)
        total = total + term
    return total


def pairing_check(p: Sequence[ScalarLike], q: Sequence[ScalarLike],
                  n: int) -> tuple[Fraction, Fraction, Fraction, bool]:
    """``<<B p, B^-1 q>>_n``, ``<<p, q>>_n`` and ``[X^n] p q``; all three agree."""
    u = RepVector.from_polynomial(p, n)
    v = RepVector.from_polynomial(q, n)
    lhs = primed_form(b_f(u), b_f_inverse(v))
    mid = primed_form(u, v)
    rhs = cauchy_product(u.coeffs, v.coeffs, n)
    return lhs, mid, rhs, lhs == mid == rhs


def pairing_matches_convolution(p: Sequence[ScalarLike], q: Sequence[ScalarLike], n: int) -> bool:
    """The pairing at weight ``n`` equals the shifted convolution at index ``n``."""
    u = RepVector.from_polynomial(p, n)
    v = RepVector.from_polynomial(q, n)
    lhs, _, _, ok = pairing_check(p, q, n)
    df_lhs, df_rhs, df_ok = dwyer_frankel_check(u.coeffs, v.coeffs, 1, n)
    return ok and df_ok and lhs == df_lhs == df_rhs
