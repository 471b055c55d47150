"""Sequence-level binomial transforms and the Cauchy-product algebra.

Sequences are finite prefixes ``a_0..a_M`` (tuples of Fractions).  A value at
index ``m`` only ever reads indices ``0..m``, so prefixes of infinite series
(negative transform powers) are exact as far as they go.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .array import BinomialArray
from .core import ZERO, ScalarLike, binomial_int, scalar
from .errors import NotApplicable, RangeError

SeqVec = tuple[Fraction, ...]


def seqvec(values: Iterable[ScalarLike]) -> SeqVec:
    return tuple(scalar(v) for v in values)


def _require(a: Sequence[Fraction], m: int, name: str = "sequence") -> None:
    if m < 0:
        raise RangeError("index must be non-negative")
    if len(a) <= m:
        raise RangeError(f"{name} prefix of length {len(a)} does not cover index {m}")


def forward_transform(a: Sequence[ScalarLike], n: int) -> SeqVec:
    """``B^n a``: coefficients of ``(1+x)^n p(x)`` over the prefix of ``a``."""
    if n < 0:
        raise RangeError("forward transform power must be non-negative")
    a = seqvec(a)
    return tuple(sum((binomial_int(n, i) * a[k - i] for i in range(min(n, k) + 1)), ZERO)
                 for k in range(len(a)))


def inverse_transform(a: Sequence[ScalarLike], n: int) -> SeqVec:
    """``B^-n a``: alternating sums ``sum (-1)^i C(n+i-1, i) a_{k-i}``."""
    if n < 0:
        raise RangeError("inverse transform power must be non-negative")
    a = seqvec(a)
    if n == 0:
        return a
    return tuple(sum(((-1) ** i * binomial_int(n + i - 1, i) * a[k - i] for i in range(k + 1)), ZERO)
                 for k in range(len(a)))


def transform(a: Sequence[ScalarLike], n: int) -> SeqVec:
    """``B^n a`` for any integer ``n``."""
    return forward_transform(a, n) if n >= 0 else inverse_transform(a, -n)


def cauchy_product(a: Sequence[ScalarLike], b: Sequence[ScalarLike], m: int) -> Fraction:
    """``(a*b)_m = sum_{i=0}^m a_i b_{m-i}``."""
    _require(a, m, "a")
    _require(b, m, "b")
    return sum((scalar(a[i]) * scalar(b[m - i]) for i in range(m + 1)), ZERO)


def cauchy_sequence(a: Sequence[ScalarLike], b: Sequence[ScalarLike]) -> SeqVec:
    """Full product prefix, as long as the shorter input."""
    length = min(len(a), len(b))
    return tuple(cauchy_product(a, b, m) for m in range(length))


def e_sequence(length: int) -> SeqVec:
    """Prefix of the convolution identity ``e = (1, 0, 0, ...)``."""
    if length < 1:
        raise RangeError("length must be at least 1")
    return (Fraction(1),) + (ZERO,) * (length - 1)


def t_sequence(n: int, length: int) -> SeqVec:
    """Prefix of ``t^n``: the coefficients of ``(1+x)^n`` (a series when n < 0)."""
    if length < 1:
        raise RangeError("length must be at least 1")
    return tuple(Fraction(binomial_int(n, k)) for k in range(length))


def dwyer_frankel_check(a: Sequence[ScalarLike], b: Sequence[ScalarLike], n: int,
                        m: int) -> tuple[Fraction, Fraction, bool]:
    """``(B^n a * B^-n b)_m`` against ``(a*b)_m``."""
    _require(a, m, "a")
    _require(b, m, "b")
    a, b = seqvec(a[: m + 1]), seqvec(b[: m + 1])
    lhs = cauchy_product(transform(a, n), transform(b, -n), m)
    rhs = cauchy_product(a, b, m)
    return lhs, rhs, lhs == rhs


def vandermonde_expand(a: Sequence[ScalarLike], b: Sequence[ScalarLike], m: int,
                       n_range: Iterable[int]) -> list[tuple[int, SeqVec, SeqVec, Fraction]]:
    """Column pairs of the restricted ``B(a)`` and the 180-degree rotated ``B(b)``.

    Rotation about column 0 maps cell ``(i, n)`` to ``(m-i, -n)``; the entry
    for ``n`` pairs column ``n`` of ``B(a)`` with column ``-n`` of ``B(b)``
    read bottom-up.  Every dot product equals ``(a*b)_m``.
    """
    _require(a, m, "a")
    _require(b, m, "b")
    a, b = seqvec(a[: m + 1]), seqvec(b[: m + 1])
    out = []
    for n in n_range:
        left = transform(a, n)
        right = tuple(reversed(transform(b, -n)))
        dot = sum((x * y for x, y in zip(left, right)), ZERO)
        out.append((n, left, right, dot))
    return out


def rotated_window(b: Sequence[ScalarLike], m: int, n_min: int, n_max: int) -> list[list[Fraction]]:
    """Rows ``0..m`` of ``B(b)`` over ``-n_max..-n_min`` rotated by 180 degrees."""
    _require(b, m, "b")
    b = seqvec(b[: m + 1])
    cols = {n: transform(b, -n) for n in range(n_min, n_max + 1)}
    return [[cols[n][m - i] for n in range(n_min, n_max + 1)] for i in range(m + 1)]


def multi_factor_check(seqs: Sequence[Sequence[ScalarLike]], shifts: Sequence[int], m: int) -> bool:
    """``(B^n1 a1 * ... * B^nk ak)_m == B^(n1+...+nk)(a1 * ... * ak)_m``."""
    if len(seqs) != len(shifts) or len(seqs) < 2:
        raise RangeError("need matching lists of at least two sequences and shifts")
    for s in seqs:
        _require(s, m)
    seqs = [seqvec(s[: m + 1]) for s in seqs]
    lhs = transform(seqs[0], shifts[0])
    product = seqs[0]
    for s, n in zip(seqs[1:], shifts[1:]):
        lhs = cauchy_sequence(lhs, transform(s, n))
        product = cauchy_sequence(product, s)
    rhs = transform(product, sum(shifts))
    return lhs[m] == rhs[m]


def zero_propagation_check(a: Sequence[ScalarLike], b: Sequence[ScalarLike], m: int,
                           n_range: Iterable[int]) -> bool:
    """If ``(a*b)_m == 0`` then ``(B^n a * B^-n b)_m == 0`` for each ``n``.

    Raises NotApplicable when ``(a*b)_m`` is nonzero.
    """
    if cauchy_product(a, b, m) != 0:
        raise NotApplicable("(a*b)_m must vanish")
    return all(dwyer_frankel_check(a, b, n, m)[0] == 0 for n in n_range)


def entry_zero_propagation_check(A: BinomialArray, k: int, n: int, l_range: Iterable[int]) -> bool:
    """If ``a_{k,n} == 0`` then ``sum_i C(l, i) a_{k-i, n-l} == 0`` for each ``l``."""
    if A.entry(k, n) != 0:
        raise NotApplicable("a_{k,n} must vanish")
    return all(
        sum((binomial_int(l, i) * A.entry(k - i, n - l) for i in range(k + 1)), ZERO) == 0
        for l in l_range)


def diagonal_convolution(A: BinomialArray, B: BinomialArray, m: int, r: int, s: int,
                         t: int) -> tuple[Fraction, Fraction]:
    """Convolution along right-going diagonals, before and after a shift by ``t``."""
    if m < 0:
        raise RangeError("index must be non-negative")
    base = sum((A.entry(i, r + i) * B.entry(m - i, s - i) for i in range(m + 1)), ZERO)
    shifted = sum((A.entry(i, r + i + t) * B.entry(m - i, s - i - t) for i in range(m + 1)), ZERO)
    return base, shifted


def same_shift_check(a: Sequence[ScalarLike], b: Sequence[ScalarLike], n: int, m: int,
                     adjacent: bool = False) -> tuple[Fraction, Fraction]:
    """``(B^n a * B^n b)_m`` vs ``(a * B^2n b)_m``; with ``adjacent`` the second
    factor is ``B^(n+1) b`` and the right side ``a * B^(2n+1) b``."""
    _require(a, m, "a")
    _require(b, m, "b")
    a, b = seqvec(a[: m + 1]), seqvec(b[: m + 1])
    extra = 1 if adjacent else 0
    lhs = cauchy_product(transform(a, n), transform(b, n + extra), m)
    rhs = cauchy_product(a, transform(b, 2 * n + extra), m)
    return lhs, rhs
