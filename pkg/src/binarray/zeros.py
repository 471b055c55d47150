"""Zero loci, palindromic structure and the Catalan-type near-zero sequences.

Closed forms here are claims; each has a scan counterpart that reads the
entry straight out of the relevant binomial array so the two can be compared.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .array import BinomialArray, make_array
from .core import ZERO, InitialSequence, ScalarLike, as_initial, binomial, binomial_int, catalan
from .errors import NotApplicable, RangeError, UnsupportedError

Position = tuple[int, int]


@dataclass(frozen=True)
class ZeroLocus:
    """Zeros found by scanning, next to the zeros a formula predicts."""

    family: str
    positions: tuple[Position, ...]
    predicted: tuple[Position, ...]
    literal: tuple[Position, ...] | None = None
    note: str = ""

    @property
    def matches(self) -> bool:
        return set(self.positions) == set(self.predicted)


@dataclass(frozen=True)
class NearZeroSeq:
    """Values ``c_t = a_{u+tv, w+tv'}`` running beside a progression of zeros."""

    values: tuple[Fraction, ...]
    anchor: str
    start: Position
    step: Position
    zero_start: Position
    zeros_confirmed: bool = field(default=True)


# -- degree-one arrays ----------------------------------------------------------

def _normalize_linear(c0: int, c1: int) -> tuple[int, int]:
    if c0 == 0 or c1 == 0:
        raise RangeError("r and s must be nonzero")
    d = math.gcd(c0, c1)
    c0, c1 = c0 // d, c1 // d
    if c0 < 0:
        c0, c1 = -c0, -c1
    return c0, c1


def predicted_linear_zeros(c0: int, c1: int, k_max: int, n_min: int, n_max: int) -> list[Position]:
    """Proper zeros of ``B(c1 x + c0)`` predicted from the degree-one analysis.

    After dividing out the gcd and making the constant positive: with slope
    ``-s < 0`` the zeros are ``(lr, l(r+s) - 1)``; with slope ``s > r`` they
    are ``(lr, l(r-s) - 1)``; otherwise there are none (``l >= 1``).
    """
    r, c = _normalize_linear(c0, c1)
    if 0 < c <= r:
        return []
    # c = -s gives n = l(r+s) - 1; c = s > r gives n = l(r-s) - 1
    return [(l * r, l * (r - c) - 1) for l in range(1, k_max // r + 1)
            if n_min <= l * (r - c) - 1 <= n_max]


def scan_proper_zeros(A: BinomialArray, k_max: int, n_min: int, n_max: int) -> list[Position]:
    """Zeros among the proper values of a polynomial array inside a window.

    A column that is a polynomial of degree ``d`` (every ``n >= 0``, and
    ``n < 0`` when ``(1+x)^-n`` divides ``p``) has proper rows ``0..d``; in a
    column that is an infinite series every row is proper.
    """
    A.require_polynomial()
    w = A.window(0, k_max, n_min, n_max)
    out = []
    for n in range(n_min, n_max + 1):
        try:
            top = min(k_max, len(A.column_polynomial(n)) - 1)
        except UnsupportedError:
            top = k_max
        for k in range(top + 1):
            if w.at(k, n) == 0:
                out.append((k, n))
    return out


def proper_zeros(r: int, s: int, k_max: int, n_range: tuple[int, int],
                 side: str = "right") -> ZeroLocus:
    """Zeros of ``B(-sx + r)`` (``side="right"``) or ``B(sx + r)`` (``side="left"``).

    The left-hand clause as stated, ``n = l(r-s)+1, k = lr, l <= -1``, puts
    every zero at a negative row; it is kept in ``literal`` for comparison
    with the scan, and the prediction uses the parametrization the scan fits.
    """
    if r == 0 or s == 0:
        raise RangeError("r and s must be nonzero")
    if side not in ("right", "left"):
        raise RangeError("side must be 'right' or 'left'")
    n_min, n_max = n_range
    slope = -s if side == "right" else s
    A = make_array([r, slope])
    positions = scan_proper_zeros(A, k_max, n_min, n_max)
    predicted = predicted_linear_zeros(r, slope, k_max, n_min, n_max)
    literal = None
    if side == "left":
        rr, ss = _normalize_linear(r, s)
        # kept verbatim, negative rows included, so a report can show them
        literal = tuple((l * rr, l * (rr - ss) + 1) for l in range(-1, -(k_max // rr) - 1, -1)
                        if rr < ss)
    tag = "RightHand" if side == "right" else "LeftHand"
    return ZeroLocus(f"{tag}({r},{s})", tuple(positions), tuple(predicted), literal)


# -- Catalan generalizations ------------------------------------------------------

def generalized_catalan(r: int, s: int, t: int) -> Fraction:
    """``C_t^(r,s) = (1/t) C(rt+st, rt+1)``, checked against ``(r+s)/(rt+1) C(rt+st-1, rt)``."""
    if r < 1 or s < 1 or t < 1:
        raise RangeError("r, s and t must be positive")
    first = Fraction(binomial_int(r * t + s * t, r * t + 1), t)
    second = Fraction(r + s, r * t + 1) * binomial_int(r * t + s * t - 1, r * t)
    if first != second or first.denominator != 1:  # pragma: no cover
        raise AssertionError(f"generalized Catalan forms disagree at {(r, s, t)}")
    return first


def is_palindromic(p: InitialSequence | Sequence[ScalarLike]) -> bool:
    a = as_initial(p).coefficients
    return all(a[k] == a[len(a) - 1 - k] for k in range(len(a)))


def is_skew_palindromic(p: InitialSequence | Sequence[ScalarLike]) -> bool:
    """True for the zero polynomial as well, by convention."""
    a = as_initial(p).coefficients
    return all(a[k] == -a[len(a) - 1 - k] for k in range(len(a)))


def skew_diagonal_zeros(p: InitialSequence | Sequence[ScalarLike], t_max: int) -> ZeroLocus:
    """Diagonal zeros forced by a skew-palindromic initial condition.

    Degree ``2l`` gives zeros at ``(l+k, 2k)``, degree ``2l+1`` at ``(l+k+1, 2k+1)``.
    """
    p = as_initial(p)
    if p.degree is None or not is_skew_palindromic(p):
        raise NotApplicable("needs a nonzero skew-palindromic polynomial")
    m = p.degree
    l = m // 2
    if m % 2 == 0:
        predicted = [(l + k, 2 * k) for k in range(t_max + 1)]
    else:
        predicted = [(l + k + 1, 2 * k + 1) for k in range(t_max + 1)]
    A = make_array(p)
    found = [pos for pos in predicted if A.entry(*pos) == 0]
    return ZeroLocus(f"SkewDiagonal({m})", tuple(found), tuple(predicted))


def near_zero_sequence(A: BinomialArray, start: Position, step: Position, zero_start: Position,
                       count: int, anchor: str = "") -> NearZeroSeq:
    """Read ``count`` values of a progression and confirm its companion zeros."""
    (u, w), (v, v2), (zu, zw) = start, step, zero_start
    if max(abs(u - zu), abs(w - zw)) != 1:
        raise RangeError("near-zero offset must be exactly 1")
    values = tuple(A.entry(u + t * v, w + t * v2) for t in range(count))
    zeros = all(A.entry(zu + t * v, zw + t * v2) == 0 for t in range(count))
    return NearZeroSeq(values, anchor, start, step, zero_start, zeros)


def cg_initial_condition(m: int, k: int) -> InitialSequence:
    """Top row of the Clebsch-Gordan hexagon ``M(m, m, k)``:
    ``a_i = (-1)^i C(m-i, k-i) C(m-k+i, i)`` for ``0 <= i <= k``."""
    if not 0 < k < m:
        raise RangeError("needs 0 < k < m")
    return InitialSequence(tuple(
        (-1) ** i * binomial(m - i, k - i) * binomial_int(m - k + i, i) for i in range(k + 1)))


def aeration(r: int, s: int) -> InitialSequence:
    """Coefficients of ``(1 - x^r)^s``."""
    if r < 1 or s < 1:
        raise RangeError("r and s must be positive")
    coeffs = [ZERO] * (r * s + 1)
    for j in range(s + 1):
        coeffs[r * j] = Fraction((-1) ** j * binomial_int(s, j))
    return InitialSequence(tuple(coeffs))


def _shapiro(n: int, k: int) -> Fraction:
    if n < 1 or k < 1 or k > n:
        return ZERO
    return Fraction(k, n) * binomial_int(2 * n, n - k)


def shapiro_entry(n: int, k: int) -> Fraction:
    """``B_{n,k} = (k/n) C(2n, n-k)``, Shapiro's Catalan triangle."""
    if not 1 <= k <= n:
        raise RangeError("needs 1 <= k <= n")
    return _shapiro(n, k)


def shapiro_recurrence(n: int, k: int) -> Fraction:
    """``B_{n-1,k-1} + 2 B_{n-1,k} + B_{n-1,k+1}`` (zero outside the triangle)."""
    if n == 1:
        return Fraction(1) if k == 1 else ZERO
    return _shapiro(n - 1, k - 1) + 2 * _shapiro(n - 1, k) + _shapiro(n - 1, k + 1)


def shapiro_row(n: int) -> list[Fraction]:
    return [shapiro_entry(n, k) for k in range(1, n + 1)]


def _cg_parts(m: int, k: int) -> int:
    if k % 2 == 0 or not 1 <= k < m:
        raise RangeError("needs odd k with 1 <= k < m")
    return (k - 1) // 2


def near_zero_cg(m: int, k: int, t: int) -> Fraction:
    """``C_t(m, k)``: the value right of the ``t``-th diagonal zero of ``M(m, m, k)``.

    Uses extended binomials, so the vanishing band needs no special case.
    """
    kp = _cg_parts(m, k)
    if t < 1:
        raise RangeError("needs t >= 1")
    return ((m - kp) * binomial(m - kp - 1, kp) * binomial_int(t + 2 * kp - m, kp)
            / binomial_int(t + kp + 1, kp) * catalan(t))


def near_zero_cg_initial(m: int, k: int) -> Fraction:
    """Closed form for ``C_1(m, k)``."""
    kp = _cg_parts(m, k)
    return ((-1) ** kp * Fraction(2, kp + 2) * binomial_int(m - kp - 2, kp)
            * binomial_int(m - kp, kp + 1))


def near_zero_cg_ratio(m: int, k: int, t: int) -> Fraction | None:
    """Ratio ``C_{t+1}(m,k) / C_t(m,k)`` from the recurrence; None where it is undefined."""
    kp = _cg_parts(m, k)
    den = (t + kp + 2) * (m - t - kp - 1)
    if den == 0:
        return None
    return Fraction(2 * (2 * t + 1) * (m - t - k), den)


def near_zero_cg_sum(m: int, k: int, t: int) -> Fraction:
    """Alternating-sum expression for ``C_t(m, k)``."""
    kp = _cg_parts(m, k)
    return sum(((-1) ** l * binomial_int(2 * t, kp + t - l) * binomial(m - l, k - l)
                * binomial_int(m - k + l, l) for l in range(k + 1)), ZERO)


def near_zero_cg_scan(m: int, k: int, t: int) -> Fraction:
    """Entry ``(k'+t, 2t)`` of ``B(cg_initial_condition(m, k))``."""
    kp = _cg_parts(m, k)
    return make_array(cg_initial_condition(m, k)).entry(kp + t, 2 * t)


def ballot_diagonal(r: int, l: int) -> Fraction:
    """``(r+1)/(r+l+1) C(r+2l, l)``, the entry ``(l, r+2l)`` of ``B(1-x)``."""
    if r < 0 or l < 0:
        raise RangeError("needs r, l >= 0")
    return Fraction(r + 1, r + l + 1) * binomial_int(r + 2 * l, l)


def c_sequence(j: int, t: int) -> Fraction:
    """Value right of a diagonal zero of ``B(1 - x^j)``.

    Odd ``j = 2i+1`` (``t >= 1``): ``(2i+1)/(t+i+1) C(2t, t-i)``, with ``c_1 = C_t``.
    Even ``j = 2i`` (``t >= 0``): ``2i/(t+i+1) C(2t+1, t-i+1)``, with ``c_2 = C_{t+1}``.
    """
    if j < 1:
        raise RangeError("needs j >= 1")
    if j % 2:
        if t < 1:
            raise RangeError("odd j needs t >= 1")
        i = (j - 1) // 2
        if i == 0:
            return catalan(t)
        return Fraction(2 * i + 1, t + i + 1) * binomial_int(2 * t, t - i)
    if t < 0:
        raise RangeError("even j needs t >= 0")
    i = j // 2
    if i == 1:
        return catalan(t + 1)
    return Fraction(2 * i, t + i + 1) * binomial_int(2 * t + 1, t - i + 1)


def c_sequence_position(j: int, t: int) -> Position:
    """Coordinates in ``B(1 - x^j)`` of the value ``c_j(t)``."""
    i = j // 2
    return (i + t, 2 * t) if j % 2 else (i + t, 2 * t + 1)


def c_sequence_scan(j: int, t: int) -> Fraction:
    return make_array([1] + [0] * (j - 1) + [-1]).entry(*c_sequence_position(j, t))


def skew_near_zero(d: InitialSequence | Sequence[ScalarLike], t: int) -> Fraction:
    """``D_t = sum_{i<=m'} d_i c_{m-2i}(t)`` for skew-palindromic ``d`` of odd degree."""
    d = as_initial(d)
    m = d.degree
    if m is None or m % 2 == 0 or not is_skew_palindromic(d):
        raise NotApplicable("needs a skew-palindromic polynomial of odd degree")
    if t < 1:
        raise RangeError("needs t >= 1")
    mp = (m - 1) // 2
    return sum((d.term(i) * c_sequence(m - 2 * i, t) for i in range(mp + 1)), ZERO)


def skew_near_zero_scan(d: InitialSequence | Sequence[ScalarLike], t: int) -> Fraction:
    d = as_initial(d)
    if d.degree is None:
        raise NotApplicable("needs a nonzero polynomial")
    mp = (d.degree - 1) // 2
    return make_array(d).entry(mp + t, 2 * t)


# -- named sequence registry ----------------------------------------------------

@dataclass(frozen=True)
class SequenceFamily:
    name: str
    params: tuple[str, ...]
    generate: Callable[..., list[Fraction]]
    help: str


def _count(count: int | None, default: int | None = None) -> int:
    if count is None:
        if default is None:
            raise RangeError("this family needs a count")
        return default
    if count < 0:
        raise RangeError("count must be non-negative")
    return count


REGISTRY: dict[str, SequenceFamily] = {}


def _register(name: str, params: tuple[str, ...], help: str):
    def deco(fn: Callable[..., list[Fraction]]):
        REGISTRY[name] = SequenceFamily(name, params, fn, help)
        return fn
    return deco


@_register("catalan", (), "C_0, C_1, ...")
def _seq_catalan(count=None):
    return [catalan(t) for t in range(_count(count))]


@_register("crs", ("r", "s"), "C_t^(r,s) for t = 1, 2, ...")
def _seq_crs(r, s, count=None):
    return [generalized_catalan(r, s, t) for t in range(1, _count(count) + 1)]


@_register("fuss", ("r",), "Fuss-Catalan C_t^(r,1) for t = 1, 2, ...")
def _seq_fuss(r, count=None):
    return _seq_crs(r, 1, count)


@_register("c-seq", ("j",), "c_j(t) from t = 1 (odd j) or t = 0 (even j)")
def _seq_c(j, count=None):
    first = 1 if j % 2 else 0
    return [c_sequence(j, t) for t in range(first, first + _count(count))]


@_register("shapiro-row", ("n",), "row n of Shapiro's Catalan triangle, k = 1..n")
def _seq_shapiro(n, count=None):
    row = shapiro_row(n)
    return row if count is None else row[:count]


@_register("ballot", ("r",), "ballot diagonal (r+1)/(r+l+1) C(r+2l, l) for l = 0, 1, ...")
def _seq_ballot(r, count=None):
    return [ballot_diagonal(r, l) for l in range(_count(count))]


@_register("cg-initial", ("m", "k"), "top row of the hexagon M(m, m, k)")
def _seq_cg_initial(m, k, count=None):
    row = list(cg_initial_condition(m, k).padded(k + 1))
    return row if count is None else row[:count]


@_register("aeration", ("r", "s"), "coefficients of (1 - x^r)^s")
def _seq_aeration(r, s, count=None):
    row = list(aeration(r, s).coefficients)
    return row if count is None else row[:count]


@_register("near-zero-cg", ("m", "k"), "C_t(m, k) for t = 1, 2, ...")
def _seq_cg(m, k, count=None):
    return [near_zero_cg(m, k, t) for t in range(1, _count(count) + 1)]


def generate(name: str, params: dict[str, int], count: int | None = None) -> list[Fraction]:
    """Terms of a registered family; unknown names or parameters raise RangeError."""
    fam = REGISTRY.get(name)
    if fam is None:
        raise RangeError(f"unknown family {name!r}; known: {', '.join(sorted(REGISTRY))}")
    missing = set(fam.params) - set(params)
    extra = set(params) - set(fam.params)
    if missing or extra:
        raise RangeError(f"family {name!r} takes parameters {list(fam.params)}")
    return fam.generate(*(params[p] for p in fam.params), count=count)


def convolution_power(seq: Sequence[Fraction], power: int, length: int) -> list[Fraction]:
    """``seq`` convolved with itself ``power`` times, first ``length`` terms."""
    out = [Fraction(1)] + [ZERO] * (length - 1)
    for _ in range(power):
        out = [sum((out[i] * seq[m - i] for i in range(m + 1)), ZERO) for m in range(length)]
    return out


def catalan_prefix(length: int) -> list[Fraction]:
    return [catalan(t) for t in range(length)]

