"""Exact scalars, extended binomial coefficients and initial sequences.

Every value in the package is a :class:`fractions.Fraction` in canonical
reduced form.  Integer-valued results still carry denominator 1.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import RangeError

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or canonical string to a Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot make a scalar from {type(value).__name__}")


def format_scalar(x: Fraction) -> str:
    """Serialize: ``-12`` for integers, ``p/q`` (reduced, q > 1) otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text: str) -> Fraction:
    """Inverse of :func:`format_scalar`.  Accepts non-reduced ``p/q`` too."""
    s = text.strip()
    if not s:
        raise RangeError("empty scalar")
    num, sep, den = s.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise RangeError(f"malformed scalar {text!r}") from exc


def parse_scalar_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as ``"1,-1,3/2"``."""
    text = text.strip()
    if not text:
        return []
    return [parse_scalar(part) for part in text.split(",")]


@lru_cache(maxsize=None)
def _binomial_int(n: int, k: int) -> int:
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    # (1+x)^n for n < 0: (-1)^k C(-n+k-1, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def binomial(n: int, k: int) -> Fraction:
    """Extended binomial coefficient, total on Z x Z.

    ``C(n, k)`` is the usual value for ``0 <= k <= n``, the binomial-series
    coefficient ``(-1)^k C(-n+k-1, k)`` for ``n < 0 <= k``, and 0 otherwise.

    >>> binomial(-2, 3)
    Fraction(-4, 1)
    """
    return Fraction(_binomial_int(n, k))


def binomial_int(n: int, k: int) -> int:
    """Integer form of :func:`binomial` for hot inner loops."""
    return _binomial_int(n, k)


_catalan_lock = threading.Lock()
_catalan_memo: list[int] = [1]


def _catalan_segner(t: int) -> int:
    with _catalan_lock:
        memo = _catalan_memo
        while len(memo) <= t:
            n = len(memo) - 1
            memo.append(sum(memo[i] * memo[n - i] for i in range(n + 1)))
        return memo[t]


def catalan_closed(t: int) -> Fraction:
    """``(1/t) C(2t, t+1)`` for t >= 1, and 1 for t = 0."""
    if t < 0:
        raise RangeError("catalan index must be non-negative")
    if t == 0:
        return ONE
    return Fraction(binomial_int(2 * t, t + 1), t)


def catalan(t: int) -> Fraction:
    """Catalan number via Segner's recurrence, cross-checked with the closed form."""
    if t < 0:
        raise RangeError("catalan index must be non-negative")
    value = Fraction(_catalan_segner(t))
    if value != catalan_closed(t):  # pragma: no cover - would be an arithmetic bug
        raise AssertionError(f"Segner and closed form disagree at t={t}")
    return value


@dataclass(frozen=True)
class InitialSequence:
    """Column-0 data ``a_i`` of a binomial array: finite support, zero tail.

    Trailing zeros are stripped on construction so equality is structural.
    """

    coefficients: tuple[Fraction, ...] = ()
    tail: str = "zero"

    def __post_init__(self) -> None:
        if self.tail != "zero":
            raise RangeError(f"unknown tail rule {self.tail!r}")
        coeffs = [scalar(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *values: ScalarLike) -> "InitialSequence":
        return cls(tuple(scalar(v) for v in values))

    @classmethod
    def from_iterable(cls, values: Iterable[ScalarLike]) -> "InitialSequence":
        return cls(tuple(scalar(v) for v in values))

    @property
    def degree(self) -> int | None:
        """Index of the last nonzero coefficient, or None for the zero sequence."""
        return len(self.coefficients) - 1 if self.coefficients else None

    def term(self, i: int) -> Fraction:
        if i < 0:
            raise RangeError("initial-sequence index must be non-negative")
        return self.coefficients[i] if i < len(self.coefficients) else ZERO

    def prefix(self, length: int) -> tuple[Fraction, ...]:
        return tuple(self.term(i) for i in range(length))

    def padded(self, length: int) -> list[Fraction]:
        """Coefficients padded with zeros to at least ``length`` entries."""
        coeffs = list(self.coefficients)
        coeffs.extend([ZERO] * (length - len(coeffs)))
        return coeffs

    def __len__(self) -> int:
        return len(self.coefficients)

    def __str__(self) -> str:
        return "(" + ", ".join(format_scalar(c) for c in self.coefficients) + ")"


def term(s: InitialSequence, i: int) -> Fraction:
    return s.term(i)


def as_initial(values: InitialSequence | Sequence[ScalarLike]) -> InitialSequence:
    if isinstance(values, InitialSequence):
        return values
    return InitialSequence.from_iterable(values)
