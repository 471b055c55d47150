"""Binomial arrays: construction, entries, windows and the trapezoid symmetries.

A binomial array is indexed by a row ``k >= 0`` and a column ``n`` in Z.
Column ``n`` holds the coefficients of ``(1+x)^n p(x)`` where ``p`` is the
generating function of column 0.  Rows with ``k < 0`` are zero.
"""
from __future__ import annotations

import csv
import io
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    ZERO,
    InitialSequence,
    ScalarLike,
    as_initial,
    binomial_int,
    format_scalar,
    parse_scalar,
    scalar,
)
from .errors import InvariantError, RangeError, UnsupportedError


# -- polynomial helpers (coefficient lists, lowest order first) -----------------

def times_one_plus_x(coeffs: Sequence[Fraction], power: int = 1) -> list[Fraction]:
    """Multiply a polynomial by ``(1+x)^power`` for ``power >= 0``."""
    out = list(coeffs)
    for _ in range(power):
        out = [(out[k] if k < len(out) else ZERO) + (out[k - 1] if k > 0 else ZERO)
               for k in range(len(out) + 1)]
    return out


def divide_one_plus_x(coeffs: Sequence[Fraction]) -> tuple[list[Fraction], Fraction]:
    """Exact division of a polynomial by ``(1+x)``: (quotient, remainder).

    Quotient and remainder are both lowest order first.  Synthetic division
    at the root -1, run from the highest coefficient down.
    """
    if not coeffs:
        return [], ZERO
    high_first = list(reversed(coeffs))
    acc = [high_first[0]]
    for c in high_first[1:]:
        acc.append(c - acc[-1])
    remainder = acc.pop()
    return list(reversed(acc)), remainder


def trim(coeffs: Iterable[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


# -- the array itself -------------------------------------------------------------

@dataclass(frozen=True)
class BinomialArray:
    """Binomial array whose column ``origin`` equals ``initial``.

    ``origin`` is 0 for every array built from an initial sequence.  It is
    positive only for shifted arrays whose column 0 is an infinite series
    (for example ``(1-x)/(1+x)``); such arrays are "non-polynomial".
    The representation is canonical, so ``==`` means entrywise equality.
    """

    initial: InitialSequence
    origin: int = 0
    _memo: dict = field(default_factory=dict, compare=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, compare=False, repr=False)

    @classmethod
    def from_column(cls, column: Sequence[ScalarLike], origin: int = 0) -> "BinomialArray":
        """Array whose column ``origin`` is the given finite column."""
        coeffs = trim(scalar(c) for c in column)
        if origin < 0:
            coeffs = trim(times_one_plus_x(coeffs, -origin))
            origin = 0
        while origin > 0:
            quotient, remainder = divide_one_plus_x(coeffs)
            if remainder != 0:
                break
            coeffs = trim(quotient)
            origin -= 1
        return cls(InitialSequence(tuple(coeffs)), origin)

    # ---- basic properties

    @property
    def is_polynomial(self) -> bool:
        return self.origin == 0

    @property
    def degree(self) -> int | None:
        """Degree of column 0 when it is a polynomial, else None."""
        return self.initial.degree if self.origin == 0 else None

    def require_polynomial(self) -> int:
        """Return the degree, or raise UnsupportedError for non-polynomial arrays."""
        if self.origin != 0:
            raise UnsupportedError("array has no polynomial initial condition")
        if self.initial.degree is None:
            raise UnsupportedError("zero array has no degree")
        return self.initial.degree

    # ---- entries

    def entry(self, k: int, n: int) -> Fraction:
        """Entry ``a_{k,n}`` from the transform sums (the normative value source)."""
        if k < 0:
            return ZERO
        key = (k, n)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        e = n - self.origin
        coeffs = self.initial.coefficients
        # sum_i C(e, k-i) a_i covers both the forward (e >= 0) and inverse sums
        value = sum((binomial_int(e, k - i) * coeffs[i]
                     for i in range(min(k, len(coeffs) - 1) + 1)), ZERO)
        with self._lock:
            self._memo.setdefault(key, value)
        return value

    def column(self, n: int, rows: int) -> list[Fraction]:
        """Rows ``0..rows-1`` of column ``n``."""
        return [self.entry(k, n) for k in range(rows)]

    def column_polynomial(self, n: int) -> list[Fraction]:
        """Column ``n`` as a finite coefficient list; needs the column to be finite."""
        if n < self.origin:
            if self.origin != 0:
                raise UnsupportedError(f"column {n} is an infinite series")
            # left of column 0 a polynomial column is an infinite series too,
            # unless (1+x)^(-n) divides it
            column = list(self.initial.coefficients)
            for _ in range(self.origin - n):
                column, rem = divide_one_plus_x(column)
                if rem != 0:
                    raise UnsupportedError(f"column {n} is an infinite series")
            return trim(column)
        return trim(times_one_plus_x(self.initial.coefficients, n - self.origin))

    # ---- windows (Pascal fill)

    def window(self, k_min: int, k_max: int, n_min: int, n_max: int) -> "Window":
        """Materialize rows ``k_min..k_max`` and columns ``n_min..n_max``.

        Filled by Pascal's recurrence outward from one closed-form column.
        """
        if not (0 <= k_min <= k_max) or n_min > n_max:
            raise RangeError(f"invalid window rows {k_min}..{k_max} cols {n_min}..{n_max}")
        start = min(max(self.origin, n_min), n_max)
        height = k_max + 1
        cols: dict[int, list[Fraction]] = {start: self.column(start, height)}
        for n in range(start, n_max):
            prev = cols[n]
            cols[n + 1] = [prev[k] + (prev[k - 1] if k > 0 else ZERO) for k in range(height)]
        for n in range(start, n_min, -1):
            right = cols[n]
            left: list[Fraction] = []
            for k in range(height):
                left.append(right[k] - (left[k - 1] if k > 0 else ZERO))
            cols[n - 1] = left
        values = tuple(tuple(cols[n][k] for n in range(n_min, n_max + 1))
                       for k in range(k_min, k_max + 1))
        return Window(k_min, k_max, n_min, n_max, values)

    def __str__(self) -> str:
        if self.origin == 0:
            return f"B{self.initial}"
        return f"B{self.initial}@{self.origin}"


def make_array(initial: InitialSequence | Sequence[ScalarLike]) -> BinomialArray:
    return BinomialArray(as_initial(initial))


def entry(A: BinomialArray, k: int, n: int) -> Fraction:
    return A.entry(k, n)


def window(A: BinomialArray, k_min: int, k_max: int, n_min: int, n_max: int) -> "Window":
    return A.window(k_min, k_max, n_min, n_max)


def pascal_basis(j: int) -> BinomialArray:
    """``P(j) = B(e^j)``: Pascal's triangle pushed down to start at row ``j``."""
    if j < 0:
        raise RangeError("basis index must be non-negative")
    return make_array([0] * j + [1])


def linear_combination(terms: Sequence[tuple[ScalarLike, BinomialArray]]) -> BinomialArray:
    """Entrywise linear combination ``sum r_j A_j``."""
    if not terms:
        raise RangeError("linear combination needs at least one term")
    origin = max(A.origin for _, A in terms)
    total: list[Fraction] = []
    for r, A in terms:
        column = A.column_polynomial(origin)
        if len(column) > len(total):
            total.extend([ZERO] * (len(column) - len(total)))
        rr = scalar(r)
        for i, c in enumerate(column):
            total[i] += rr * c
    return BinomialArray.from_column(total, origin)


def shift_origin(A: BinomialArray, t: int) -> BinomialArray:
    """Array with ``entry(result, k, n) == entry(A, k, n + t)``."""
    return BinomialArray.from_column(A.initial.coefficients, A.origin - t)


# -- windows -------------------------------------------------------------------------

class _WindowAudit:
    """Global tally of materialized windows; every one is Pascal-checked."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.windows = 0
        self.cells_checked = 0
        self.violations = 0

    def record(self, cells: int, violated: bool = False) -> None:
        with self._lock:
            self.windows += 1
            self.cells_checked += cells
            self.violations += int(violated)

    def snapshot(self) -> tuple[int, int, int]:
        """(windows, cells checked, windows that broke the recurrence)."""
        with self._lock:
            return self.windows, self.cells_checked, self.violations


WINDOW_AUDIT = _WindowAudit()

CSV_CORNER = "k\\n"  # header cell: rows k down, columns n across


@dataclass(frozen=True)
class Window:
    """Dense block of entries, rows ``k_min..k_max`` by columns ``n_min..n_max``."""

    k_min: int
    k_max: int
    n_min: int
    n_max: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = self.k_max - self.k_min + 1
        cols = self.n_max - self.n_min + 1
        if self.k_min < 0 or rows < 1 or cols < 1:
            raise RangeError("window ranges are empty or start above row 0")
        if len(self.values) != rows or any(len(r) != cols for r in self.values):
            raise InvariantError(f"window grid is not {rows}x{cols}")
        self._check_pascal()

    def _check_pascal(self) -> None:
        v = self.values
        checked = 0
        if self.k_min == 0:
            top = v[0]
            for j in range(1, len(top)):
                if top[j] != top[0]:
                    WINDOW_AUDIT.record(checked, violated=True)
                    raise InvariantError(f"top line not constant at column {self.n_min + j}")
                checked += 1
        for i in range(1, len(v)):
            upper, row = v[i - 1], v[i]
            for j in range(len(row) - 1):
                if row[j + 1] != upper[j] + row[j]:
                    k, n = self.k_min + i, self.n_min + j
                    WINDOW_AUDIT.record(checked, violated=True)
                    raise InvariantError(f"Pascal recurrence fails at ({k}, {n + 1})")
                checked += 1
        WINDOW_AUDIT.record(checked)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.values), len(self.values[0])

    def at(self, k: int, n: int) -> Fraction:
        if not (self.k_min <= k <= self.k_max and self.n_min <= n <= self.n_max):
            raise RangeError(f"({k}, {n}) lies outside the window")
        return self.values[k - self.k_min][n - self.n_min]

    def column(self, n: int) -> list[Fraction]:
        j = n - self.n_min
        if not 0 <= j < self.shape[1]:
            raise RangeError(f"column {n} lies outside the window")
        return [row[j] for row in self.values]

    def row(self, k: int) -> list[Fraction]:
        i = k - self.k_min
        if not 0 <= i < self.shape[0]:
            raise RangeError(f"row {k} lies outside the window")
        return list(self.values[i])

    def to_csv(self) -> str:
        lines = [",".join([CSV_CORNER] + [str(n) for n in range(self.n_min, self.n_max + 1)])]
        for i, row in enumerate(self.values):
            lines.append(",".join([str(self.k_min + i)] + [format_scalar(x) for x in row]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "Window":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or not rows[0] or rows[0][0] not in (CSV_CORNER, "k"):
            raise RangeError(f"window CSV must start with a {CSV_CORNER!r} header cell")
        cols = [int(c) for c in rows[0][1:]]
        body = [r for r in rows[1:] if r]
        if not cols or not body:
            raise RangeError("window CSV has no cells")
        ks = [int(r[0]) for r in body]
        if cols != list(range(cols[0], cols[0] + len(cols))) or \
                ks != list(range(ks[0], ks[0] + len(ks))):
            raise RangeError("window CSV indices must be consecutive")
        values = tuple(tuple(parse_scalar(c) for c in r[1:]) for r in body)
        return cls(ks[0], ks[-1], cols[0], cols[-1], values)

    def to_ascii(self) -> str:
        header = ["k\\n"] + [str(n) for n in range(self.n_min, self.n_max + 1)]
        body = [[str(self.k_min + i)] + [format_scalar(x) for x in row]
                for i, row in enumerate(self.values)]
        width = max(len(cell) for line in [header] + body for cell in line)
        return "\n".join(" ".join(cell.rjust(width) for cell in line)
                         for line in [header] + body) + "\n"


# -- difference tables and symmetries -------------------------------------------

@dataclass(frozen=True)
class DiffTable:
    """Triangle joining the two trapezoids of a degree-``m`` array.

    ``columns[j]`` is column ``-j`` of the array, rows ``0..m+1-j``.  Apart
    from its last entry it lists the ``j``-th quotient of dividing ``p*`` by
    ``(x+1)`` (highest order first); the last entry is the remainder.
    ``left_edge`` holds those remainders, i.e. the Taylor coefficients of
    ``p*`` at ``x = -1`` lowest order first.
    """

    degree: int
    columns: tuple[tuple[Fraction, ...], ...]
    left_edge: tuple[Fraction, ...]

    def rows(self) -> list[list[Fraction]]:
        """Row ``k`` runs over columns ``-(m+1-k)..0`` as the figures print it."""
        m = self.degree
        return [[self.columns[j][k] for j in range(m + 1 - k, -1, -1)] for k in range(m + 2)]

    def reflect(self) -> "DiffTable":
        """Reverse every row and multiply row ``k`` by ``(-1)^k``."""
        m = self.degree
        new_rows = [[(-1) ** k * x for x in reversed(row)] for k, row in enumerate(self.rows())]
        columns = tuple(tuple(new_rows[k][m + 1 - k - j] for k in range(m + 2 - j))
                        for j in range(m + 2))
        left_edge = tuple(columns[j][-1] for j in range(1, m + 2))
        return DiffTable(m, columns, left_edge)

    def reconstruct(self) -> list[Fraction]:
        """Coefficients (lowest first) of ``sum left_edge[j] (x+1)^j``."""
        out = [ZERO] * (self.degree + 1)
        for j, c in enumerate(self.left_edge):
            for i, b in enumerate(times_one_plus_x([Fraction(1)], j)):
                out[i] += c * b
        return out


def diff_table(A: BinomialArray) -> DiffTable:
    m = A.require_polynomial()
    w = A.window(0, m + 1, -(m + 1), 0)
    columns = tuple(tuple(w.at(k, -j) for k in range(m + 2 - j)) for j in range(m + 2))
    left_edge = tuple(columns[j][-1] for j in range(1, m + 2))
    return DiffTable(m, columns, left_edge)


def taylor_at_minus_one(p: InitialSequence | Sequence[ScalarLike]) -> list[Fraction]:
    """Coefficients ``c_j`` with ``p(x) = sum c_j (x+1)^j``, lowest order first."""
    p = as_initial(p)
    if p.degree is None:
        raise UnsupportedError("zero polynomial has no degree")
    a = p.coefficients
    # p(x) = sum a_i ((x+1) - 1)^i
    return [sum((a[i] * binomial_int(i, j) * (-1) ** (i - j) for i in range(j, len(a))), ZERO)
            for j in range(len(a))]


def reverse_involution(A: BinomialArray) -> BinomialArray:
    """``B(p*)`` with ``p*(x) = x^m p(1/x)``; reverses every column ``n >= 0``."""
    m = A.require_polynomial()
    return make_array(tuple(reversed(A.initial.padded(m + 1))))


def trapezoid_interchange(A: BinomialArray) -> BinomialArray:
    """Array whose difference table is the row-reflection of ``A``'s.

    Entrywise ``entry(R, k, n) == (-1)^k entry(A, k, k - m - 1 - n)``.
    """
    m = A.require_polynomial()
    reflected = diff_table(A).reflect()
    assert reflected.degree == m
    return make_array(reflected.columns[0][:-1])


def border_profile(A: BinomialArray) -> tuple[Fraction, Fraction, Fraction]:
    """(top line value, lower-right diagonal value, |column -1| past row m)."""
    m = A.require_polynomial()
    a = A.initial.coefficients
    alternating = sum(((-1) ** i * a[i] for i in range(m + 1)), ZERO)
    return a[0], a[m], abs(alternating)
