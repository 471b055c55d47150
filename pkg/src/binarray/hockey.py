"""The nine hockey-stick rules: six long and three short.

Each rule is a sum over a row, column or diagonal of a binomial array that
equals a single target entry.  :func:`rule_sum` evaluates both sides; a rule
whose hypotheses are not met raises :class:`NotApplicable` rather than
reporting a false identity.

Short top-line rule indexing: the sum runs over rows ``k1..k2`` of column
``n`` with alternating signs ending in ``+a_{k2,n}``, and is closed off by
``(-1)^(k2-k1+1) a_{k1-1,n-1}``.  This is the reading that reproduces
``140 = (224 - 120 + 45) - 9``.
"""
from __future__ import annotations

import enum
from fractions import Fraction

from .array import BinomialArray
from .core import ZERO
from .errors import NotApplicable, RangeError


class RuleId(str, enum.Enum):
    TOP_LINE = "top-line"
    TOP_LINE_SHORT = "top-line-short"
    LOWER_RIGHT = "lower-right"
    LOWER_RIGHT_SHORT = "lower-right-short"
    RHS_ROW = "rhs-row"
    RHS_COLUMN = "rhs-column"
    LHS_ROW = "lhs-row"
    LHS_DIAGONAL = "lhs-diagonal"
    THIRD_SHORT = "third-short"


PARAMS = {
    RuleId.TOP_LINE: ("k", "n"),
    RuleId.TOP_LINE_SHORT: ("k1", "k2", "n"),
    RuleId.LOWER_RIGHT: ("k", "n"),
    RuleId.LOWER_RIGHT_SHORT: ("k1", "k2", "n"),
    RuleId.RHS_ROW: ("k", "n"),
    RuleId.RHS_COLUMN: ("k", "n"),
    RuleId.LHS_ROW: ("k", "n"),
    RuleId.LHS_DIAGONAL: ("k", "n"),
    RuleId.THIRD_SHORT: ("k", "n1", "n2"),
}

# rules valid for every binomial array, polynomial or not
UNIVERSAL = frozenset({RuleId.TOP_LINE, RuleId.TOP_LINE_SHORT, RuleId.LOWER_RIGHT,
                       RuleId.LOWER_RIGHT_SHORT, RuleId.THIRD_SHORT})


def _edge_hypotheses(A: BinomialArray, k: int, n: int) -> int:
    if not A.is_polynomial or A.degree is None:
        raise NotApplicable("needs a polynomial initial condition")
    m = A.degree
    if n <= 0:
        raise NotApplicable("needs n > 0")
    if k <= m:
        raise NotApplicable(f"needs k > m (k={k}, m={m})")
    return m


def rule_terms(A: BinomialArray, rule: RuleId, params: tuple[int, ...]) -> tuple[list[Fraction], Fraction]:
    """Signed summands of the rule and its target entry."""
    rule = RuleId(rule)
    if len(params) != len(PARAMS[rule]):
        raise RangeError(f"{rule.value} takes parameters {PARAMS[rule]}")
    a = A.entry

    if rule is RuleId.TOP_LINE:
        k, n = params
        if k < 0:
            raise NotApplicable("needs k >= 0")
        return [(-1) ** (k - i) * a(i, n) for i in range(k, -1, -1)], a(k, n - 1)

    if rule is RuleId.TOP_LINE_SHORT:
        k1, k2, n = params
        if not 0 < k1 < k2:
            raise NotApplicable("needs 0 < k1 < k2")
        terms = [(-1) ** (k2 - i) * a(i, n) for i in range(k2, k1 - 1, -1)]
        terms.append((-1) ** (k2 - k1 + 1) * a(k1 - 1, n - 1))
        return terms, a(k2, n - 1)

    if rule is RuleId.LOWER_RIGHT:
        k, n = params
        if k < 0:
            raise NotApplicable("needs k >= 0")
        return [a(i, n + i) for i in range(k + 1)], a(k, n + k + 1)

    if rule is RuleId.LOWER_RIGHT_SHORT:
        k1, k2, n = params
        if not 0 < k1 < k2:
            raise NotApplicable("needs 0 < k1 < k2")
        terms = [a(k1 - 1, n + k1)] + [a(i, n + i) for i in range(k1, k2 + 1)]
        return terms, a(k2, n + k2 + 1)

    if rule is RuleId.THIRD_SHORT:
        k, n1, n2 = params
        if k < 0:
            raise NotApplicable("needs k >= 0")
        if not n1 < n2:
            raise NotApplicable("needs n1 < n2")
        return [a(k + 1, n1)] + [a(k, n) for n in range(n1, n2 + 1)], a(k + 1, n2 + 1)

    k, n = params
    m = _edge_hypotheses(A, k, n)
    if rule is RuleId.RHS_ROW:
        return [a(k, j) for j in range(1, n + 1)], a(k + 1, n + 1)
    if rule is RuleId.RHS_COLUMN:
        return [(-1) ** (i - k) * a(i, n) for i in range(k, m + n + 1)], a(k - 1, n - 1)
    if rule is RuleId.LHS_ROW:
        return [a(k, -j) for j in range(1, n + 1)], -a(k + 1, -n)
    if rule is RuleId.LHS_DIAGONAL:
        return [a(k - j, -1 - j) for j in range(n)], -a(k - n, -n)
    raise AssertionError(rule)  # pragma: no cover


def rule_sum(A: BinomialArray, rule: RuleId | str, params: tuple[int, ...]) -> tuple[Fraction, Fraction, bool]:
    """Evaluate a hockey-stick rule: (sum, target, sum == target)."""
    terms, target = rule_terms(A, RuleId(rule), tuple(params))
    total = sum(terms, ZERO)
    return total, target, total == target


def previous_column(A: BinomialArray, n: int, rows: int) -> list[Fraction]:
    """Column ``n-1`` rebuilt from column ``n`` by repeated top-line sums."""
    return [rule_sum(A, RuleId.TOP_LINE, (k, n))[0] for k in range(rows)]
