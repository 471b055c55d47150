"""Identity families and the seeded verification harness.

A family is a generator of parameter dicts plus a pure ``evaluate(params)``
returning ``(lhs, rhs)``; the identity holds at a point when ``lhs == rhs``.
Grid families enumerate a fixed grid, random families draw from a generator
seeded by ``(seed, family name)`` so results do not depend on run order.

Families marked ``normative=False`` record how a literal reading of a stated
formula fares.  They are reported but never affect the exit status unless
``strict`` is set.
"""
from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator

from . import sl2
from .array import (
    BinomialArray,
    diff_table,
    make_array,
    reverse_involution,
    shift_origin,
    taylor_at_minus_one,
    trapezoid_interchange,
)
from .core import ZERO, binomial, binomial_int, catalan, catalan_closed, format_scalar
from .errors import NotApplicable
from .hockey import UNIVERSAL, RuleId, previous_column, rule_sum, rule_terms
from .transform import (
    cauchy_product,
    diagonal_convolution,
    dwyer_frankel_check,
    entry_zero_propagation_check,
    forward_transform,
    inverse_transform,
    multi_factor_check,
    same_shift_check,
    transform,
    vandermonde_expand,
    zero_propagation_check,
)
from .zeros import (
    aeration,
    ballot_diagonal,
    c_sequence,
    c_sequence_scan,
    catalan_prefix,
    cg_initial_condition,
    convolution_power,
    generalized_catalan,
    is_palindromic,
    is_skew_palindromic,
    near_zero_cg,
    near_zero_cg_initial,
    near_zero_cg_ratio,
    near_zero_cg_scan,
    near_zero_cg_sum,
    predicted_linear_zeros,
    proper_zeros,
    scan_proper_zeros,
    shapiro_entry,
    shapiro_recurrence,
    skew_diagonal_zeros,
    skew_near_zero,
    skew_near_zero_scan,
)

SUITES = ("core", "hockey", "convolution", "catalan", "sl2")
COEFF_RANGE = (-9, 9)
MAX_DEGREE = 6
MAX_COUNTEREXAMPLES = 20

Params = dict[str, Any]


@dataclass(frozen=True)
class Family:
    name: str
    suite: str
    normative: bool
    grid: str
    cases: Callable[[random.Random, int | None], Iterable[Params]]
    evaluate: Callable[[Params], tuple[Any, Any]]
    note: str = ""
    default_cases: int | None = None  # None marks a fixed grid


FAMILIES: dict[str, Family] = {}


def _family(suite: str, grid: str, *, normative: bool = True, note: str = "",
            default_cases: int | None = None, cases: Callable | None = None):
    """Register ``evaluate``; ``cases`` is either a grid iterable factory or an rng sampler."""
    def deco(evaluate: Callable[[Params], tuple[Any, Any]]):
        name = evaluate.__name__.removeprefix("_").replace("_", "-")
        FAMILIES[name] = Family(name, suite, normative, grid, cases, evaluate, note, default_cases)
        return evaluate
    return deco


def _grid(factory: Callable[[], Iterable[Params]]):
    return lambda rng, count: factory()


def _sampled(draw: Callable[[random.Random], Params]):
    def gen(rng: random.Random, count: int | None) -> Iterator[Params]:
        for _ in range(count):
            yield draw(rng)
    return gen


# -- random inputs --------------------------------------------------------------

def rand_coeff(rng: random.Random, nonzero: bool = False) -> int:
    lo, hi = COEFF_RANGE
    while True:
        c = rng.randint(lo, hi)
        if c or not nonzero:
            return c


def rand_seq(rng: random.Random, length: int) -> list[int]:
    return [rand_coeff(rng) for _ in range(length)]


def rand_poly(rng: random.Random, max_degree: int = MAX_DEGREE, min_degree: int = 0) -> list[int]:
    m = rng.randint(min_degree, max_degree)
    return rand_seq(rng, m) + [rand_coeff(rng, nonzero=True)]


def rand_palindrome(rng: random.Random, m: int, skew: bool = False) -> list[int]:
    a = [0] * (m + 1)
    for i in range(m // 2 + 1):
        c = rand_coeff(rng, nonzero=(i == 0))
        a[i], a[m - i] = c, (-c if skew else c)
    if skew and m % 2 == 0:
        a[m // 2] = 0
    return a


def _seed_for(seed: int, name: str) -> int:
    digest = hashlib.sha256(f"{seed}:{name}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


# == core =========================================================================

@lru_cache(maxsize=None)
def _series_power(e: int, length: int) -> tuple[Fraction, ...]:
    """``(1+x)^e`` to ``length`` terms by repeated multiplication or by the geometric series."""
    out = [Fraction(1)] + [ZERO] * (length - 1)
    factor = [Fraction(1), Fraction(1)] if e >= 0 else [Fraction((-1) ** j) for j in range(length)]
    for _ in range(abs(e)):
        out = [sum((out[i] * factor[j - i] for i in range(j + 1) if j - i < len(factor)), ZERO)
               for j in range(length)]
    return tuple(out)


@_family("core", "m, n in [-10, 10], 0 <= k <= 12",
         cases=_grid(lambda: ({"m": m, "n": n, "k": k} for m in range(-10, 11)
                              for n in range(-10, 11) for k in range(13))))
def _chu_vandermonde(p: Params):
    m, n, k = p["m"], p["n"], p["k"]
    lhs = sum((binomial(m, i) * binomial(n, k - i) for i in range(k + 1)), ZERO)
    oracle = cauchy_product(_series_power(m, k + 1), _series_power(n, k + 1), k)
    return (lhs, binomial(m + n, k)), (oracle, oracle)


@_family("core", "0 <= n <= 12, same and adjacent rows",
         cases=_grid(lambda: ({"n": n, "adjacent": adj} for n in range(13) for adj in (0, 1))))
def _classical_squares(p: Params):
    n = p["n"]
    if p["adjacent"]:
        return sum(binomial_int(n, i) * binomial_int(n + 1, i) for i in range(n + 1)), \
            binomial_int(2 * n + 1, n)
    return sum(binomial_int(n, i) ** 2 for i in range(n + 1)), binomial_int(2 * n, n)


@_family("core", "random prefixes of length 1..25, 0 <= n <= 8", default_cases=100,
         cases=_sampled(lambda rng: {"a": rand_seq(rng, rng.randint(1, 25)), "n": rng.randint(0, 8)}))
def _transform_round_trip(p: Params):
    a, n = p["a"], p["n"]
    back = inverse_transform(forward_transform(a, n), n)
    forth = forward_transform(inverse_transform(a, n), n)
    return (back, forth), (tuple(map(Fraction, a)),) * 2


@_family("core", "random polynomials, k <= 12, |n| <= 10", default_cases=100,
         cases=_sampled(lambda rng: {"p": rand_poly(rng), "k": rng.randint(0, 12),
                                     "n": rng.randint(-10, 10)}))
def _entry_is_transform(p: Params):
    A = make_array(p["p"])
    k, n = p["k"], p["n"]
    return A.entry(k, n), transform(list(p["p"]) + [0] * (k + 1), n)[k]


def _window_draw(rng: random.Random) -> Params:
    k0 = rng.randint(0, 4)
    n0 = rng.randint(-8, 4)
    return {"p": rand_poly(rng), "k_min": k0, "k_max": k0 + rng.randint(0, 8),
            "n_min": n0, "n_max": n0 + rng.randint(0, 8), "shift": -rng.randint(0, 2)}


@_family("core", "random polynomials and shifted series, windows up to 9x9", default_cases=100,
         cases=_sampled(_window_draw))
def _window_matches_entries(p: Params):
    A = shift_origin(make_array(p["p"]), p["shift"]) if p["shift"] else make_array(p["p"])
    w = A.window(p["k_min"], p["k_max"], p["n_min"], p["n_max"])
    bad = sum(w.at(k, n) != A.entry(k, n)
              for k in range(p["k_min"], p["k_max"] + 1) for n in range(p["n_min"], p["n_max"] + 1))
    return bad, 0


@_family("core", "random polynomials, |t| <= 5, k <= 10, |n| <= 8", default_cases=100,
         cases=_sampled(lambda rng: {"p": rand_poly(rng), "t": rng.randint(-5, 5),
                                     "k": rng.randint(0, 10), "n": rng.randint(-8, 8)}))
def _shift_origin(p: Params):
    A = make_array(p["p"])
    return shift_origin(A, p["t"]).entry(p["k"], p["n"]), A.entry(p["k"], p["n"] + p["t"])


@_family("core", "random polynomials of degree <= 6", default_cases=60,
         cases=_sampled(lambda rng: {"p": rand_poly(rng)}))
def _difference_table_edge(p: Params):
    A = make_array(p["p"])
    table = diff_table(A)
    star = list(reversed(A.initial.coefficients))
    # p* loses degree when a_0 = 0; the table still has m+1 edge entries
    taylor = taylor_at_minus_one(star) if any(star) else []
    taylor += [ZERO] * (len(star) - len(taylor))
    return (table.left_edge, tuple(table.reconstruct())), (tuple(taylor), tuple(map(Fraction, star)))


@_family("core", "random polynomials, k <= 10, |n| <= 10", default_cases=100,
         cases=_sampled(lambda rng: {"p": rand_poly(rng), "k": rng.randint(0, 10),
                                     "n": rng.randint(-10, 10)}))
def _trapezoid_interchange(p: Params):
    A = make_array(p["p"])
    m = A.degree
    R = trapezoid_interchange(A)
    k, n = p["k"], p["n"]
    return R.entry(k, n), (-1) ** k * A.entry(k, k - m - 1 - n)


@_family("core", "random polynomials with p(-1) != 0", default_cases=60,
         cases=_sampled(lambda rng: {"p": rand_poly(rng)}))
def _trapezoid_involution(p: Params):
    A = make_array(p["p"])
    if sum((-1) ** i * c for i, c in enumerate(p["p"])) == 0:
        raise NotApplicable("needs p(-1) != 0")
    return trapezoid_interchange(trapezoid_interchange(A)), A


@_family("core", "random polynomials with a_0 != 0", default_cases=60,
         cases=_sampled(lambda rng: {"p": [rand_coeff(rng, True)] + rand_poly(rng, 5)}))
def _reverse_involution(p: Params):
    A = make_array(p["p"])
    return reverse_involution(reverse_involution(A)), A


# == hockey =======================================================================

def _hockey_draw(rule: RuleId) -> Callable[[random.Random], Params]:
    def draw(rng: random.Random) -> Params:
        poly = rand_poly(rng, 5)
        m = len(poly) - 1
        k = rng.randint(m + 1, m + 6) if rng.random() < 0.85 else rng.randint(0, m + 6)
        n = rng.randint(1, 7)
        if rule in (RuleId.TOP_LINE_SHORT, RuleId.LOWER_RIGHT_SHORT):
            k1 = rng.randint(1, 6)
            params = [k1, k1 + rng.randint(1, 5), rng.randint(-6, 6)]
        elif rule is RuleId.THIRD_SHORT:
            n1 = rng.randint(-6, 5)
            params = [rng.randint(0, 8), n1, n1 + rng.randint(1, 5)]
        elif rule in (RuleId.TOP_LINE, RuleId.LOWER_RIGHT):
            params = [rng.randint(0, 10), rng.randint(-6, 6)]
        else:
            params = [k, n]
        # universal rules also run on shifted arrays, whose column 0 is an infinite series
        shift = -rng.randint(0, 2) if rule in UNIVERSAL else 0
        return {"p": poly, "shift": shift, "params": params}
    return draw


def _register_rule(rule: RuleId) -> None:
    def evaluate(p: Params):
        A = make_array(p["p"])
        if p["shift"]:
            A = shift_origin(A, p["shift"])
        total, target, _ = rule_sum(A, rule, tuple(p["params"]))
        return total, target
    evaluate.__name__ = f"hockey_{rule.value}"
    _family("hockey", "random polynomials of degree <= 5 (moved left by 0..2 columns for rules "
            "without a degree hypothesis); points outside the hypotheses are skips", default_cases=200,
            cases=_sampled(_hockey_draw(rule)))(evaluate)


for _rule in RuleId:
    _register_rule(_rule)


HOCKEY_ANCHORS = (
    ((1, 6, 15, 20, 29), RuleId.TOP_LINE, (4, 4), (224, -120, 45, -10, 1), 140),
    ((1, 6, 15, 20, 29), RuleId.TOP_LINE_SHORT, (2, 4, 4), (224, -120, 45, -9), 140),
    ((1, 6, 15, 20, 29), RuleId.LOWER_RIGHT, (4, 0), (1, 7, 28, 84, 224), 344),
    ((1, 6, 15, 20, 29), RuleId.LOWER_RIGHT_SHORT, (2, 4, 0), (8, 28, 84, 224), 344),
    ((3, -6, 6), RuleId.RHS_ROW, (3, 3), (6, 6, 3), 15),
    ((3, -6, 6), RuleId.LHS_ROW, (3, 4), (-15, -42, -84, -144), -285),
    ((1, 6, 15, 20, 29), RuleId.THIRD_SHORT, (2, 1, 3), (35, 21, 28, 36), 120),
)


@_family("hockey", "the seven worked sums",
         cases=_grid(lambda: ({"index": i} for i in range(len(HOCKEY_ANCHORS)))))
def _hockey_anchors(p: Params):
    init, rule, params, shown, value = HOCKEY_ANCHORS[p["index"]]
    terms, target = rule_terms(make_array(init), rule, params)
    return (tuple(terms), target), (tuple(map(Fraction, shown)), Fraction(value))


@_family("hockey", "random polynomials and shifted series, n in [-6, 6], 12 rows", default_cases=60,
         cases=_sampled(lambda rng: {"p": rand_poly(rng), "shift": -rng.randint(0, 2),
                                     "n": rng.randint(-6, 6)}))
def _previous_column(p: Params):
    A = make_array(p["p"])
    if p["shift"]:
        A = shift_origin(A, p["shift"])
    return tuple(previous_column(A, p["n"], 12)), tuple(A.column(p["n"] - 1, 12))


# == convolution ==================================================================

def _df_draw(rng: random.Random) -> Params:
    m = rng.randint(0, 24)
    return {"a": rand_seq(rng, m + 1), "b": rand_seq(rng, m + 1),
            "n": rng.randint(-8, 8), "m": m}


@_family("convolution", "random prefixes, m <= 24, |n| <= 8", default_cases=200,
         cases=_sampled(_df_draw))
def _dwyer_frankel(p: Params):
    lhs, rhs, _ = dwyer_frankel_check(p["a"], p["b"], p["n"], p["m"])
    return lhs, rhs


def _vandermonde_cases(rng: random.Random, count: int | None) -> Iterator[Params]:
    yield {"a": [3, 4, -1, -2], "b": [2, 2, -1, -1], "m": 3, "n_min": -2, "n_max": 2}
    for _ in range(count - 1):
        m = rng.randint(0, 8)
        yield {"a": rand_seq(rng, m + 1), "b": rand_seq(rng, m + 1), "m": m,
               "n_min": -rng.randint(0, 5), "n_max": rng.randint(0, 5)}


@_family("convolution", "the worked 4x4 example plus random prefixes, m <= 8, |n| <= 5",
         default_cases=100, cases=_vandermonde_cases)
def _vandermonde_dot_products(p: Params):
    rows = vandermonde_expand(p["a"], p["b"], p["m"], range(p["n_min"], p["n_max"] + 1))
    target = cauchy_product(p["a"], p["b"], p["m"])
    return tuple(dot for *_, dot in rows), (target,) * len(rows)


def _multi_draw(rng: random.Random) -> Params:
    m = rng.randint(0, 12)
    count = rng.randint(2, 4)
    return {"seqs": [rand_seq(rng, m + 1) for _ in range(count)],
            "shifts": [rng.randint(-5, 5) for _ in range(count)], "m": m}


@_family("convolution", "2 to 4 random prefixes, m <= 12, |shifts| <= 5", default_cases=100,
         cases=_sampled(_multi_draw))
def _multi_factor(p: Params):
    return multi_factor_check(p["seqs"], p["shifts"], p["m"]), True


def _zero_draw(rng: random.Random) -> Params:
    m = rng.randint(1, 12)
    a = [rand_coeff(rng, True)] + rand_seq(rng, m)
    b = rand_seq(rng, m + 1)
    # choose b_m so that (a*b)_m = 0, scaling to stay integral
    rest = sum(a[i] * b[m - i] for i in range(1, m + 1))
    b = [a[0] * x for x in b]
    b[m] = -rest
    return {"a": a, "b": b, "m": m}


@_family("convolution", "random prefixes built so that (a*b)_m = 0, |n| <= 6", default_cases=100,
         cases=_sampled(_zero_draw))
def _zero_propagation(p: Params):
    return zero_propagation_check(p["a"], p["b"], p["m"], range(-6, 7)), True


def _entry_zero_cases(rng: random.Random, count: int | None) -> Iterator[Params]:
    for _ in range(count):
        m = rng.randint(1, 7)
        d = rand_palindrome(rng, m, skew=True)
        l, step = m // 2, rng.randint(0, 6)
        pos = (l + step, 2 * step) if m % 2 == 0 else (l + step + 1, 2 * step + 1)
        yield {"p": d, "k": pos[0], "n": pos[1]}


@_family("convolution", "diagonal zeros of random skew-palindromic arrays, |l| <= 5",
         default_cases=60, cases=_entry_zero_cases)
def _entry_zero_propagation(p: Params):
    return entry_zero_propagation_check(make_array(p["p"]), p["k"], p["n"], range(-5, 6)), True


def _diag_draw(rng: random.Random) -> Params:
    return {"a": rand_poly(rng, 4), "b": rand_poly(rng, 4), "m": rng.randint(0, 8),
            "r": rng.randint(-6, 6), "s": rng.randint(-6, 6), "t": rng.randint(-6, 6)}


@_family("convolution", "random polynomials of degree <= 4, m <= 8, |r|, |s|, |t| <= 6",
         default_cases=100, cases=_sampled(_diag_draw))
def _diagonal_convolution(p: Params):
    return diagonal_convolution(make_array(p["a"]), make_array(p["b"]), p["m"], p["r"], p["s"], p["t"])


def _shift_draw(rng: random.Random) -> Params:
    m = rng.randint(0, 12)
    return {"a": rand_seq(rng, m + 1), "b": rand_seq(rng, m + 1), "n": rng.randint(-6, 6),
            "m": m, "adjacent": rng.randint(0, 1)}


@_family("convolution", "random prefixes, m <= 12, |n| <= 6, same and adjacent shifts",
         default_cases=100, cases=_sampled(_shift_draw))
def _same_shift(p: Params):
    return same_shift_check(p["a"], p["b"], p["n"], p["m"], bool(p["adjacent"]))


def _column_conv_closed(a: list[int], n: int, adjacent: bool) -> Fraction:
    m = len(a) - 1
    top = 2 * n + adjacent
    idx = n + m + adjacent
    sq = sum((binomial(top, idx - 2 * i) * a[i] ** 2 for i in range(m + 1)), ZERO)
    cross = sum((binomial(top, idx - i - j) * a[i] * a[j]
                 for i in range(m + 1) for j in range(i + 1, m + 1)), ZERO)
    return sq + 2 * cross


@_family("convolution", "random polynomials of degree <= 6, 0 <= n <= 10", default_cases=100,
         cases=_sampled(lambda rng: {"p": rand_poly(rng), "n": rng.randint(0, 10),
                                     "adjacent": rng.randint(0, 1)}))
def _column_self_convolution(p: Params):
    a, n, adj = p["p"], p["n"], p["adjacent"]
    A = make_array(a)
    idx = n + len(a) - 1 + adj
    brute = sum((A.entry(i, n) * A.entry(idx - i, n + adj) for i in range(idx + 1)), ZERO)
    return brute, _column_conv_closed(a, n, bool(adj))


def _pal_pair_draw(rng: random.Random) -> Params:
    m = rng.randint(1, 7)
    kind = rng.choice(["pal", "skew", "mixed"])
    return {"p": rand_palindrome(rng, m, skew=(kind == "skew")),
            "q": rand_palindrome(rng, m, skew=(kind != "pal")), "l": rng.randint(-5, 5)}


def _half_sum(a, b, m: int, skew: bool) -> Fraction:
    if skew:
        return -2 * sum((Fraction(a[k] * b[k]) for k in range(m // 2 + 1)), ZERO)
    base = 2 * sum((Fraction(a[k] * b[k]) for k in range((m - 1) // 2 + 1) if 2 * k != m), ZERO)
    return base + (a[m // 2] * b[m // 2] if m % 2 == 0 else 0)


@_family("convolution", "random palindromic / skew / mixed pairs of degree <= 7, |l| <= 5",
         default_cases=120, cases=_sampled(_pal_pair_draw))
def _palindromic_pairing(p: Params):
    a, b, l = p["p"], p["q"], p["l"]
    m = len(a) - 1
    A, B = make_array(a), make_array(b)
    shifted = sum((A.entry(k, -l) * B.entry(m - k, l) for k in range(m + 1)), ZERO)
    plain = cauchy_product(a, b, m)
    pal_a, pal_b = is_palindromic(a), is_palindromic(b)
    if pal_a and pal_b:
        half = _half_sum(a, b, m, skew=False)
    elif is_skew_palindromic(a) and is_skew_palindromic(b):
        half = _half_sum(a, b, m, skew=True)
    else:
        half = ZERO
    return (shifted, plain), (plain, half)


def _adjacent_draw(rng: random.Random) -> Params:
    m = rng.randint(1, 7)
    return {"p": rand_palindrome(rng, m, skew=rng.random() < 0.5),
            "q": rand_poly(rng, m + 1, m + 1), "l": rng.randint(-5, 5)}


def _adjacent_pairing(p: Params, literal: bool):
    a, b, l = p["p"], p["q"], p["l"]
    m = len(a) - 1
    A, B = make_array(a), make_array(b)
    if literal:
        lhs = sum((A.entry(k, -l) * B.entry(m - k + 1, l + 1) for k in range(m + 1)), ZERO)
    else:
        lhs = sum((A.entry(k, -l) * B.entry(m - k + 1, l) for k in range(m + 2)), ZERO)
    sign = -1 if is_skew_palindromic(a) else 1
    return lhs, sign * sum((Fraction(a[k] * b[k + 1]) for k in range(m + 1)), ZERO)


@_family("convolution", "random (skew-)palindromic p of degree <= 7, q of degree m+1, |l| <= 5",
         normative=False, default_cases=120, cases=_sampled(_adjacent_draw),
         note="literal reading: columns -l and l+1, summed over k <= m; "
              "palindromic-adjacent-pairing is the form that holds")
def _palindromic_adjacent_pairing_literal(p: Params):
    return _adjacent_pairing(p, literal=True)


@_family("convolution", "random (skew-)palindromic p of degree <= 7, q of degree m+1, |l| <= 5",
         default_cases=120, cases=_sampled(_adjacent_draw),
         note="columns -l and l, summed over k <= m+1")
def _palindromic_adjacent_pairing(p: Params):
    return _adjacent_pairing(p, literal=False)


def _self_pairing(p: Params, skew_sign: int):
    a, l = p["p"], p["l"]
    m = len(a) - 1
    lhs = cauchy_product(transform(a + [0], -l), transform(a + [0], l + 1), m + 1)
    sign = skew_sign if is_skew_palindromic(a) else 1
    return lhs, sign * cauchy_product(a, a, m) + cauchy_product(a, a, m - 1)


@_family("convolution", "random palindromic or skew-palindromic a of degree 1..7, |l| <= 5",
         default_cases=120,
         cases=_sampled(lambda rng: {"p": rand_palindrome(rng, rng.randint(1, 7), rng.random() < 0.5),
                                     "l": rng.randint(-5, 5)}),
         note="(B^-l a * B^(l+1) a)_(m+1) = (a*a)_m + (a*a)_(m-1) in both symmetric cases")
def _palindromic_self_pairing(p: Params):
    return _self_pairing(p, skew_sign=1)


@_family("convolution", "random skew-palindromic a of degree 1..7, |l| <= 5",
         normative=False, default_cases=60,
         cases=_sampled(lambda rng: {"p": rand_palindrome(rng, rng.randint(1, 7), True),
                                     "l": rng.randint(-5, 5)}),
         note="literal reading with -(a*a)_m for skew-palindromic a; "
              "palindromic-self-pairing is the form that holds")
def _skew_self_pairing_literal(p: Params):
    return _self_pairing(p, skew_sign=-1)


# == catalan ======================================================================

_B1 = make_array([1, -1])      # B(1 - x)
_B2 = make_array([1, 2])       # B(1 + 2x)


def _degree_one_grid() -> Iterator[Params]:
    for r in range(-4, 5):
        for s in range(-4, 5):
            if r and s:
                for n in range(13):
                    yield {"r": r, "s": s, "n": n}


@_family("catalan", "r, s in [-4, 4] nonzero, 0 <= n <= 12", cases=_grid(_degree_one_grid))
def _degree_one_column_sums(p: Params):
    r, s, n = p["r"], p["s"], p["n"]
    A = make_array([r, s])
    self_conv = sum((A.entry(i, n) * A.entry(n + 1 - i, n) for i in range(n + 2)), ZERO)
    adj_conv = sum((A.entry(i, n) * A.entry(n + 2 - i, n + 1) for i in range(n + 3)), ZERO)
    first = ((r + s) ** 2 * n + 2 * r * s) * catalan(n)
    second = Fraction((r + s) ** 2 * n + 4 * r * s + 2 * s * s, 2) * catalan(n + 1)
    return (self_conv, adj_conv), (first, second)


@_family("catalan", "1 <= t <= 12", cases=_grid(lambda: ({"t": t} for t in range(1, 13))))
def _catalan_near_zero(p: Params):
    t = p["t"]
    return (_B1.entry(t, 2 * t), catalan(t)), (catalan_closed(t), catalan_closed(t))


@_family("catalan", "0 <= n <= 64", cases=_grid(lambda: ({"n": n} for n in range(65))))
def _catalan_parity(p: Params):
    n = p["n"]
    return catalan(n).numerator % 2 == 1, (n + 1) & n == 0


def _n_l_grid(n_max: int = 12, l_max: int = 4) -> Callable[[], Iterator[Params]]:
    return lambda: ({"n": n, "l": l} for n in range(n_max + 1) for l in range(-l_max, l_max + 1))


@_family("catalan", "0 <= n <= 12", cases=_grid(lambda: ({"n": n} for n in range(13))))
def _b1minusx_square_sums(p: Params):
    n = p["n"]
    return sum((_B1.entry(i, n) ** 2 for i in range(n // 2 + 1)), ZERO), catalan(n)


@_family("catalan", "0 <= n <= 12, |l| <= 4", cases=_grid(_n_l_grid()))
def _b1minusx_square_convolution(p: Params):
    n, l = p["n"], p["l"]
    total = sum((_B1.entry(i, n - l) * _B1.entry(n + 1 - i, n + l) for i in range(n + 2)), ZERO)
    return -total / 2, catalan(n)


@_family("catalan", "0 <= n <= 12, |l| <= 4 (l = 0 is the unshifted form)", cases=_grid(_n_l_grid()))
def _b1minusx_adjacent_convolution(p: Params):
    n, l = p["n"], p["l"]
    total = sum((_B1.entry(i, n - l) * _B1.entry(n + 1 - i, n + l + 1) for i in range(n + 2)), ZERO)
    return -total, catalan(n + 1)


@_family("catalan", "0 <= n <= 12", normative=False,
         cases=_grid(lambda: ({"n": n} for n in range(13))),
         note="literal sum of squares of column n of B(1+2x); "
              "b1plus2x-square-convolution is the form that holds")
def _b1plus2x_square_sums_literal(p: Params):
    n = p["n"]
    return sum((_B2.entry(i, n) ** 2 for i in range(n + 2)), ZERO), (9 * n + 4) * catalan(n)


@_family("catalan", "0 <= n <= 12, |l| <= 4", cases=_grid(_n_l_grid()))
def _b1plus2x_square_convolution(p: Params):
    n, l = p["n"], p["l"]
    total = sum((_B2.entry(i, n - l) * _B2.entry(n + 1 - i, n + l) for i in range(n + 2)), ZERO)
    return total, (9 * n + 4) * catalan(n)


@_family("catalan", "0 <= n <= 12, |l| <= 4", normative=False, cases=_grid(_n_l_grid()),
         note="literal bound: partner row n+1-i, sum to n+1; "
              "b1plus2x-adjacent-convolution (partner row n+2-i) is the form that holds")
def _b1plus2x_adjacent_literal(p: Params):
    n, l = p["n"], p["l"]
    total = sum((_B2.entry(i, n - l) * _B2.entry(n + 1 - i, n + l + 1) for i in range(n + 2)), ZERO)
    return 2 * total, (9 * n + 16) * catalan(n + 1)


@_family("catalan", "0 <= n <= 12, |l| <= 4", cases=_grid(_n_l_grid()))
def _b1plus2x_adjacent_convolution(p: Params):
    n, l = p["n"], p["l"]
    total = sum((_B2.entry(i, n - l) * _B2.entry(n + 2 - i, n + l + 1) for i in range(n + 3)), ZERO)
    return 2 * total, (9 * n + 16) * catalan(n + 1)


@_family("catalan", "1 <= n <= 10, six expressions",
         cases=_grid(lambda: ({"n": n, "form": f} for n in range(1, 11) for f in range(6))))
def _b1plus2x_negative_catalan(p: Params):
    n, f = p["n"], p["form"]
    b = _B2.entry
    if f == 0:
        v = -sum((b(i, -n) * b(2 * n - i, -n) for i in range(2 * n + 1)), ZERO)
    elif f == 1:
        v = -sum((b(i, -n - 1) * b(2 * n - i, -n) for i in range(2 * n + 1)), ZERO) / 2
    elif f == 2:
        v = sum((b(i, -n - 1) * b(2 * n - i - 1, -n) for i in range(2 * n)), ZERO)
    elif f == 3:
        v = sum((b(i, -n) * b(2 * n - i + 1, -n - 1) for i in range(2 * n + 2)), ZERO)
    elif f == 4:
        v = sum((b(i, -n - 1) * b(2 * n - i + 1, -n - 1) for i in range(2 * n + 2)), ZERO) / 2
    else:
        v = -sum((b(i, -n - 1) * b(2 * n - i, -n - 1) for i in range(2 * n + 1)), ZERO)
    return v, catalan(2 * n - 1 if f < 3 else 2 * n)


@_family("catalan", "|n| <= 15, 0 <= k <= 15; ratio form for 0 < k <= n",
         cases=_grid(lambda: ({"k": k, "n": n} for n in range(-15, 16) for k in range(16))))
def _b1minusx_entries(p: Params):
    k, n = p["k"], p["n"]
    lhs = [_B1.entry(k, n)]
    rhs = [binomial(n, k) - binomial(n, k - 1)]
    if 0 < k <= n:
        lhs.append(lhs[0])
        rhs.append(Fraction(n - 2 * k + 1, n - k + 1) * binomial_int(n, k))
    return tuple(lhs), tuple(rhs)


def _b1minusx_negative_stated(k: int, n: int) -> Fraction:
    if n == 1:
        return Fraction((-1) ** (k + 1) * 2)
    return (-1) ** k * Fraction(-n - 2 * k + 1, n - 1) * binomial_int(n + k - 2, k)


_NEG_GRID = _grid(lambda: ({"k": k, "n": n} for k in range(1, 16) for n in range(1, 16)))


@_family("catalan", "1 <= k <= 15, 1 <= n <= 15 (column -n)", normative=False, cases=_NEG_GRID,
         note="stated closed forms for the columns left of 0 in B(1-x); "
              "b1minusx-negative-columns records the sign that matches")
def _b1minusx_negative_literal(p: Params):
    k, n = p["k"], p["n"]
    return _B1.entry(k, -n), _b1minusx_negative_stated(k, n)


@_family("catalan", "1 <= k <= 15, 1 <= n <= 15 (column -n)", cases=_NEG_GRID,
         note="the stated closed forms hold after a global sign change")
def _b1minusx_negative_columns(p: Params):
    k, n = p["k"], p["n"]
    return _B1.entry(k, -n), -_b1minusx_negative_stated(k, n)


@_family("catalan", "1 <= k <= n <= 15 (right), 1 <= k, n <= 15 (left)",
         cases=_grid(lambda: ({"k": k, "n": n, "side": side} for side in (1, -1)
                              for k in range(1, 16) for n in range(1, 16)
                              if side == -1 or k <= n)))
def _b1plus2x_entries(p: Params):
    k, n = p["k"], p["n"]
    if p["side"] == 1:
        closed = binomial_int(n, k) + 2 * binomial_int(n, k - 1)
        ratio = Fraction(n + k + 1, n - k + 1) * binomial_int(n, k)
        return (_B2.entry(k, n),) * 2, (Fraction(closed), ratio)
    closed = (-1) ** k * (binomial_int(n + k - 1, k) - 2 * binomial_int(n + k - 2, k - 1))
    ratio = (-1) ** k * Fraction(n - k - 1, n + k - 1) * binomial_int(n + k - 1, k)
    return (_B2.entry(k, -n),) * 2, (Fraction(closed), ratio)


@_family("catalan", "rows 0..14, columns -15..15",
         cases=_grid(lambda: [{"k_max": 14, "n_min": -15, "n_max": 15}]))
def _b1plus2x_zeros(p: Params):
    found = scan_proper_zeros(_B2, p["k_max"], p["n_min"], p["n_max"])
    predicted = [(t, -t - 1) for t in range(1, p["k_max"] + 1) if -t - 1 >= p["n_min"]]
    return tuple(sorted(found)), tuple(sorted(predicted))


@_family("catalan", "1 <= t <= 12", cases=_grid(lambda: ({"t": t} for t in range(1, 13))))
def _b1plus2x_left_of_zeros(p: Params):
    t = p["t"]
    return _B2.entry(t, -t - 2), (-1) ** t * catalan(t)


def _linear_grid() -> Iterator[Params]:
    for r in range(1, 6):
        for s in range(1, 6):
            for side in ("right", "left"):
                yield {"r": r, "s": s, "side": side}


@_family("catalan", "1 <= r, s <= 5, both sides, rows <= 12, columns -14..14",
         cases=_grid(_linear_grid))
def _linear_proper_zeros(p: Params):
    locus = proper_zeros(p["r"], p["s"], 12, (-14, 14), side=p["side"])
    return tuple(sorted(locus.positions)), tuple(sorted(locus.predicted))


@_family("catalan", "1 <= r, s <= 5 with r < s for the zeros of B(sx+r)", normative=False,
         cases=_grid(lambda: ({"r": r, "s": s} for r in range(1, 6) for s in range(1, 6)
                              if math.gcd(r, s) == 1)),
         note="stated parametrization n = l(r-s)+1, k = lr, l <= -1; the scan fits "
              "(lr, l(r-s)-1) with l >= 1")
def _linear_left_zeros_literal(p: Params):
    locus = proper_zeros(p["r"], p["s"], 12, (-14, 14), side="left")
    in_window = tuple(sorted(pos for pos in locus.literal or () if -14 <= pos[1] <= 14))
    return tuple(sorted(locus.positions)), in_window


def _coprime_grid() -> Iterator[Params]:
    for r in range(1, 6):
        for s in range(1, 6):
            if math.gcd(r, s) == 1:
                for l in range(1, 7):
                    yield {"r": r, "s": s, "l": l}


@_family("catalan", "coprime 1 <= r, s <= 5, 1 <= l <= 6", cases=_grid(_coprime_grid))
def _generalized_catalan_near_zeros(p: Params):
    r, s, l = p["r"], p["s"], p["l"]
    A = make_array([r, -s])
    k, n = l * r, l * (r + s) - 1
    below = (A.entry(k + 1, n), A.entry(k + 1, n + 1))
    above = (A.entry(k - 1, n), A.entry(k, n + 1))
    g_rs, g_sr = generalized_catalan(r, s, l), generalized_catalan(s, r, l)
    return below + above, (-g_rs, -g_rs, g_sr, g_sr)


@_family("catalan", "1 <= r <= 4, 1 <= t <= 10",
         cases=_grid(lambda: ({"r": r, "t": t} for r in range(1, 5) for t in range(1, 11))))
def _generalized_catalan_special(p: Params):
    r, t = p["r"], p["t"]
    return (generalized_catalan(1, 1, t), generalized_catalan(r, r, t)), (catalan(t), r * catalan(r * t))


@_family("catalan", "random skew-palindromic polynomials of degree 1..8, 10 diagonal steps",
         default_cases=40,
         cases=_sampled(lambda rng: {"p": rand_palindrome(rng, rng.randint(1, 8), True)}))
def _skew_diagonal_zeros(p: Params):
    locus = skew_diagonal_zeros(p["p"], 10)
    return locus.positions, locus.predicted


@_family("catalan", "1 <= r <= 4, 1 <= s <= 5; 2 <= m <= 12, 1 <= k < m",
         cases=_grid(lambda: [{"kind": "aeration", "a": r, "b": s} for r in range(1, 5)
                              for s in range(1, 6)]
                     + [{"kind": "cg", "a": m, "b": k} for m in range(2, 13) for k in range(1, m)]))
def _symmetric_initial_conditions(p: Params):
    if p["kind"] == "aeration":
        seq, odd = aeration(p["a"], p["b"]), p["b"] % 2 == 1
    else:
        seq, odd = cg_initial_condition(p["a"], p["b"]), p["b"] % 2 == 1
    return (is_skew_palindromic(seq), is_palindromic(seq)), (odd, not odd)


def _cg_grid(t_max: int) -> Callable[[], Iterator[Params]]:
    return lambda: ({"m": m, "k": k, "t": t} for m in range(2, 13) for k in range(1, m, 2)
                    for t in range(1, t_max + 1))


@_family("catalan", "odd k < m <= 12, 1 <= t <= 8", cases=_grid(_cg_grid(8)))
def _cg_near_zero(p: Params):
    m, k, t = p["m"], p["k"], p["t"]
    scan = near_zero_cg_scan(m, k, t)
    return (near_zero_cg(m, k, t), near_zero_cg_sum(m, k, t)), (scan, scan)


@_family("catalan", "odd k < m <= 12",
         cases=_grid(lambda: ({"m": m, "k": k} for m in range(2, 13) for k in range(1, m, 2))))
def _cg_near_zero_initial(p: Params):
    m, k = p["m"], p["k"]
    return near_zero_cg_initial(m, k), near_zero_cg_scan(m, k, 1)


@_family("catalan", "odd k < m <= 12, 1 <= t <= 10; undefined ratios are skips",
         cases=_grid(_cg_grid(10)))
def _cg_near_zero_recurrence(p: Params):
    m, k, t = p["m"], p["k"], p["t"]
    ratio = near_zero_cg_ratio(m, k, t)
    if ratio is None:
        raise NotApplicable("recurrence denominator vanishes")
    return ratio * near_zero_cg(m, k, t), near_zero_cg(m, k, t + 1)


@_family("catalan", "odd k < m <= 12, t in the band m-2k' <= t <= m-k'-1",
         cases=_grid(lambda: ({"m": m, "k": k, "t": t} for m in range(2, 13) for k in range(1, m, 2)
                              for t in range(max(1, m - (k - 1)), m - (k - 1) // 2))))
def _cg_vanishing_band(p: Params):
    m, k, t = p["m"], p["k"], p["t"]
    return (near_zero_cg(m, k, t), near_zero_cg_scan(m, k, t)), (ZERO, ZERO)


@_family("catalan", "2 <= m <= 12, 1 <= t <= 10",
         cases=_grid(lambda: ({"m": m, "t": t} for m in range(2, 13) for t in range(1, 11))))
def _cg_k1(p: Params):
    m, t = p["m"], p["t"]
    return near_zero_cg(m, 1, t), m * catalan(t)


@_family("catalan", "0 <= r <= 8, 0 <= l <= 10",
         cases=_grid(lambda: ({"r": r, "l": l} for r in range(9) for l in range(11))))
def _ballot_diagonal(p: Params):
    r, l = p["r"], p["l"]
    power = convolution_power(catalan_prefix(l + 1), r + 1, l + 1)[l]
    return (_B1.entry(l, r + 2 * l), power), (ballot_diagonal(r, l),) * 2


@_family("catalan", "1 <= j <= 9, t <= 10 (t >= 1 for odd j, t >= 0 for even j)",
         cases=_grid(lambda: ({"j": j, "t": t} for j in range(1, 10)
                              for t in range(1 if j % 2 else 0, 11))))
def _c_sequence_scan(p: Params):
    j, t = p["j"], p["t"]
    special = catalan(t) if j == 1 else catalan(t + 1) if j == 2 else c_sequence(j, t)
    return (c_sequence(j, t), c_sequence(j, t)), (c_sequence_scan(j, t), special)


def _skew_odd_draw(rng: random.Random) -> Params:
    mp = rng.randint(0, 5)
    return {"d": rand_palindrome(rng, 2 * mp + 1, True)}


@_family("catalan", "random skew-palindromic d of odd degree, m' <= 5, 1 <= t <= 10",
         default_cases=20, cases=_sampled(_skew_odd_draw))
def _skew_near_zero(p: Params):
    d = p["d"]
    return tuple(skew_near_zero(d, t) for t in range(1, 11)), \
        tuple(skew_near_zero_scan(d, t) for t in range(1, 11))


def _odd_recursion(m: int, t: int) -> Fraction:
    return sum(((-1) ** i * c_sequence(m - 2 * i, t) for i in range((m - 1) // 2 + 1)), ZERO)


_ODD_GRID = _grid(lambda: ({"m": 2 * mp + 1, "t": t} for mp in range(5) for t in range(1, 9)))


@_family("catalan", "m = 1, 3, 5, 7, 9, 1 <= t <= 8", normative=False, cases=_ODD_GRID,
         note="literal reading c_(m+1)(t+1); c-sequence-odd-recursion-shifted records the offset "
              "that makes it hold")
def _c_sequence_odd_recursion_literal(p: Params):
    m, t = p["m"], p["t"]
    return c_sequence(m + 1, t + 1), _odd_recursion(m, t)


@_family("catalan", "m = 1, 3, 5, 7, 9, 1 <= t <= 8", cases=_ODD_GRID,
         note="holds with c_(m+1)(t-1) on the left: the even-j sequence starts at t = 0")
def _c_sequence_odd_recursion_shifted(p: Params):
    m, t = p["m"], p["t"]
    return c_sequence(m + 1, t - 1), _odd_recursion(m, t)


@_family("catalan", "m = 2, 4, 6, 8, 1 <= t <= 8", normative=False,
         cases=_grid(lambda: ({"m": 2 * mp, "t": t} for mp in range(1, 5) for t in range(1, 9))),
         note="literal reading")
def _c_sequence_even_recursion_literal(p: Params):
    m, t = p["m"], p["t"]
    mp = m // 2
    rhs = (-1) ** mp * catalan(t) + sum(((-1) ** i * c_sequence(m - 2 * i, t) for i in range(mp)), ZERO)
    return c_sequence(m + 1, t), rhs


SHAPIRO_TABLE = {
    1: (1,), 2: (2, 1), 3: (5, 4, 1), 4: (14, 14, 6, 1),
    5: (42, 48, 27, 8, 1), 6: (132, 165, 110, 44, 10, 1),
}


@_family("catalan", "the reference triangle, rows 1..6",
         cases=_grid(lambda: ({"n": n, "k": k} for n, row in SHAPIRO_TABLE.items()
                              for k in range(1, len(row) + 1))))
def _shapiro_table(p: Params):
    n, k = p["n"], p["k"]
    return shapiro_entry(n, k), Fraction(SHAPIRO_TABLE[n][k - 1])


@_family("catalan", "1 <= k <= n <= 14",
         cases=_grid(lambda: ({"n": n, "k": k} for n in range(1, 15) for k in range(1, n + 1))))
def _shapiro_recurrence(p: Params):
    return shapiro_entry(p["n"], p["k"]), shapiro_recurrence(p["n"], p["k"])


@_family("catalan", "1 <= n, p <= 8",
         cases=_grid(lambda: ({"n": n, "p": q} for n in range(1, 9) for q in range(1, 9))))
def _shapiro_row_dots(p: Params):
    n, q = p["n"], p["p"]
    dot = sum((shapiro_entry(n, k) * shapiro_entry(q, k) for k in range(1, min(n, q) + 1)), ZERO)
    return dot, catalan(n + q - 1)


# == sl2 ==========================================================================

def _vec_draw(max_n: int) -> Callable[[random.Random], Params]:
    def draw(rng: random.Random) -> Params:
        n = rng.randint(0, max_n)
        return {"n": n, "u": rand_seq(rng, n + 1), "v": rand_seq(rng, n + 1)}
    return draw


def _pairing_draw(rng: random.Random) -> Params:
    n = rng.randint(0, 10)
    return {"p": rand_seq(rng, rng.randint(1, n + 1)), "q": rand_seq(rng, rng.randint(1, n + 1)), "n": n}


@_family("sl2", "random p, q of degree <= n <= 10", default_cases=100, cases=_sampled(_pairing_draw))
def _pairing_triple(p: Params):
    lhs, mid, rhs, _ = sl2.pairing_check(p["p"], p["q"], p["n"])
    return (lhs, mid), (rhs, rhs)


@_family("sl2", "random p, q of degree <= n <= 10", default_cases=100, cases=_sampled(_pairing_draw))
def _pairing_matches_convolution(p: Params):
    n = p["n"]
    lhs, *_ = sl2.pairing_check(p["p"], p["q"], n)
    pad = lambda s: list(s) + [0] * (n + 1 - len(s))  # noqa: E731
    df_lhs, df_rhs, _ = dwyer_frankel_check(pad(p["p"]), pad(p["q"]), 1, n)
    return (lhs, lhs), (df_lhs, df_rhs)


def _vectors(p: Params) -> tuple[sl2.RepVector, sl2.RepVector]:
    return sl2.RepVector(p["n"], tuple(p["u"])), sl2.RepVector(p["n"], tuple(p["v"]))


@_family("sl2", "random u, v in V(n), n <= 12", default_cases=100, cases=_sampled(_vec_draw(12)))
def _form_f_invariance(p: Params):
    u, v = _vectors(p)
    f = sl2.f_action
    return (sl2.invariant_form(f(u), v), sl2.primed_form(f(u), v)), \
        (-sl2.invariant_form(u, f(v)), sl2.primed_form(u, f(v)))


@_family("sl2", "random u, v in V(n), n <= 12", default_cases=100, cases=_sampled(_vec_draw(12)))
def _form_symmetry(p: Params):
    u, v = _vectors(p)
    sign = 1 if p["n"] % 2 == 0 else -1
    return (sl2.invariant_form(u, v), sl2.primed_form(u, v)), \
        (sign * sl2.invariant_form(v, u), sl2.primed_form(v, u))


@_family("sl2", "random u, v in V(n), n <= 12", default_cases=100, cases=_sampled(_vec_draw(12)))
def _b_f_preserves_pairing(p: Params):
    u, v = _vectors(p)
    return sl2.primed_form(sl2.b_f(u), sl2.b_f_inverse(v)), sl2.primed_form(u, v)


@_family("sl2", "random v in V(n), n <= 12", default_cases=100, cases=_sampled(_vec_draw(12)))
def _b_f_round_trip(p: Params):
    u, _ = _vectors(p)
    return (sl2.b_f_inverse(sl2.b_f(u)), sl2.b_f(sl2.b_f_inverse(u)), sl2.s_involution(sl2.s_involution(u))), \
        (u, u, u)


# == harness ======================================================================

def _fmt(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, BinomialArray):
        return f"B({', '.join(format_scalar(c) for c in value.initial.coefficients)})@{value.origin}"
    if isinstance(value, sl2.RepVector):
        return f"V{value.n}{_fmt(value.coeffs)}"
    return str(value)


def _sort_key(params: Params) -> tuple:
    def norm(v):
        if isinstance(v, (list, tuple)):
            return (1, len(v), tuple(norm(x) for x in v))
        if isinstance(v, str):
            return (2, v)
        return (0, v)
    return tuple(norm(params[k]) for k in params)


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown identity family {name!r}") from None


def check_identity(family: Family | str, params: Params) -> tuple[Any, Any, bool]:
    """Evaluate one point; NotApplicable propagates to the caller."""
    fam = get_family(family) if isinstance(family, str) else family
    lhs, rhs = fam.evaluate(params)
    return lhs, rhs, lhs == rhs


@dataclass
class FamilyResult:
    name: str
    suite: str
    normative: bool
    grid: str
    cases: int = 0
    passes: int = 0
    failures: int = 0
    skips: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    note: str = ""

    @property
    def finding(self) -> str:
        if self.failures == 0:
            text = f"holds on all {self.passes} evaluated cases"
            if self.skips:
                text += f" ({self.skips} outside the hypotheses)"
        else:
            first = self.counterexamples[0]
            text = (f"fails on {self.failures} of {self.cases - self.skips} evaluated cases; "
                    f"smallest counterexample {first['params']}: lhs = {first['lhs']}, rhs = {first['rhs']}")
        return f"{text}. {self.note}" if self.note else text

    def to_dict(self) -> dict:
        return {
            "name": self.name, "suite": self.suite, "normative": self.normative, "grid": self.grid,
            "cases": self.cases, "passes": self.passes, "failures": self.failures,
            "skips": self.skips, "counterexamples": self.counterexamples, "finding": self.finding,
        }


def run_family(fam: Family, seed: int, cases: int | None = None) -> FamilyResult:
    rng = random.Random(_seed_for(seed, fam.name))
    count = None if fam.default_cases is None else (cases if cases is not None else fam.default_cases)
    res = FamilyResult(fam.name, fam.suite, fam.normative, fam.grid, note=fam.note)
    failed: list[tuple[Params, Any, Any]] = []
    for params in fam.cases(rng, count):
        res.cases += 1
        try:
            lhs, rhs, ok = check_identity(fam, params)
        except NotApplicable:
            res.skips += 1
            continue
        except Exception as exc:  # a crash at a point is a failure of that point
            lhs, rhs, ok = f"error: {type(exc).__name__}: {exc}", "no exception", False
        if ok:
            res.passes += 1
        else:
            res.failures += 1
            failed.append((params, lhs, rhs))
    failed.sort(key=lambda item: _sort_key(item[0]))
    res.counterexamples = [{"params": params, "lhs": _fmt(lhs), "rhs": _fmt(rhs)}
                           for params, lhs, rhs in failed[:MAX_COUNTEREXAMPLES]]
    return res


def families_for(suite: str) -> list[Family]:
    if suite != "all" and suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return sorted((f for f in FAMILIES.values() if suite == "all" or f.suite == suite),
                  key=lambda f: f.name)


@dataclass
class IdentityReport:
    suite: str
    seed: int
    cases: int | None
    strict: bool
    families: list[FamilyResult]

    @property
    def failing(self) -> list[FamilyResult]:
        return [f for f in self.families if f.failures and (f.normative or self.strict)]

    @property
    def ok(self) -> bool:
        return not self.failing

    def to_dict(self) -> dict:
        return {
            "suite": self.suite, "seed": self.seed, "exact": True, "cases": self.cases,
            "strict": self.strict, "ok": self.ok,
            "families": [f.to_dict() for f in self.families],
            "failing_families": [f.name for f in self.failing],
        }


def run_suite(suite: str, seed: int = 0, cases: int | None = None, strict: bool = False) -> IdentityReport:
    """Run every family of ``suite`` (or ``"all"``); results are sorted by family name."""
    fams = families_for(suite)
    return IdentityReport(suite, seed, cases, strict, [run_family(f, seed, cases) for f in fams])
