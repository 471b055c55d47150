"""The twelve acceptance criteria; each prints a PASS/FAIL line in the summary."""
import random
import sys

import pytest

from binarray import (
    WINDOW_AUDIT, catalan, entry, forward_transform, inverse_transform, make_array, rule_sum,
    rule_terms, run_suite, taylor_at_minus_one, vandermonde_expand,
)
from binarray.core import _catalan_segner
from binarray.verify import HOCKEY_ANCHORS, check_identity, get_family, run_family
from binarray.zeros import shapiro_entry

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def report():
    """One full suite run; every later criterion reads from it."""
    return {f["name"]: f for f in run_suite("all", seed=0).to_dict()["families"]}


def clean(report, name, cases=None):
    fam = report[name]
    assert fam["failures"] == 0, fam["finding"]
    assert fam["passes"] > 0
    if cases is not None:
        assert fam["cases"] == cases
    return fam


@criterion(1, "shifted dot products of the worked example all equal -13")
def test_worked_dot_products(report):
    rows = vandermonde_expand((3, 4, -1, -2), (2, 2, -1, -1), 3, range(-2, 3))
    assert [n for n, *_ in rows] == [-2, -1, 0, 1, 2]
    assert [dot for *_, dot in rows] == [-13] * 5
    clean(report, "vandermonde-dot-products")


@criterion(2, "hockey-stick worked sums reproduced by rule_sum")
def test_hockey_anchors(report):
    for init, rule, params, shown, value in HOCKEY_ANCHORS:
        A = make_array(init)
        terms, target = rule_terms(A, rule, params)
        assert terms == list(shown)
        assert rule_sum(A, rule, params) == (value, value, True)
        assert target == value
    assert len(HOCKEY_ANCHORS) == 7
    clean(report, "hockey-anchors", 7)


@criterion(3, "Taylor coefficients at -1 for p and p*")
def test_difference_tables():
    # reference values list the highest power first; taylor_at_minus_one is lowest first
    assert taylor_at_minus_one([-6, 1, 5, 2])[::-1] == [2, -1, -3, -4]
    assert taylor_at_minus_one([2, 5, 1, -6])[::-1] == [-6, 19, -15, 4]


@criterion(4, "Dwyer-Frankel on 200 seeded cases")
def test_dwyer_frankel(report):
    clean(report, "dwyer-frankel", 200)


@criterion(5, "Chu-Vandermonde on the full grid, vanishing band included")
def test_chu_vandermonde(report):
    clean(report, "chu-vandermonde", 21 * 21 * 13)
    band = [(m, n, k) for m in range(-10, 11) for n in range(-10, 11) for k in range(13)
            if 0 < m + n < k]
    assert band
    for m, n, k in band:
        lhs, rhs, ok = check_identity("chu-vandermonde", {"m": m, "n": n, "k": k})
        assert ok and all(v == 0 for v in lhs)


@criterion(6, "Catalan near-zeros of B(1-x) and the classical square sums")
def test_catalan_near_zeros(report):
    A = make_array([1, -1])
    for t in range(1, 13):
        assert entry(A, t, 2 * t) == catalan(t) == _catalan_segner(t)
    assert _catalan_segner(12) == 208012
    clean(report, "catalan-near-zero", 12)
    clean(report, "classical-squares")


@criterion(7, "square and adjacent column sums of B(1-x), with shifts")
def test_b1minusx_sums(report):
    clean(report, "b1minusx-square-sums", 13)
    clean(report, "b1minusx-square-convolution", 13 * 9)
    clean(report, "b1minusx-adjacent-convolution", 13 * 9)


@criterion(8, "degree-one column convolutions against both closed forms")
def test_degree_one(report):
    clean(report, "degree-one-column-sums", 8 * 8 * 13)


@criterion(9, "Clebsch-Gordan near-zeros and skew near-zeros against scans")
def test_cg_near_zeros(report):
    cases = sum(8 for m in range(2, 13) for k in range(1, m, 2))
    clean(report, "cg-near-zero", cases)
    clean(report, "skew-near-zero", 20)


@criterion(10, "pairing triple equality and agreement with Dwyer-Frankel")
def test_pairing(report):
    clean(report, "pairing-triple", 100)
    clean(report, "pairing-matches-convolution", 100)


ADJUDICATED = (
    "b1plus2x-square-sums-literal",
    "b1plus2x-adjacent-literal",
    "b1minusx-negative-literal",
    "c-sequence-odd-recursion-literal",
    "c-sequence-even-recursion-literal",
)


@criterion(11, "discrepancies adjudicated; small reference values reproduced")
def test_adjudication(report):
    for name in ADJUDICATED:
        fam = report[name]
        assert not fam["normative"]
        assert fam["cases"] > 0 and fam["passes"] + fam["failures"] == fam["cases"]
        if fam["failures"]:
            smallest = fam["counterexamples"][0]
            assert "smallest counterexample" in fam["finding"]
            assert not check_identity(name, smallest["params"])[2]
        else:
            assert fam["finding"].startswith("holds")
    sq = report["b1plus2x-square-sums-literal"]
    assert sq["cases"] == 13
    assert sq["counterexamples"][0] == {"params": {"n": 0}, "lhs": "5", "rhs": "4"}
    assert report["b1minusx-negative-literal"]["counterexamples"][0]["params"] == {"k": 1, "n": 1}
    for name in ("b1plus2x-square-convolution", "b1plus2x-adjacent-convolution",
                 "b1minusx-negative-columns", "c-sequence-odd-recursion-shifted"):
        clean(report, name)
    assert [shapiro_entry(4, 1), shapiro_entry(5, 3), shapiro_entry(5, 1), shapiro_entry(6, 1)] == \
        [14, 27, 42, 132]
    clean(report, "shapiro-table")
    assert entry(make_array([1, 2]), 1, -3) == -catalan(1)


@criterion(12, "Pascal invariant over every window; transform round trip")
def test_property_floor(report):
    windows, cells, violations = WINDOW_AUDIT.snapshot()
    assert windows > 0 and cells > 0
    assert violations == 0
    clean(report, "transform-round-trip", 100)
    clean(report, "window-matches-entries")
    rng = random.Random(12)
    for _ in range(100):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(1, 20))]
        n = rng.randint(0, 8)
        assert inverse_transform(forward_transform(a, n), n) == tuple(a)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
