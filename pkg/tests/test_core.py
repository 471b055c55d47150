from fractions import Fraction
from math import comb

import pytest

from binarray import InitialSequence, RangeError, binomial, catalan, format_scalar, parse_scalar, term
from binarray.core import binomial_int, catalan_closed, parse_scalar_list


def test_binomial_small():
    assert binomial(5, 2) == 10
    assert binomial(-2, 3) == -4
    assert binomial(3, 5) == 0
    assert binomial(-1, 4) == 1
    assert binomial(0, 0) == 1
    assert binomial(7, -1) == 0


def test_binomial_is_fraction():
    assert isinstance(binomial(6, 3), Fraction)
    assert binomial_int(6, 3) == 20


@pytest.mark.parametrize("n", range(-20, 21))
def test_extended_pascal(n):
    for k in range(1, 41):
        assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)


def test_negative_upper_index():
    for n in range(1, 15):
        for k in range(15):
            assert binomial(-n, k) == (-1) ** k * comb(n + k - 1, k)


def test_catalan_values():
    assert catalan(0) == 1
    assert catalan(4) == 14
    assert catalan(10) == 16796
    assert catalan(12) == 208012
    with pytest.raises(RangeError):
        catalan(-1)


def test_segner_matches_closed_form():
    for t in range(1, 31):
        assert catalan(t) == catalan_closed(t)


def test_term():
    s = InitialSequence.of(3, -2)
    assert term(s, 0) == 3
    assert term(s, 1) == -2
    assert term(s, 5) == 0
    assert s.degree == 1
    assert s.prefix(4) == (3, -2, 0, 0)
    with pytest.raises(RangeError):
        term(s, -1)


def test_degree_ignores_trailing_zeros():
    assert InitialSequence.of(1, 0, 0).degree == 0


def test_scalar_round_trip():
    for text in ["0", "-13", "7/3", "-1/2", "208012"]:
        assert format_scalar(parse_scalar(text)) == text
    assert format_scalar(Fraction(4, 2)) == "2"
    assert parse_scalar_list("3,-2,0") == [3, -2, 0]


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_scalar("1.5.2")
