import pytest

from binarray import NotApplicable, RangeError, RuleId, make_array, rule_sum, rule_terms, shift_origin
from binarray.hockey import previous_column

SEED = make_array([1, 6, 15, 20, 29])
SMALL = make_array([3, -6, 6])


@pytest.mark.parametrize("arr, rule, params, terms, total", [
    (SEED, RuleId.TOP_LINE, (4, 4), [224, -120, 45, -10, 1], 140),
    (SEED, RuleId.TOP_LINE_SHORT, (2, 4, 4), [224, -120, 45, -9], 140),
    (SEED, RuleId.LOWER_RIGHT, (4, 0), [1, 7, 28, 84, 224], 344),
    (SEED, RuleId.LOWER_RIGHT_SHORT, (2, 4, 0), [8, 28, 84, 224], 344),
    (SEED, RuleId.THIRD_SHORT, (2, 1, 3), [35, 21, 28, 36], 120),
    (SMALL, RuleId.RHS_ROW, (3, 3), [6, 6, 3], 15),
    (SMALL, RuleId.LHS_ROW, (3, 4), [-15, -42, -84, -144], -285),
    (SMALL, RuleId.LHS_DIAGONAL, (4, 3), [15, -42, 42], 15),
])
def test_worked_sums(arr, rule, params, terms, total):
    shown, target = rule_terms(arr, rule, params)
    assert shown == terms
    assert target == total
    assert rule_sum(arr, rule, params) == (total, total, True)


def test_rhs_column():
    assert rule_sum(SMALL, RuleId.RHS_COLUMN, (3, 3))[2]


def test_string_rule_id():
    assert rule_sum(SEED, "top-line", (4, 4))[2]


@pytest.mark.parametrize("rule", [RuleId.RHS_ROW, RuleId.RHS_COLUMN, RuleId.LHS_ROW, RuleId.LHS_DIAGONAL])
def test_edge_rules_need_k_above_degree(rule):
    with pytest.raises(NotApplicable):
        rule_sum(SMALL, rule, (2, 3))


def test_edge_rules_need_polynomial():
    with pytest.raises(NotApplicable):
        rule_sum(shift_origin(SMALL, -1), RuleId.RHS_ROW, (5, 2))


def test_universal_rules_on_series():
    A = shift_origin(make_array([1, 2]), -2)
    assert not A.is_polynomial
    for k in range(6):
        for n in range(-4, 5):
            assert rule_sum(A, RuleId.TOP_LINE, (k, n))[2]
            assert rule_sum(A, RuleId.LOWER_RIGHT, (k, n))[2]
            assert rule_sum(A, RuleId.THIRD_SHORT, (k, n, n + 2))[2]


def test_bad_arity():
    with pytest.raises(RangeError):
        rule_sum(SEED, RuleId.TOP_LINE, (1, 2, 3))


def test_previous_column():
    assert previous_column(SEED, 1, 5) == SEED.column(0, 5)
    assert previous_column(SMALL, -2, 6) == SMALL.column(-3, 6)
