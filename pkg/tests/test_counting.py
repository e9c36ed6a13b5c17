from fractions import Fraction

import pytest

from rittkit import CountQuery, applicable_bounds, count_formula, decom_lower_bound, ffcharb_lower_bound, linear_closure_count
from rittkit.counting import EXACT, LOWER, UPPER, CountResult


def rows(q, l, m):
    Q = CountQuery(q, l, m)
    return count_formula(Q), applicable_bounds(Q)


@pytest.mark.parametrize(
    "q,l,m,kind,row,value",
    [
        (5, 2, 3, EXACT, "i", 25),
        (5, 3, 4, EXACT, "i", 45),
        (7, 3, 4, EXACT, "i", 91),
        (7, 2, 5, EXACT, "i", 7**3),
        (2, 2, 3, EXACT, "ii", 0),
        (4, 2, 3, EXACT, "ii", 0),
        (3, 2, 3, UPPER, "iii", 6),
        (3, 2, 4, EXACT, "iv", 27),
        (5, 4, 6, EXACT, "v", 625),
        (2, 3, 4, UPPER, "iii", 2),
        (2, 3, 6, UPPER, "vii", 2**6),
        (2, 2, 4, UPPER, "viii", 8),
    ],
)
def test_primary_rows(q, l, m, kind, row, value):
    assert count_formula(CountQuery(q, l, m)) == CountResult(kind, value, row)


def test_row_v_literal_indicator_differs():
    # With the indicator taken at l = 4 instead of l/i = 2 the value is 1125.
    q, i, s = 5, 2, 1
    literal = Fraction(q) ** (2 * i) * (Fraction(q) ** (s - 1) + (1 - 0) * (1 - Fraction(1, q)))
    assert literal == 1125
    assert count_formula(CountQuery(5, 4, 6)).value == 625


def test_query_properties():
    Q = CountQuery(9, 4, 6)
    assert (Q.p, Q.e, Q.n, Q.s, Q.i) == (3, 2, 24, 1, 2)
    assert Q.c == 1
    assert (Q.delta_l2, Q.delta_reduced) == (0, 1)


@pytest.mark.parametrize("q,l,m", [(6, 2, 3), (5, 3, 3), (5, 3, 2), (5, 1, 3)])
def test_query_validation(q, l, m):
    with pytest.raises(ValueError):
        CountQuery(q, l, m)


def test_bounds_listed():
    primary, bounds = rows(5, 2, 3)
    assert bounds == [CountResult(UPPER, 5**2, "vi")]
    primary, bounds = rows(2, 2, 6)
    assert primary == CountResult(UPPER, 32, "viii")
    assert CountResult(LOWER, 4, "prime_l_lower") in bounds
    primary, bounds = rows(2, 3, 4)
    assert primary.row == "iii" and bounds == [CountResult(UPPER, 16, "vii")]


def test_row_viii_example():
    assert count_formula(CountQuery(2, 2, 6)).value == 2 * 2**4


def test_holds():
    assert CountResult(EXACT, 3, "i").holds(3)
    assert not CountResult(EXACT, 3, "i").holds(4)
    assert CountResult(UPPER, 3, "vi").holds(2)
    assert CountResult(LOWER, 3, "x").holds(5)
    assert not CountResult(LOWER, 3, "x").holds(2)


def test_to_dict():
    assert CountResult(EXACT, 25, "i").to_dict() == {"kind": "exact", "row": "i", "value": 25}


def test_linear_closure():
    assert linear_closure_count(1, 5) == 20
    assert linear_closure_count(0, 7) == 0
    assert linear_closure_count(25, 5) == 500


def test_decom_lower_bound():
    assert decom_lower_bound(2, 2, 1, 1, 3) == 2
    with pytest.raises(ValueError):
        decom_lower_bound(2, 2, 1, 1, 2)
    with pytest.raises(ValueError):
        decom_lower_bound(3, 2, 1, 1, 3)
    with pytest.raises(ValueError):
        decom_lower_bound(2, 2, 1, 2, 3)


def test_decom_bound_mu_branch():
    # gcd(p^d - 1, m) = 1 and != 1 give different evaluations
    assert decom_lower_bound(2, 2, 2, 1, 5) >= 0
    assert decom_lower_bound(2, 2, 2, 1, 6) <= decom_lower_bound(2, 2, 2, 1, 5) * 2


def test_ffcharb():
    assert ffcharb_lower_bound(2, 2, 6) == 4
    with pytest.raises(ValueError):
        ffcharb_lower_bound(2, 2, 5)
    with pytest.raises(ValueError):
        ffcharb_lower_bound(2, 4, 8)
    with pytest.raises(ValueError):
        ffcharb_lower_bound(5, 2, 4)
    with pytest.raises(ValueError):
        ffcharb_lower_bound(2, 2, 8)


def test_ffcharb_branch_one():
    # l prime different from p: q^(l-1) times the decomposition bound
    assert ffcharb_lower_bound(2, 3, 6) == 2**2 * decom_lower_bound(2, 2, 1, 1, 3)
