import itertools
import json

import pytest

from rittkit import CapExceeded, CountQuery, census, field_of_order, frobenius_counts, image_size
from rittkit.census import MATCH, VIOLATION, WITHIN, derivative_bounds_hold, frobenius_conditions

GRID = [
    (2, 2, 3), (3, 2, 3), (4, 2, 3), (5, 2, 3), (7, 2, 3), (8, 2, 3), (9, 2, 3),
    (2, 3, 4), (3, 3, 4), (4, 3, 4), (5, 3, 4),
    (2, 2, 4), (3, 2, 4), (2, 2, 5), (3, 2, 5), (2, 2, 6), (3, 2, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5),
]


def oracle_image(q, left, right):
    """D_{n,left} as a set of coefficient tuples, built pair by pair."""
    F = field_of_order(q)

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return out

    def comp(g, h):
        acc = [g[-1]]
        for c in reversed(g[:-1]):
            acc = mul(acc, h)
            acc[0] = F.add(acc[0], c)
        return tuple(acc)

    def polys(d):
        return [(0, *mid, 1) for mid in itertools.product(range(q), repeat=d - 1)]

    hs = polys(right)
    return {comp(g, h) for g in polys(left) for h in hs}


def is_frobenius(f, p):
    return all(c == 0 for i, c in enumerate(f) if i % p)


def oracle(q, l, m):
    p = field_of_order(q).p
    dl, dm = oracle_image(q, l, m), oracle_image(q, m, l)
    inter = dl & dm
    frob = lambda f: is_frobenius(f, p)
    return {
        "t": sum(1 for f in inter if not frob(f)),
        "frob": sum(1 for f in inter if frob(f)),
        "size_l": len(dl),
        "size_m": len(dm),
        "frob_l": sum(map(frob, dl)),
        "frob_m": sum(map(frob, dm)),
        "frob_union": sum(map(frob, dl | dm)),
    }


@pytest.mark.parametrize("q,l,m", GRID)
def test_census_matches_set_oracle(q, l, m):
    r = census(CountQuery(q, l, m))
    o = oracle(q, l, m)
    got = {
        "t": r.t_exact,
        "frob": r.frobenius_count,
        "size_l": r.size_l,
        "size_m": r.size_m,
        "frob_l": r.frobenius_l,
        "frob_m": r.frobenius_m,
        "frob_union": r.frobenius_union,
    }
    assert got == o


@pytest.mark.parametrize("q,l,m", GRID)
def test_census_respects_table(q, l, m):
    r = census(CountQuery(q, l, m))
    assert r.verdict != VIOLATION
    assert r.formula.holds(r.t_exact)
    assert all(b.holds(r.t_exact) for b in r.bounds)
    if r.formula.kind == "exact":
        assert r.verdict == MATCH
    else:
        assert r.verdict == WITHIN


@pytest.mark.parametrize("q,l,m", [(q, l, m) for q, l, m in GRID if (l * m) % field_of_order(q).p == 0])
def test_frobenius_counts_match_census(q, l, m):
    r = census(CountQuery(q, l, m))
    fc = frobenius_counts(CountQuery(q, l, m))
    n, p = l * m, field_of_order(q).p
    decomposable = set().union(*(oracle_image(q, d, n // d) for d in range(2, n) if n % d == 0))
    assert fc.total == sum(is_frobenius(f, p) for f in decomposable)
    assert (fc.side_l, fc.side_m) == (r.frobenius_l, r.frobenius_m)


def test_frobenius_counts_examples():
    fc = frobenius_counts(CountQuery(2, 2, 3))
    assert (fc.total, fc.side_l) == (4, 4)
    F2 = field_of_order(2)
    assert image_size(F2, 3, 1) == 4
    with pytest.raises(ValueError):
        frobenius_counts(CountQuery(5, 2, 3))


def test_frobenius_counts_both_degrees_divisible():
    # D_{8,4} over F_2: both components may carry the Frobenius factor
    fc = frobenius_counts(CountQuery(2, 2, 4))
    r = census(CountQuery(2, 2, 4))
    assert fc.side_m == r.frobenius_m == 8


def test_image_size_trivial_degrees():
    F = field_of_order(3)
    assert image_size(F, 4, 1) == image_size(F, 4, 4) == 27
    assert image_size(F, 4, 2) == len(oracle_image(3, 2, 2))


def test_deflated_image_is_frobenius_part():
    F = field_of_order(3)
    assert census(CountQuery(3, 2, 3)).frobenius_l == image_size(F, 2, 2)


def test_row_v_corrected():
    r = census(CountQuery(5, 4, 6))
    assert r.t_exact == 625
    assert r.verdict == MATCH


def test_deterministic():
    a = census(CountQuery(4, 2, 3), collect=True)
    b = census(CountQuery(4, 2, 3), collect=True)
    assert a == b
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())
    assert [e.f for e in a.elements] == [e.f for e in b.elements]


def test_cap():
    with pytest.raises(CapExceeded):
        census(CountQuery(5, 2, 3), cap=100)
    census(CountQuery(5, 2, 3), cap=2 * 5 * 25)


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("RITTKIT_CAP", "10")
    with pytest.raises(CapExceeded):
        census(CountQuery(3, 2, 3))


def test_json_schema():
    d = census(CountQuery(5, 2, 3)).to_dict()
    assert d["field"] == {"p": 5, "e": 1, "q": 5}
    assert (d["l"], d["m"], d["n"], d["t_exact"]) == (2, 3, 6, 25)
    assert d["formula"] == {"kind": "exact", "row": "i", "value": 25}
    assert d["verdict"] == "match"
    assert set(d) >= {"frobenius_count", "sizes", "frobenius", "bounds"}


@pytest.mark.parametrize("q,l,m", [(5, 2, 3), (4, 2, 3), (2, 3, 4), (3, 2, 4)])
def test_collected_elements(q, l, m):
    r = census(CountQuery(q, l, m), collect=True)
    assert len(r.elements) == r.t_exact + r.frobenius_count
    for e in r.elements:
        assert e.left and e.right
        for d in e.left:
            assert d.degrees == (m, l) and d.f == e.f
        for d in e.right:
            assert d.degrees == (l, m) and d.f == e.f


@pytest.mark.parametrize("q,l,m", [(3, 2, 3), (2, 3, 4), (4, 3, 4), (9, 2, 3), (2, 3, 8), (2, 5, 6), (2, 2, 3), (2, 2, 5), (3, 3, 4)])
def test_derivative_bounds(q, l, m):
    r = census(CountQuery(q, l, m), collect=True)
    for e in r.elements:
        if not e.frobenius:
            assert derivative_bounds_hold(e, l, m)


@pytest.mark.parametrize("q,l,m", [(2, 2, 3), (3, 2, 3), (2, 3, 4), (4, 3, 4), (5, 2, 3), (4, 2, 3), (3, 3, 4)])
def test_frobenius_conditions_agree(q, l, m):
    r = census(CountQuery(q, l, m), collect=True)
    for e in r.elements:
        for conds in frobenius_conditions(e):
            assert len(set(conds)) == 1


def test_derivative_bounds_precondition():
    r = census(CountQuery(5, 2, 3), collect=True)
    with pytest.raises(ValueError):
        derivative_bounds_hold(r.elements[0], 2, 3)
