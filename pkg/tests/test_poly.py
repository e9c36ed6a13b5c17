import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P
from rittkit import LinearPair, Poly, compose, field_of_order, make_field, normalize_monic_original, second_normalize, shift
from rittkit.poly import frobenius_map, monic_original_polys, poly_sqrt_exact, pth_power_split, series_root

F5 = make_field(5)
F7 = make_field(7)


def naive_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def naive_compose(g, h, p):
    """g(h) by summing g_i * h^i with list arithmetic over F_p."""
    acc, power = [], [1]
    for c in g:
        term = [(c * x) % p for x in power]
        acc = [(x + y) % p for x, y in zip(acc + [0] * len(term), term + [0] * len(acc))]
        power = naive_mul(power, h, p)
    while acc and acc[-1] == 0:
        acc.pop()
    return acc


def coeff_lists(p, max_len=6):
    return st.lists(st.integers(0, p - 1), max_size=max_len)


def monic_original(F, degree):
    return st.lists(st.integers(0, F.q - 1), min_size=degree - 1, max_size=degree - 1).map(
        lambda mid: Poly(F, [0, *mid, 1])
    )


# -- examples ---------------------------------------------------------------


def test_zero_polynomial():
    z = Poly(F5, [0, 0])
    assert z.is_zero() and z.degree == -1
    assert Poly(F5, [1, 2, 0, 0]).coeffs == (1, 2)


def test_derivative_char3():
    F = make_field(3)
    assert P(F, 0, 1, 0, 1).derivative() == P(F, 1)
    assert P(F, 2).derivative().is_zero()


def test_gcd_f5():
    assert P(F5, -1, 0, 1).gcd(P(F5, -1, 1)) == P(F5, -1, 1)


def test_divmod():
    f = P(F7, 3, 1, 4, 1, 5)
    g = P(F7, 2, 6, 1)
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree


@pytest.mark.parametrize("b", range(5))
def test_compose_squares(b):
    x2 = P(F5, 0, 0, 1)
    assert compose(x2, P(F5, 0, b, 1)) == P(F5, 0, 0, b * b, 2 * b, 1)


@pytest.mark.parametrize("a,b", [(1, 2), (3, 4), (0, 1)])
def test_compose_two_quadratics(a, b):
    got = compose(P(F5, 0, a, 1), P(F5, 0, b, 1))
    assert got == P(F5, 0, a * b, b * b + a, 2 * b, 1)


def test_compose_identity():
    g = P(F5, 0, 3, 0, 1)
    assert compose(g, Poly.x(F5)) == g
    assert compose(Poly.x(F5), g) == g


def test_normalize_monic_original():
    f, lin = normalize_monic_original(P(F5, 4, 0, 2))
    assert f == P(F5, 0, 0, 1)
    assert (lin.a, lin.b) == (F5(3), F5(3))
    g = P(F5, 0, 1, 1)
    assert normalize_monic_original(g) == (g, LinearPair(F5(1), F5(0)))
    f, lin = normalize_monic_original(P(F5, 1, 1))
    assert f == Poly.x(F5) and (lin.a, lin.b) == (F5(1), F5(4))


def test_linear_pair_inverse():
    lin = LinearPair(F7(3), F7(5))
    assert compose(lin.as_poly(), lin.inverse().as_poly()) == Poly.x(F7)
    with pytest.raises(ValueError):
        LinearPair(F7(0), F7(1))


def test_shift_examples():
    f = P(F5, 0, 2, 0, 1)
    assert shift(f, 0) == f
    for a in range(5):
        assert shift(P(F5, 0, 0, 1), a) == P(F5, 0, 2 * a, 1)
    with pytest.raises(ValueError):
        shift(P(F5, 1, 1), 1)


def test_second_normalize():
    f = P(F5, 0, 3, 0, 1)
    assert second_normalize(f) == (f, F5(0))
    assert second_normalize(P(F5, 0, 2, 1)) == (P(F5, 0, 0, 1), F5(4))
    with pytest.raises(ValueError):
        second_normalize(P(make_field(3), 0, 0, 0, 1))


def test_series_root_examples():
    assert series_root(P(F5, 1), 3, 5) == P(F5, 1)
    assert series_root(P(F5, 1, 2), 2, 3) == P(F5, 1, 1, 2)
    sq = P(F5, 1, 1) ** 2
    assert series_root(sq, 2, 4) == P(F5, 1, 1)
    with pytest.raises(ValueError):
        series_root(P(F5, 2, 1), 2, 3)
    with pytest.raises(ValueError):
        series_root(P(F5, 1, 1), 5, 3)


def test_poly_sqrt_exact():
    assert poly_sqrt_exact(P(F5, 1, 2, 1)) == P(F5, 1, 1)
    u = P(F7, 1, 3, 1)
    assert poly_sqrt_exact(u * u) == u
    with pytest.raises(ValueError):
        poly_sqrt_exact(P(make_field(3), 1, 0, 1))
    F4 = field_of_order(4)
    v = P(F4, 2, 3, 1)
    assert poly_sqrt_exact(v * v) == v


def test_frobenius_map():
    F4 = field_of_order(4)
    t = F4.generator
    f = Poly(F4, [0, t, 1])
    assert frobenius_map(f, 0) == f
    assert frobenius_map(f, 1) == Poly(F4, [0, t * t, 1])


@pytest.mark.parametrize("q", [4, 8, 9])
def test_frobenius_swap(q):
    F = field_of_order(q)
    for j in range(F.e + 1):
        xp = Poly.monomial(F, F.p**j)
        for h in list(monic_original_polys(F, 3))[:40]:
            assert compose(xp, h) == compose(frobenius_map(h, j), xp)


def test_pth_power_split():
    F2 = make_field(2)
    F3 = make_field(3)
    f = P(F5, 0, 1, 1)
    assert pth_power_split(f) == (0, f)
    assert pth_power_split(P(F2, 0, 0, 1, 0, 1)) == (1, P(F2, 0, 1, 1))
    assert pth_power_split(Poly.monomial(F3, 9)) == (2, Poly.x(F3))


def test_monic_original_polys_count():
    F = field_of_order(4)
    polys = list(monic_original_polys(F, 3))
    assert len(polys) == 16 == len(set(polys))
    assert all(p.is_monic_original() and p.degree == 3 for p in polys)


def test_str_and_list():
    F4 = field_of_order(4)
    assert Poly(F4, [0, [1, 1], 1]).to_list() == [[0, 0], [1, 1], [1, 0]]
    assert str(P(F5, 0, 2, 1)) == "x^2 + 2*x"


# -- properties against the list oracle ----------------------------------------


@settings(max_examples=150, deadline=None)
@given(coeff_lists(7), coeff_lists(7))
def test_mul_matches_oracle(a, b):
    got = Poly(F7, a) * Poly(F7, b)
    assert list(got.coeffs) == naive_mul(a, b, 7)


@settings(max_examples=150, deadline=None)
@given(coeff_lists(5, 5), coeff_lists(5, 4))
def test_compose_matches_oracle(g, h):
    got = compose(Poly(F5, g), Poly(F5, h))
    assert list(got.coeffs) == naive_compose(g, h, 5)


@settings(max_examples=100, deadline=None)
@given(coeff_lists(5, 5), coeff_lists(5, 4), st.integers(0, 4))
def test_compose_pointwise(g, h, a):
    G, H = Poly(F5, g), Poly(F5, h)
    assert compose(G, H)._eval(a) == G._eval(H._eval(a))


@settings(max_examples=100, deadline=None)
@given(monic_original(F7, 3), monic_original(F7, 2), st.integers(0, 6), st.integers(0, 6))
def test_shift_group_action(g, h, a, b):
    f = compose(g, h)
    assert shift(f, a).is_monic_original()
    assert shift(shift(f, a), b) == shift(f, a + b)
    assert shift(f, a) == compose(shift(g, h._eval(a % 7)), shift(h, a))


@settings(max_examples=100, deadline=None)
@given(monic_original(field_of_order(9), 4), st.integers(0, 8))
def test_shift_over_extension(f, a):
    F = f.field
    s = shift(f, a)
    assert s.is_monic_original()
    assert shift(s, F.neg(a)) == f


@settings(max_examples=100, deadline=None)
@given(monic_original(F7, 5))
def test_second_normalize_kills_coefficient(f):
    g, b = second_normalize(f)
    assert g.coeff(4) == 0
    assert shift(g, -b) == f


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.sampled_from([2, 3, 4]), st.integers(1, 7))
def test_series_root_property(tail, m, prec):
    f = Poly(F5, [1, *tail])
    s = series_root(f, m, prec)
    assert s.coeff(0) == 1
    assert (s**m).truncate(prec) == f.truncate(prec)


@settings(max_examples=80, deadline=None)
@given(coeff_lists(9, 4), coeff_lists(9, 4), st.integers(0, 3))
def test_frobenius_map_is_ring_hom(a, b, j):
    F = field_of_order(9)
    A, B = Poly(F, a), Poly(F, b)
    assert frobenius_map(A * B, j) == frobenius_map(A, j) * frobenius_map(B, j)
    assert frobenius_map(A + B, j) == frobenius_map(A, j) + frobenius_map(B, j)
    assert frobenius_map(frobenius_map(A, j), -j) == A


@settings(max_examples=60, deadline=None)
@given(coeff_lists(7, 6), st.integers(0, 6))
def test_derivative_product_rule(a, c):
    A = Poly(F7, a)
    B = P(F7, c, 1, 3)
    assert (A * B).derivative() == A.derivative() * B + A * B.derivative()
