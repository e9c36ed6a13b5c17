"""Dickson polynomials of the first kind, T_m(x, z), with z in F_q.

T_0 = 2, T_1 = x and T_m = x*T_{m-1} - z*T_{m-2}.  The check functions
below evaluate the structural identities these polynomials satisfy and are
used as self-tests by the normal-form code.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .field import GF, FieldElement
from .poly import Poly, compose, poly_sqrt_exact

__all__ = [
    "dickson",
    "dickson_closed_form",
    "dickson_semigroup_check",
    "dickson_scale_check",
    "dickson_value_at_2z",
    "dickson_halving",
    "dickson_derivative_squarefree",
    "dickson_parity_ok",
]


def _coerce(z, field: GF | None) -> tuple[GF, int]:
    if isinstance(z, FieldElement):
        return z.field, z.value
    if field is None:
        raise TypeError("pass a FieldElement or give the field explicitly")
    return field, field.coerce(z)


@lru_cache(maxsize=4096)
def _dickson(field: GF, m: int, z: int) -> Poly:
    t0 = Poly.constant(field, 2 % field.p)
    if m == 0:
        return t0
    x = Poly.x(field)
    prev, cur = t0, x
    zz = FieldElement(field, z)
    for _ in range(m - 1):
        prev, cur = cur, x * cur - prev * zz
    return cur


def dickson(m: int, z, field: GF | None = None) -> Poly:
    """T_m(x, z) by the three-term recursion."""
    if m < 0:
        raise ValueError("Dickson degree must be nonnegative")
    field, zv = _coerce(z, field)
    return _dickson(field, m, zv)


def dickson_closed_form(m: int, z, field: GF | None = None) -> Poly:
    """T_m(x, z) from the explicit binomial sum.

    The integer coefficient m/(m-i) * C(m-i, i) is formed over Z and only
    then reduced mod p.
    """
    field, zv = _coerce(z, field)
    if m == 0:
        return Poly.constant(field, 2 % field.p)
    coeffs = [0] * (m + 1)
    minus_z = field.neg(zv)
    for i in range(m // 2 + 1):
        num = m * comb(m - i, i)
        c, r = divmod(num, m - i)
        assert r == 0
        coeffs[m - 2 * i] = field.mul(field.from_int(c), field.pow(minus_z, i))
    return Poly._raw(field, coeffs)


def dickson_semigroup_check(l: int, m: int, z, field: GF | None = None) -> bool:
    """T_m(x, z^l) o T_l(x, z) == T_lm(x, z) == T_l(x, z^m) o T_m(x, z)."""
    field, zv = _coerce(z, field)
    lhs = compose(_dickson(field, m, field.pow(zv, l)), _dickson(field, l, zv))
    mid = _dickson(field, l * m, zv)
    rhs = compose(_dickson(field, l, field.pow(zv, m)), _dickson(field, m, zv))
    return lhs == mid == rhs


def dickson_scale_check(m: int, z, t, field: GF | None = None) -> bool:
    """t^m T_m(x, z) == T_m(t x, t^2 z) for t != 0."""
    field, zv = _coerce(z, field)
    tv = field.coerce(t)
    if tv == 0:
        raise ValueError("t must be nonzero")
    left = _dickson(field, m, zv).scale(FieldElement(field, field.pow(tv, m)))
    right = compose(_dickson(field, m, field.mul(field.pow(tv, 2), zv)), Poly._raw(field, [0, tv]))
    return left == right


def dickson_value_at_2z(m: int, z, field: GF | None = None) -> FieldElement:
    """T_m(2z, z^2), asserted equal to 2 z^m."""
    field, zv = _coerce(z, field)
    two_z = field.mul(field.from_int(2), zv)
    val = _dickson(field, m, field.mul(zv, zv))._eval(two_z)
    expected = field.mul(field.from_int(2), field.pow(zv, m))
    if val != expected:
        raise AssertionError(f"T_{m}(2z, z^2) != 2 z^{m} for z={zv}")
    return FieldElement(field, val)


def dickson_halving(m: int, z, field: GF | None = None) -> Poly:
    """Monic u of degree (m-1)/2 with T_m(x, z^2) - 2 z^m = (x - 2z) u^2.

    Needs m odd, p not dividing m and z != 0.
    """
    field, zv = _coerce(z, field)
    if m % 2 == 0 or m < 1:
        raise ValueError("halving needs an odd degree")
    if m % field.p == 0:
        raise ValueError(f"characteristic {field.p} divides {m}")
    if zv == 0:
        raise ValueError("z must be nonzero")
    two = field.from_int(2)
    t = _dickson(field, m, field.mul(zv, zv)) - FieldElement(field, field.mul(two, field.pow(zv, m)))
    lin = Poly._raw(field, [field.neg(field.mul(two, zv)), 1])
    quo, rem = divmod(t, lin)
    if not rem.is_zero():
        raise ArithmeticError("x - 2z does not divide T_m(x, z^2) - 2 z^m")
    u = poly_sqrt_exact(quo) if quo.degree > 0 else quo
    return u


def dickson_derivative_squarefree(m: int, z, field: GF | None = None) -> bool:
    """Whether T_m'(x, z) is squarefree, i.e. gcd(T', T'') is constant.

    Defined for p >= 3, p not dividing m, z != 0.
    """
    field, zv = _coerce(z, field)
    if field.p < 3:
        raise ValueError("needs odd characteristic")
    if m % field.p == 0:
        raise ValueError(f"characteristic divides {m}: T_m' vanishes")
    if zv == 0:
        raise ValueError("z must be nonzero")
    d1 = _dickson(field, m, zv).derivative()
    return d1.gcd(d1.derivative()).degree <= 0


def dickson_parity_ok(m: int, z, field: GF | None = None) -> bool:
    """T_m is an odd or even polynomial in x according to the parity of m."""
    t = dickson(m, z, field)
    return all(c == 0 for i, c in enumerate(t.coeffs) if (i - m) % 2)
