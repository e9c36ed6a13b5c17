"""Normal forms for distinct-degree collisions g o h = g* o h*.

Two families cover every collision with p not dividing lm and coprime
degrees m > l >= 2:

* exponential type ("first case"): f = (x^(kl) w^l(x^l)) shifted by a,
  with m = s*l + k and w monic of degree s;
* Dickson type ("second case"): f = T_lm(x, z) shifted by a, z != 0.

This module builds collisions from either parameter set, recovers the
parameters from f, strips Frobenius components from collisions with a
vanishing derivative, and splits tame collisions with gcd(l, m) > 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, gcd

from .decompose import Collision, Decomposition, find_collision, tame_decompose
from .dickson import dickson, dickson_halving
from .errors import RecompositionError
from .field import FieldElement
from .poly import Poly, _shift, compose, frobenius_map, pth_power_split, series_root

__all__ = [
    "FirstCaseForm",
    "SecondCaseForm",
    "RittForm",
    "Unclassified",
    "VanishingReduction",
    "TornheimSplit",
    "check_unidet",
    "build_first_case",
    "build_second_case",
    "extract_first_case",
    "extract_second_case",
    "classify",
    "second_case_to_first",
    "root_form_test",
    "reduce_vanishing",
    "tornheim_split",
]


def _check_degrees(l: int, m: int):
    if not m > l >= 2:
        raise ValueError(f"need m > l >= 2, got l={l}, m={m}")
    if gcd(l, m) != 1:
        raise ValueError(f"degrees l={l}, m={m} are not coprime")


@dataclass(frozen=True)
class FirstCaseForm:
    l: int
    m: int
    k: int
    s: int
    w: Poly
    a: FieldElement

    def __post_init__(self):
        _check_degrees(self.l, self.m)
        if self.k + self.l * self.s != self.m or not 1 <= self.k < self.l:
            raise ValueError(f"m={self.m} is not s*l + k with s={self.s}, k={self.k}")
        if not self.w.is_monic() or self.w.degree != self.s:
            raise ValueError(f"w must be monic of degree {self.s}")

    @classmethod
    def make(cls, l: int, m: int, w: Poly, a) -> "FirstCaseForm":
        """Fill in k and s from l and m."""
        a = a if isinstance(a, FieldElement) else w.field(a)
        return cls(l, m, m % l, m // l, w, a)

    @property
    def field(self):
        return self.w.field


@dataclass(frozen=True)
class SecondCaseForm:
    l: int
    m: int
    z: FieldElement
    a: FieldElement

    def __post_init__(self):
        _check_degrees(self.l, self.m)
        if self.z.field != self.a.field:
            raise ValueError("z and a live in different fields")
        if not self.z:
            raise ValueError("z must be nonzero")

    @classmethod
    def make(cls, l: int, m: int, z, a, field=None) -> "SecondCaseForm":
        if field is not None:
            z, a = field(z), field(a)
        return cls(l, m, z, a)

    @property
    def field(self):
        return self.z.field


@dataclass(frozen=True)
class RittForm:
    """A normal form together with the collision it realizes."""

    form: FirstCaseForm | SecondCaseForm
    collision: Collision

    @property
    def kind(self) -> str:
        return "first" if isinstance(self.form, FirstCaseForm) else "second"


class Unclassified(enum.Enum):
    NOT_COLLISION = "not_collision"
    WILD_UNCLASSIFIED = "wild_unclassified"


def check_unidet(w: Poly, k: int, l: int) -> bool:
    """Whether k*w + l*x*w' is nonzero."""
    x = Poly.x(w.field)
    return not (w * k + x * w.derivative() * l).is_zero()


def _verified(f: Poly, g: Poly, h: Poly, gs: Poly, hs: Poly) -> Collision:
    if g.derivative().is_zero() or gs.derivative().is_zero():
        raise RecompositionError("built collision has a vanishing left derivative")
    return Collision(f, Decomposition(g, h), Decomposition(gs, hs))


def build_first_case(form: FirstCaseForm) -> Collision:
    """The collision of exponential type with parameters (w, a)."""
    F = form.field
    l, k, w, a = form.l, form.k, form.w, form.a
    if l % F.p == 0:
        raise ValueError(f"characteristic {F.p} divides l={l}")
    if not check_unidet(w, k, l):
        raise ValueError("k*w + l*x*w' vanishes")
    xl = Poly.monomial(F, l)
    xk = Poly.monomial(F, k)
    g0 = xk * w ** l
    hs0 = xk * compose(w, xl)
    av = a.value
    al = F.pow(av, l)
    f = _shift(compose(g0, xl), av)
    g = _shift(g0, al)
    h = _shift(xl, av)
    gs = _shift(xl, F.mul(F.pow(av, k), w._eval(al)))
    hs = _shift(hs0, av)
    return _verified(f, g, h, gs, hs)


def build_second_case(form: SecondCaseForm) -> Collision:
    """The collision of Dickson type with parameters (z, a)."""
    F = form.field
    l, m, z, a = form.l, form.m, form.z.value, form.a.value
    if (l * m) % F.p == 0:
        raise ValueError(f"characteristic {F.p} divides lm={l * m}")
    tl = dickson(l, z, F)
    tm = dickson(m, z, F)
    f = _shift(dickson(l * m, z, F), a)
    g = _shift(dickson(m, F.pow(z, l), F), tl._eval(a))
    h = _shift(tl, a)
    gs = _shift(dickson(l, F.pow(z, m), F), tm._eval(a))
    hs = _shift(tm, a)
    return _verified(f, g, h, gs, hs)


def _tame_pre(f: Poly, l: int) -> int:
    n = f.degree
    if l < 2 or n % l:
        raise ValueError(f"l={l} does not divide deg f = {n}")
    m = n // l
    _check_degrees(l, m)
    if n % f.field.p == 0:
        raise ValueError(f"characteristic {f.field.p} divides deg f = {n}")
    if not f.is_monic_original():
        raise ValueError("f must be monic original")
    return m


def extract_first_case(f: Poly, l: int) -> FirstCaseForm | None:
    """Recover (w, a) with f = build_first_case(w, a).f, or None."""
    m = _tame_pre(f, l)
    F = f.field
    left = tame_decompose(f, m)
    if left is None or tame_decompose(f, l) is None:
        return None
    k, s = m % l, m // l
    a = F.div(left.h.coeff(l - 1), F.from_int(l))
    g0 = _shift(left.g, F.neg(F.pow(a, l)))
    if any(g0.coeffs[:k]):
        return None
    wl = Poly._raw(F, list(g0.coeffs[k:]))
    root = series_root(wl.reverse(), l, s + 1)
    w = root.reverse(s + 1)
    if w.degree != s or not w.is_monic() or not check_unidet(w, k, l):
        return None
    form = FirstCaseForm(l, m, k, s, w, FieldElement(F, a))
    if build_first_case(form).f != f:
        return None
    return form


def extract_second_case(f: Poly, l: int) -> SecondCaseForm | None:
    """Recover (z, a) from the top three coefficients of f, or None."""
    m = _tame_pre(f, l)
    F = f.field
    n = f.degree
    nn = F.from_int(n)
    a = F.div(f.coeff(n - 1), nn)
    z = F.div(F.sub(F.mul(F.from_int(comb(n, 2)), F.mul(a, a)), f.coeff(n - 2)), nn)
    if z == 0:
        return None
    form = SecondCaseForm(l, m, FieldElement(F, z), FieldElement(F, a))
    if build_second_case(form).f != f:
        return None
    return form


def classify(f: Poly, l: int, m: int, cap: int | None = None) -> RittForm | Unclassified:
    """Place a degree-lm polynomial into the normal-form classification.

    First case is tried before second, so at l = 2 the exponential form is
    the answer.  When p divides lm no extraction is attempted; a collision
    found by search is reported as WILD_UNCLASSIFIED.
    """
    _check_degrees(l, m)
    F = f.field
    if f.degree != l * m or not f.is_monic_original():
        raise ValueError(f"f must be monic original of degree {l * m}")
    if f.in_x_power(F.p):
        raise ValueError("f is a Frobenius composition")
    if (l * m) % F.p == 0:
        found = find_collision(f, l, m, cap)
        return Unclassified.WILD_UNCLASSIFIED if found else Unclassified.NOT_COLLISION
    first = extract_first_case(f, l)
    second = extract_second_case(f, l)
    if first is not None:
        if l >= 3 and second is not None:
            raise AssertionError("f has both normal forms with l >= 3")
        return RittForm(first, build_first_case(first))
    if second is not None:
        return RittForm(second, build_second_case(second))
    if find_collision(f, l, m) is not None:
        raise AssertionError("tame collision escaped both normal forms")
    return Unclassified.NOT_COLLISION


def second_case_to_first(form: SecondCaseForm) -> FirstCaseForm:
    """Rewrite a Dickson-type collision with l = 2 in exponential form.

    With u the halving of T_m at -z, T_m(x, z^2) = (x + 2z) u^2 - 2z^m, so
    T_2m(x, z) = x^2 u(x^2 - 2z)^2 - 2z^m and w = u o (x - 2z).
    """
    F = form.field
    if form.l != 2:
        raise ValueError("only l = 2 collapses into the first case")
    if F.p == 2 or form.m % F.p == 0:
        raise ValueError(f"characteristic {F.p} excluded")
    z = form.z.value
    u = dickson_halving(form.m, F.neg(z), F)
    w = compose(u, Poly._raw(F, [F.neg(F.mul(F.from_int(2), z)), 1]))
    return FirstCaseForm(2, form.m, 1, (form.m - 1) // 2, w, form.a)


def root_form_test(w: Poly, k: int, l: int, m: int) -> Poly | None:
    """The monic u with w = x^r u^p (r = deg w mod p) when p | m, else None."""
    F = w.field
    p = F.p
    s = w.degree
    if gcd(l, m) != 1 or m != l * s + k or not w.is_monic():
        raise ValueError("need gcd(l, m) = 1, m = l*deg(w) + k and w monic")
    u = None
    if m % p == 0:
        r = s % p
        v = Poly._raw(F, list(w.coeffs[r:]))
        if not any(w.coeffs[:r]) and v.in_x_power(p):
            u = frobenius_map(v.deflate(p), -1)
    if (u is not None) != (l % p != 0 and not check_unidet(w, k, l)):
        raise AssertionError("root form and k*w + l*x*w' criterion disagree")
    return u


@dataclass(frozen=True)
class VanishingReduction:
    """A collision with g' = 0 or (g*)' = 0 after stripping x^(p^e).

    ``side`` is "g" or "g*", ``exponent`` the stripped e, ``reduced`` the
    degree M = m/p^e or L = l/p^e.  The reduced components satisfy
    G o H = G* o H*, and ``inner`` is that collision when both of its
    degrees are at least 2 (``degenerate`` otherwise).  ``inner_form``
    classifies the inner collision when it is tame.
    """

    side: str
    exponent: int
    reduced: int
    G: Poly
    H: Poly
    G_star: Poly
    H_star: Poly
    inner: Collision | None
    inner_form: RittForm | Unclassified | None

    @property
    def degenerate(self) -> bool:
        return self.inner is None


def _strip(poly: Poly, e: int) -> Poly:
    """P with poly = x^(p^e) o P."""
    q = poly.field.p ** e
    if not poly.in_x_power(q):
        raise RecompositionError(f"component is not a p^{e}-th power")
    return frobenius_map(poly.deflate(q), -e)


def _inner_form(c: Collision) -> RittForm | Unclassified | None:
    if (c.l * c.m) % c.f.field.p:
        return classify(c.f, c.l, c.m)
    return None


def reduce_vanishing(c: Collision) -> VanishingReduction | None:
    """Remove the Frobenius component from a left factor with zero derivative."""
    g, h, gs, hs = c.components
    l, m = c.l, c.m
    if gcd(l, m) != 1:
        raise ValueError("reduce_vanishing needs coprime degrees")
    F = c.f.field
    p = F.p
    dg, dgs = g.derivative().is_zero(), gs.derivative().is_zero()
    if not dg and not dgs:
        return None
    if dg and dgs:
        raise RecompositionError("both left derivatives vanish")
    if dg:
        j, G = pth_power_split(g)
        pj = p ** j
        M = m // pj
        Hs = _strip(hs, j)
        Gs = frobenius_map(gs, -j)
        frob = Poly.monomial(F, pj)
        inner_f = compose(G, h)
        if (
            compose(Gs, Hs) != inner_f
            or compose(frob, inner_f) != c.f
            or compose(gs, frob) != compose(frob, Gs)
            or G.derivative().is_zero()
            or Gs.derivative().is_zero()
        ):
            raise RecompositionError("g' = 0 reduction does not recompose")
        if M == 1:
            if gs != frobenius_map(h, j):
                raise RecompositionError("g* is not the Frobenius image of h")
            inner = None
        elif M > l:
            inner = Collision(inner_f, Decomposition(G, h), Decomposition(Gs, Hs))
        else:
            inner = Collision(inner_f, Decomposition(Gs, Hs), Decomposition(G, h))
        return VanishingReduction(
            "g", j, M, G, h, Gs, Hs, inner, _inner_form(inner) if inner else None
        )
    d = 0
    while l % p ** (d + 1) == 0:
        d += 1
    j, Gs = pth_power_split(gs)
    if j != d:
        raise RecompositionError(f"g* sheds x^(p^{j}) but l has p-multiplicity {d}")
    L = l // p ** d
    H = _strip(h, d)
    G = frobenius_map(g, -d)
    inner_f = compose(G, H)
    frob = Poly.monomial(F, p ** d)
    if (
        compose(Gs, hs) != inner_f
        or compose(frob, inner_f) != c.f
        or G.derivative().is_zero()
        or Gs.derivative().is_zero()
    ):
        raise RecompositionError("(g*)' = 0 reduction does not recompose")
    inner = Collision(inner_f, Decomposition(G, H), Decomposition(Gs, hs)) if L >= 2 else None
    return VanishingReduction("g*", d, L, G, H, Gs, hs, inner, _inner_form(inner) if inner else None)


@dataclass(frozen=True)
class TornheimSplit:
    """f = u o inner o v with deg u = deg v = gcd(l, m).

    ``inner`` is a collision on the coprime degrees (l/i, m/i), or a single
    polynomial of degree m/l when l divides m.
    """

    u: Poly
    inner: Collision | Poly
    v: Poly

    @property
    def f(self) -> Poly:
        mid = self.inner if isinstance(self.inner, Poly) else self.inner.f
        return compose(compose(self.u, mid), self.v)


def _pair(f: Poly, m: int) -> tuple[Poly, Poly]:
    d = tame_decompose(f, m)
    if d is None:
        raise AssertionError(f"tame decomposition with left degree {m} missing")
    return d.g, d.h


def tornheim_split(c: Collision) -> TornheimSplit:
    """Split off the common outer factors of a tame collision."""
    F = c.f.field
    l, m = c.l, c.m
    if (l * m) % F.p == 0:
        raise ValueError(f"characteristic {F.p} divides lm={l * m}")
    g, h, gs, hs = c.components
    i = gcd(l, m)
    u, gt = _pair(g, i)
    u2, gst = _pair(gs, i)
    ht, v = _pair(h, l // i)
    hst, v2 = _pair(hs, m // i)
    if u != u2 or v != v2:
        raise AssertionError("outer factors of the two decompositions differ")
    if i == l:
        if gt != hst:
            raise AssertionError("inner components differ")
        inner: Collision | Poly = gt
    elif i == 1:
        inner = c
    else:
        inner = Collision(compose(gt, ht), Decomposition(gt, ht), Decomposition(gst, hst))
    split = TornheimSplit(u, inner, v)
    if split.f != c.f:
        raise RecompositionError("Tornheim split does not recompose")
    return split
