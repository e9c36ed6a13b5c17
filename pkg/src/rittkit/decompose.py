"""Decompositions f = g o h with prescribed left degree, and collisions.

In the tame case (p does not divide the left degree) the monic original
decomposition is unique and is found by an x-adic root of the reversal of
f followed by an h-adic expansion.  Wild left degrees fall back to a capped
brute-force search over right components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, RecompositionError, default_cap
from .poly import Poly, compose, monic_original_polys, series_root

__all__ = [
    "Decomposition",
    "Collision",
    "tame_decompose",
    "wild_decompositions",
    "decompose",
    "find_collision",
    "frobenius_decompose",
    "h_adic_left",
]


@dataclass(frozen=True)
class Decomposition:
    g: Poly
    h: Poly

    @property
    def f(self) -> Poly:
        return compose(self.g, self.h)

    @property
    def trivial(self) -> bool:
        # Degree-1 components only appear inside the gcd split.
        return self.g.degree < 2 or self.h.degree < 2

    @property
    def degrees(self) -> tuple[int, int]:
        return self.g.degree, self.h.degree


@dataclass(frozen=True)
class Collision:
    """f = left.g o left.h = right.g o right.h with swapped degrees.

    ``left`` carries the larger left degree m, ``right`` the smaller one l;
    so deg left.h = deg right.g = l and deg left.g = deg right.h = m.
    """

    f: Poly
    left: Decomposition
    right: Decomposition

    def __post_init__(self):
        g, h = self.left.g, self.left.h
        gs, hs = self.right.g, self.right.h
        for name, c in (("g", g), ("h", h), ("g*", gs), ("h*", hs)):
            if not c.is_monic_original():
                raise RecompositionError(f"component {name} is not monic original")
        l, m = h.degree, g.degree
        if not (gs.degree == l and hs.degree == m and m > l >= 2):
            raise RecompositionError(
                f"degree pattern ({g.degree},{h.degree}) / ({gs.degree},{hs.degree}) is not a distinct-degree collision"
            )
        if compose(g, h) != self.f or compose(gs, hs) != self.f:
            raise RecompositionError("collision components do not recompose to f")

    @property
    def l(self) -> int:
        return self.left.h.degree

    @property
    def m(self) -> int:
        return self.left.g.degree

    @property
    def components(self) -> tuple[Poly, Poly, Poly, Poly]:
        """(g, h, g*, h*)."""
        return self.left.g, self.left.h, self.right.g, self.right.h


def h_adic_left(f: Poly, h: Poly) -> Poly | None:
    """g with f = g o h if the h-adic digits of f are all constants."""
    digits = []
    rest = f
    while not rest.is_zero():
        rest, r = divmod(rest, h)
        if r.degree > 0:
            return None
        digits.append(r.coeff(0))
    return Poly._raw(f.field, digits)


def _trivial(f: Poly, m: int) -> Decomposition | None:
    F = f.field
    if m == 1:
        return Decomposition(Poly.x(F), f)
    if m == f.degree:
        return Decomposition(f, Poly.x(F))
    return None


def tame_decompose(f: Poly, m: int) -> Decomposition | None:
    """The unique monic original (g, h) with f = g o h and deg g = m.

    Returns None when no such decomposition exists.  Left degrees 1 and
    deg f give the trivial decompositions (x, f) and (f, x).
    """
    F = f.field
    n = f.degree
    if m < 1 or n < 1 or n % m:
        raise ValueError(f"left degree {m} does not divide {n}")
    if m % F.p == 0:
        raise ValueError(f"left degree {m} is wild in characteristic {F.p}")
    if not f.is_monic_original():
        raise ValueError("tame_decompose expects a monic original polynomial")
    triv = _trivial(f, m)
    if triv is not None:
        return triv
    r = n // m
    rev = f.reverse()
    root = series_root(rev, m, r + 1)
    h = root.reverse(r + 1)
    h = h.original()
    g = h_adic_left(f, h)
    if g is None:
        return None
    return Decomposition(g, h)


def wild_decompositions(f: Poly, m: int, cap: int | None = None) -> list[Decomposition]:
    """All monic original (g, h) with deg g = m, by trying every h.

    Results are sorted by h.  Raises CapExceeded if the q^(n/m - 1)
    candidate right components exceed `cap`.
    """
    F = f.field
    n = f.degree
    if m < 1 or n % m:
        raise ValueError(f"left degree {m} does not divide {n}")
    r = n // m
    cap = default_cap() if cap is None else cap
    if F.q ** (r - 1) > cap:
        raise CapExceeded(f"{F.q}^{r - 1} candidate right components exceed cap {cap}")
    out = []
    for h in monic_original_polys(F, r):
        g = h_adic_left(f, h)
        if g is not None:
            out.append(Decomposition(g, h))
    return sorted(out, key=lambda d: d.h)


def decompose(f: Poly, m: int, cap: int | None = None) -> Decomposition | None:
    """Some monic original decomposition with left degree m, or None.

    Uses the tame algorithm when possible, and otherwise the first
    brute-force decomposition in canonical order.
    """
    if m % f.field.p:
        return tame_decompose(f, m)
    found = wild_decompositions(f, m, cap)
    return found[0] if found else None


def find_collision(f: Poly, l: int, m: int, cap: int | None = None) -> Collision | None:
    """A collision of f with left degrees m (first pair) and l (second pair)."""
    if not m > l >= 2:
        raise ValueError("need m > l >= 2")
    if f.degree != l * m or not f.is_monic_original():
        raise ValueError(f"expected a monic original polynomial of degree {l * m}")
    left = decompose(f, m, cap)
    if left is None:
        return None
    right = decompose(f, l, cap)
    if right is None:
        return None
    return Collision(f, left, right)


def frobenius_decompose(f: Poly) -> Decomposition | None:
    """(g, x^p) when f lies in F[x^p], else None."""
    p = f.field.p
    if f.degree < p or not f.in_x_power(p):
        return None
    return Decomposition(f.deflate(p), Poly.monomial(f.field, p))
