"""Exhaustive census of D_{n,l} & D_{n,m} over small fields.

For a fixed right component h, composition g -> g o h is F_q-linear in
the coefficients of g, hence F_p-linear in their base-p digits.  Each side
of the census is therefore one integer matrix product per h, after which
rows become byte keys and numpy's sorted set routines do the rest.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .counting import CountQuery, CountResult, applicable_bounds, count_formula
from .decompose import Decomposition
from .errors import CapExceeded, default_cap
from .field import GF, MAX_TABLE_ORDER, field_of_order
from .poly import Poly

__all__ = [
    "CensusElement",
    "CensusReport",
    "Side",
    "enumerate_side",
    "census",
    "image_size",
    "frobenius_counts",
    "FrobeniusCounts",
    "derivative_bounds_hold",
    "frobenius_conditions",
    "MATCH",
    "WITHIN",
    "VIOLATION",
]

MATCH, WITHIN, VIOLATION = "match", "within_bound", "VIOLATION"


def _digits_matrix(F: GF, values) -> np.ndarray:
    """Base-p digits of each field element, shape (len(values), e)."""
    return np.array([F.digits(v) for v in values], dtype=np.int64).reshape(len(values), F.e)


def _mult_blocks(F: GF) -> np.ndarray:
    """blocks[c] is the e x e matrix of multiplication by c on digit rows."""
    basis = [F.p**i for i in range(F.e)]
    return np.array(
        [[F.digits(F.mul(c, b)) for b in basis] for c in range(F.q)], dtype=np.int64
    ).reshape(F.q, F.e, F.e)


@dataclass
class Side:
    """All compositions g o h with deg g = left, deg h = right.

    ``rows[r]`` holds the digits of coefficients 1 .. n-1 of the r-th
    composition, which uses ``hs[r // G]`` and ``gs[r % G]`` (G = len(gs)).
    """

    field: GF
    left: int
    right: int
    gs: np.ndarray
    hs: np.ndarray
    rows: np.ndarray

    @property
    def n(self) -> int:
        return self.left * self.right

    def keys(self) -> np.ndarray:
        return _as_keys(self.rows)

    def decomposition(self, r: int) -> Decomposition:
        G = len(self.gs)
        g = [0, *map(int, self.gs[r % G]), 1]
        h = [0, *map(int, self.hs[r // G]), 1]
        return Decomposition(Poly._raw(self.field, g), Poly._raw(self.field, h))


def _as_keys(rows: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    if rows.shape[1] == 0:
        return np.zeros(rows.shape[0], dtype="V1")
    return rows.view(np.dtype((np.void, rows.shape[1]))).ravel()


def _middle(values: int, count: int) -> np.ndarray:
    if count == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(values), repeat=count)), dtype=np.int64)


def enumerate_side(F: GF, left: int, right: int) -> Side:
    """Every composition of monic original polynomials of the given degrees."""
    if F.q > MAX_TABLE_ORDER:
        raise ValueError(f"census limited to q <= {MAX_TABLE_ORDER}")
    p, e = F.p, F.e
    n = left * right
    gs = _middle(F.q, left - 1)
    hs = _middle(F.q, right - 1)
    blocks = _mult_blocks(F)
    gdig = _digits_matrix(F, gs.ravel()).reshape(len(gs), (left - 1) * e)
    out = np.empty((len(hs), len(gs), (n - 1) * e), dtype=np.uint8)
    for idx, mid in enumerate(hs):
        h = Poly._raw(F, [0, *map(int, mid), 1])
        power = Poly._raw(F, [1])
        A = np.zeros(((left - 1) * e, (n - 1) * e), dtype=np.int64)
        for i in range(1, left + 1):
            power = power * h
            coeffs = list(power.coeffs[1:n]) + [0] * (n - len(power.coeffs))
            if i < left:
                A[(i - 1) * e : i * e] = np.concatenate([blocks[c] for c in coeffs], axis=1)
            else:
                base = _digits_matrix(F, coeffs).ravel()
        out[idx] = (gdig @ A + base) % p
    return Side(F, left, right, gs, hs, out.reshape(-1, (n - 1) * e))


def _frobenius_mask(rows: np.ndarray, n: int, p: int, e: int) -> np.ndarray:
    """True where the coefficient row lies in F[x^p] (the leading x^n included)."""
    if n % p:
        return np.zeros(len(rows), dtype=bool)
    cols = [j for j in range(1, n) if j % p]
    if not cols:
        return np.ones(len(rows), dtype=bool)
    idx = np.concatenate([np.arange((j - 1) * e, j * e) for j in cols])
    return ~rows[:, idx].any(axis=1)


def _key_rows(keys: np.ndarray, width: int) -> np.ndarray:
    if width == 0:
        return np.zeros((len(keys), 0), dtype=np.uint8)
    return np.frombuffer(keys.tobytes(), dtype=np.uint8).reshape(-1, width)


@dataclass(frozen=True)
class CensusElement:
    """An element of the intersection with all its decompositions.

    ``left`` lists those with deg g = m, ``right`` those with deg g = l.
    """

    f: Poly
    left: tuple[Decomposition, ...]
    right: tuple[Decomposition, ...]

    @property
    def frobenius(self) -> bool:
        return self.f.in_x_power(self.f.field.p)


@dataclass(frozen=True)
class CensusReport:
    query: CountQuery
    t_exact: int
    frobenius_count: int
    size_l: int
    size_m: int
    frobenius_l: int
    frobenius_m: int
    frobenius_union: int
    formula: CountResult
    bounds: tuple[CountResult, ...]
    verdict: str
    elements: tuple[CensusElement, ...] = dc_field(default=(), compare=False, repr=False)

    def to_dict(self) -> dict:
        Q = self.query
        return {
            "field": {"p": Q.p, "e": Q.e, "q": Q.q},
            "l": Q.l,
            "m": Q.m,
            "n": Q.n,
            "t_exact": self.t_exact,
            "frobenius_count": self.frobenius_count,
            "sizes": {"D_n_l": self.size_l, "D_n_m": self.size_m},
            "frobenius": {"D_n_l": self.frobenius_l, "D_n_m": self.frobenius_m, "D_n": self.frobenius_union},
            "formula": self.formula.to_dict(),
            "bounds": [b.to_dict() for b in self.bounds],
            "verdict": self.verdict,
        }


def _verdict(t: int, formula: CountResult, bounds) -> str:
    if not all(b.holds(t) for b in (formula, *bounds)):
        return VIOLATION
    return MATCH if formula.kind == "exact" else WITHIN


def _check_cap(q: int, l: int, m: int, cap: int | None):
    cap = default_cap() if cap is None else cap
    need = q ** (l - 1) * q ** (m - 1) * 2
    if need > cap:
        raise CapExceeded(f"census needs {need} compositions, cap is {cap}")


def _group(side: Side, keys: np.ndarray, wanted: np.ndarray) -> dict[bytes, list[int]]:
    rows = np.nonzero(np.isin(keys, wanted))[0]
    out: dict[bytes, list[int]] = {}
    for r in rows:
        out.setdefault(keys[r].tobytes(), []).append(int(r))
    return out


def census(query: CountQuery, cap: int | None = None, collect: bool = False) -> CensusReport:
    """Count D_{n,l} & D_{n,m} by enumerating both composition maps.

    With ``collect`` the report also carries every intersection element
    with all of its decompositions, in canonical (sorted key) order.
    """
    _check_cap(query.q, query.l, query.m, cap)
    F = field_of_order(query.q)
    l, m, n, p, e = query.l, query.m, query.n, F.p, F.e
    side_l = enumerate_side(F, l, m)
    side_m = enumerate_side(F, m, l)
    keys_l, keys_m = side_l.keys(), side_m.keys()
    uniq_l = np.unique(keys_l)
    uniq_m = np.unique(keys_m)
    inter = np.intersect1d(uniq_l, uniq_m, assume_unique=True)
    width = (n - 1) * e
    frob_inter = _frobenius_mask(_key_rows(inter, width), n, p, e)
    frob_l = _frobenius_mask(_key_rows(uniq_l, width), n, p, e)
    frob_m = _frobenius_mask(_key_rows(uniq_m, width), n, p, e)
    union_frob = np.union1d(uniq_l[frob_l], uniq_m[frob_m])
    t = int((~frob_inter).sum())
    formula = count_formula(query)
    bounds = tuple(applicable_bounds(query))
    elements: tuple[CensusElement, ...] = ()
    if collect:
        by_l = _group(side_l, keys_l, inter)
        by_m = _group(side_m, keys_m, inter)
        items = []
        for key, row in zip(inter, _key_rows(inter, width)):
            coeffs = [0] + [F.from_digits(list(map(int, row[j * e : (j + 1) * e]))) for j in range(n - 1)] + [1]
            kb = key.tobytes()
            items.append(
                CensusElement(
                    Poly._raw(F, coeffs),
                    tuple(side_m.decomposition(r) for r in by_m[kb]),
                    tuple(side_l.decomposition(r) for r in by_l[kb]),
                )
            )
        elements = tuple(items)
    return CensusReport(
        query=query,
        t_exact=t,
        frobenius_count=int(frob_inter.sum()),
        size_l=len(uniq_l),
        size_m=len(uniq_m),
        frobenius_l=int(frob_l.sum()),
        frobenius_m=int(frob_m.sum()),
        frobenius_union=len(union_frob),
        formula=formula,
        bounds=bounds,
        verdict=_verdict(t, formula, bounds),
        elements=elements,
    )


def _image_keys(F: GF, n: int, left: int) -> np.ndarray:
    # Left degree 1 or n enumerates all of P_n.
    if n % left:
        raise ValueError(f"{left} does not divide {n}")
    return np.unique(enumerate_side(F, left, n // left).keys())


def image_size(F: GF, n: int, left: int) -> int:
    """#D_{n,left}; left degree 1 or n gives all of P_n."""
    return len(_image_keys(F, n, left))


@dataclass(frozen=True)
class FrobeniusCounts:
    """#(D_n & F[x^p]) and the per-side counts #(D_{n,l} & F[x^p]), #(D_{n,m} & F[x^p])."""

    total: int
    side_l: int
    side_m: int


def _side_value(F: GF, n: int, left: int) -> int:
    """#(D_{n,left} & F[x^p]) via the deflated images in degree n/p.

    g o h lies in F[x^p] iff g or h does.  Stripping x^p from g lands in
    D_{n/p, left/p}, stripping it from h lands in D_{n/p, left}; when p
    divides both degrees the two images overlap and their union is counted.
    """
    p = F.p
    right = n // left
    parts = []
    if left % p == 0:
        parts.append(_image_keys(F, n // p, left // p))
    if right % p == 0:
        parts.append(_image_keys(F, n // p, left))
    if not parts:
        raise ValueError(f"p={p} divides neither {left} nor {right}")
    if len(parts) == 1:
        return len(parts[0])
    return len(np.union1d(*parts))


def frobenius_counts(query: CountQuery) -> FrobeniusCounts:
    """Frobenius counts from the reduction to degree n/p."""
    F = field_of_order(query.q)
    p, n = F.p, query.n
    if n % p:
        raise ValueError(f"p={p} does not divide n={n}")
    return FrobeniusCounts(
        total=query.q ** (n // p - 1),
        side_l=_side_value(F, n, query.l),
        side_m=_side_value(F, n, query.m),
    )


def derivative_bounds_hold(element: CensusElement, l: int, m: int) -> bool:
    """Derivative-degree constraints on a non-Frobenius collision with p | lm.

    For p not dividing l, every decomposition g* o h* with deg g* = l has
    0 <= deg (h*)' < m - l.  For p | l, every g o h with deg g = m has
    l * deg g' <= l*m - m - 1.
    """
    p = element.f.field.p
    if (l * m) % p or element.frobenius:
        raise ValueError("constraints concern non-Frobenius collisions with p | lm")
    if l % p:
        return all(0 <= d.h.derivative().degree < m - l for d in element.right)
    return all(l * d.g.derivative().degree <= l * m - m - 1 for d in element.left)


def frobenius_conditions(element: CensusElement) -> list[tuple[bool, bool, bool, bool]]:
    """For each pair of decompositions: f in F[x^p], f' = 0, g'(g*)' = 0, g'h'(g*)'(h*)' = 0."""
    f = element.f
    in_fp = element.frobenius
    df = f.derivative().is_zero()
    out = []
    for left in element.left:
        for right in element.right:
            dg, dh = left.g.derivative().is_zero(), left.h.derivative().is_zero()
            dgs, dhs = right.g.derivative().is_zero(), right.h.derivative().is_zero()
            out.append((in_fp, df, dg or dgs, dg or dh or dgs or dhs))
    return out
