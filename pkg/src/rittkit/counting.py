"""Closed-form counts and bounds for t = #(D_{n,l} & D_{n,m} minus F[x^p]).

D_{n,e} is the set of monic original polynomials of degree n that can be
written g o h with g, h monic original and deg g = e.  All formulas are
evaluated with exact rationals and floored only at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import is_prime, prime_power

__all__ = [
    "CountQuery",
    "CountResult",
    "count_formula",
    "applicable_bounds",
    "linear_closure_count",
    "decom_lower_bound",
    "ffcharb_lower_bound",
    "EXACT",
    "UPPER",
    "LOWER",
]

EXACT, UPPER, LOWER = "exact", "upper_bound", "lower_bound"


@dataclass(frozen=True)
class CountQuery:
    q: int
    l: int
    m: int

    def __post_init__(self):
        prime_power(self.q)
        if not self.m > self.l >= 2:
            raise ValueError(f"need m > l >= 2, got l={self.l}, m={self.m}")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def e(self) -> int:
        return prime_power(self.q)[1]

    @property
    def n(self) -> int:
        return self.l * self.m

    @property
    def s(self) -> int:
        return self.m // self.l

    @property
    def i(self) -> int:
        return math.gcd(self.l, self.m)

    @property
    def c(self) -> int:
        return -(-(self.m - self.l + 1) // self.l)

    @property
    def delta_l2(self) -> int:
        return int(self.l == 2)

    @property
    def delta_reduced(self) -> int:
        """[l/i = 2]: the indicator for the coprime collision inside row (v)."""
        return int(self.l // self.i == 2)


@dataclass(frozen=True)
class CountResult:
    kind: str
    value: int
    row: str

    def holds(self, t: int) -> bool:
        if self.kind == EXACT:
            return t == self.value
        if self.kind == UPPER:
            return t <= self.value
        return t >= self.value

    def to_dict(self) -> dict:
        return {"kind": self.kind, "row": self.row, "value": self.value}


def _int(x: Fraction) -> int:
    return math.floor(x)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _row_i(Q: CountQuery) -> CountResult:
    q = Q.q
    return CountResult(EXACT, q ** (Q.s + 1) + (1 - Q.delta_l2) * (q * q - q), "i")


def _row_vi(Q: CountQuery) -> CountResult:
    return CountResult(UPPER, Q.q ** (2 * Q.l + Q.s - 3), "vi")


def _row_vii(Q: CountQuery) -> CountResult:
    return CountResult(UPPER, Q.q ** (Q.m + _ceil_div(Q.l, Q.p) - 2), "vii")


def _row_viii(Q: CountQuery) -> CountResult:
    c = Q.c
    return CountResult(UPPER, Q.q ** (Q.m + Q.l - c + _ceil_div(c, Q.p) - 2), "viii")


def count_formula(query: CountQuery) -> CountResult:
    """The primary closed-form count or bound for the query.

    Exact rows win; among bounds the regime-specific one is returned.
    Every other bound that applies is listed by `applicable_bounds`.
    """
    Q = query
    q, p, l, m = Q.q, Q.p, Q.l, Q.m
    tame = Q.n % p != 0
    if Q.i == 1:
        if tame:
            return _row_i(Q)
        if l % p == 0:
            return CountResult(EXACT, 0, "ii")
        return CountResult(UPPER, q ** (Q.s + 1) - q ** (Q.s // p + 1), "iii")
    if tame:
        if m % l == 0:
            return CountResult(EXACT, q ** (2 * l + Q.s - 3), "iv")
        # The outer degree-i factors split off, leaving a coprime collision
        # on (l/i, m/i); its indicator is taken at l/i.
        value = Fraction(q) ** (2 * Q.i) * (Fraction(q) ** (Q.s - 1) + (1 - Q.delta_reduced) * (1 - Fraction(1, q)))
        if value.denominator != 1:
            raise ArithmeticError(f"row (v) value {value} is not an integer")
        return CountResult(EXACT, int(value), "v")
    if l % p == 0:
        return _row_viii(Q)
    return _row_vii(Q)


def applicable_bounds(query: CountQuery) -> list[CountResult]:
    """Every upper or lower bound from the table and corollaries that applies."""
    Q = query
    p = Q.p
    out = []
    if Q.n % p:
        out.append(_row_vi(Q))
    else:
        out.append(_row_viii(Q) if Q.l % p == 0 else _row_vii(Q))
        try:
            out.append(CountResult(LOWER, ffcharb_lower_bound(Q.q, Q.l, Q.m), "prime_l_lower"))
        except ValueError:
            pass
    primary = count_formula(Q)
    return [b for b in out if b != primary]


def linear_closure_count(inner: int, q: int) -> int:
    """Count after composing with all linear a*x + b on the left, a != 0."""
    return q * (q - 1) * inner


def _base_factor(q: int, p: int) -> Fraction:
    Q = Fraction(1, q)
    return 1 - Q * (1 + Q ** (p - 2) * (1 - Q) ** 2 / (1 - Q**p))


def _decom_bound_exact(q: int, p: int, d: int, a: int, m: int) -> Fraction:
    if d < 1 or a < 1 or a % p == 0 or m < 2:
        raise ValueError("need d >= 1, p not dividing a >= 1, m >= 2")
    if p**d == m:
        raise ValueError("bound needs p^d != m")
    if prime_power(q)[0] != p:
        raise ValueError(f"q={q} is not a power of p={p}")
    ell = a * p**d
    Q = Fraction(1, q)
    mu = math.gcd(p**d - 1, m)
    r = (p**d - 1) // mu
    main = _base_factor(q, p) * (1 - Q**ell)
    if mu != 1:
        main -= Q ** (ell + r - 2) * (1 - Q) ** 2 * (1 - Q ** (r * (mu - 1))) / (1 - Q**r) * (1 + Q ** (r * (p - 2)))
    return Fraction(q) ** (ell + m - 2) * main


def decom_lower_bound(q: int, p: int, d: int, a: int, m: int) -> int:
    """Floor of the lower bound on #D_{(a p^d) m, a p^d}."""
    return _int(_decom_bound_exact(q, p, d, a, m))


def _smallest_nontrivial_divisor(n: int) -> int | None:
    return next((k for k in range(2, n + 1) if n % k == 0), None)


def ffcharb_lower_bound(q: int, l: int, m: int) -> int:
    """Floor of the lower bound on t when l is a prime dividing m and p | lm."""
    p = prime_power(q)[0]
    if not is_prime(l) or m % l or m <= l or (l * m) % p:
        raise ValueError("need l prime, l | m, m > l and p | lm")
    Q = Fraction(1, q)
    if p == l:
        sd = _smallest_nontrivial_divisor(m // p)
        if sd is not None and sd <= p:
            raise ValueError(f"m/p = {m // p} has a nontrivial divisor <= p")
        return _int(Fraction(q) ** (2 * p + m // p - 3) * (1 - Q) * (1 - Q ** (p - 1)))
    d = 0
    while m % p ** (d + 1) == 0:
        d += 1
    # Right part w o h, deg w = m/l, counted with the decomposition bound
    # at left degree m/l and right degree l, then any left factor of degree l.
    inner = _decom_bound_exact(q, p, d, m // (l * p**d), l)
    return _int(Fraction(q) ** (l - 1) * inner)
