"""Dense univariate polynomials over a finite field.

Coefficients are canonical field integers (see `rittkit.field`), stored
low-to-high in a tuple with no trailing zeros.  Besides ring arithmetic this
module carries the composition primitives used throughout the package:
composition, reversal, truncated power-series roots, original shifts,
second-normalization and the coefficient-wise Frobenius map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import GF, FieldElement

__all__ = [
    "Poly",
    "LinearPair",
    "compose",
    "normalize_monic_original",
    "shift",
    "second_normalize",
    "series_root",
    "poly_sqrt_exact",
    "frobenius_map",
    "pth_power_split",
    "monic_original_polys",
]


class Poly:
    """Immutable dense polynomial over a `GF`.

    ``Poly(F, [c0, c1, ...])`` accepts ints, digit lists or field elements.
    The zero polynomial has degree -1.
    """

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: GF, coeffs: Iterable = ()):
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs: tuple[int, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, field: GF, coeffs: list[int]) -> "Poly":
        # Trusted constructor: coeffs are canonical ints, may have trailing zeros.
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def monomial(cls, field: GF, n: int, c=1) -> "Poly":
        return cls._raw(field, [0] * n + [field.coerce(c)])

    @classmethod
    def constant(cls, field: GF, c) -> "Poly":
        return cls._raw(field, [field.coerce(c)])

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return self.lc == 1

    def is_original(self) -> bool:
        return self.coeff(0) == 0

    def is_monic_original(self) -> bool:
        return self.is_monic() and self.is_original()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.coeffs))
        return self._hash

    def __lt__(self, other: "Poly"):
        # Canonical order: by degree, then coefficients from the top down.
        return (self.degree, self.coeffs[::-1]) < (other.degree, other.coeffs[::-1])

    def __repr__(self):
        return f"Poly({self.field!r}, {self.to_list()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = str(c) if self.field.e == 1 else str(self.field.digits(c))
            if i == 0:
                terms.append(cs)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(terms)

    def to_list(self) -> list:
        if self.field.e == 1:
            return list(self.coeffs)
        return [self.field.digits(c) for c in self.coeffs]

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise ValueError("polynomials over different fields")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.constant(self.field, other if isinstance(other, FieldElement) else self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        if F.e == 1:
            p = F.p
            out = [(x + y) % p for x, y in zip(a, b)] + list(a[len(b):])
        else:
            out = [F.add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly._raw(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Poly._raw(self.field, _mul_coeffs(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        F = self.field
        c = F.coerce(c) if isinstance(c, FieldElement) else F.from_int(c)
        return Poly._raw(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.lc)
        quo = [0] * max(len(rem) - db, 0)
        b = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            c = F.mul(c, inv)
            quo[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]))
        return Poly._raw(F, quo), Poly._raw(F, rem[:db] if db > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(FieldElement(self.field, self.field.inv(self.lc)))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero if both inputs are zero)."""
        self._check(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        F = self.field
        return Poly._raw(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def eval(self, a) -> FieldElement:
        return FieldElement(self.field, self._eval(self.field.coerce(a)))

    def _eval(self, a: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def __call__(self, arg):
        if isinstance(arg, Poly):
            return compose(self, arg)
        return self.eval(arg)

    def compose(self, h: "Poly") -> "Poly":
        return compose(self, h)

    def reverse(self, length: int | None = None) -> "Poly":
        """x^(length-1) * f(1/x); `length` defaults to deg f + 1."""
        n = len(self.coeffs) if length is None else length
        cs = list(self.coeffs[:n]) + [0] * (n - len(self.coeffs))
        return Poly._raw(self.field, cs[::-1])

    def original(self) -> "Poly":
        """self - self(0)."""
        if not self.coeffs or not self.coeffs[0]:
            return self
        return Poly._raw(self.field, [0, *self.coeffs[1:]])

    def truncate(self, n: int) -> "Poly":
        return Poly._raw(self.field, list(self.coeffs[:n]))

    def in_x_power(self, k: int) -> bool:
        """True iff f is a polynomial in x^k."""
        return all(c == 0 for i, c in enumerate(self.coeffs) if i % k)

    def deflate(self, k: int) -> "Poly":
        """F with F(x^k) = f; requires `in_x_power(k)`."""
        if not self.in_x_power(k):
            raise ValueError(f"polynomial is not in F[x^{k}]")
        return Poly._raw(self.field, list(self.coeffs[::k]))

    def inflate(self, k: int) -> "Poly":
        """f(x^k)."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly._raw(self.field, out)


def _mul_coeffs(F: GF, a: Sequence[int], b: Sequence[int], limit: int | None = None) -> list[int]:
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit)
    if F.e == 1:
        out = [0] * n
        for i, x in enumerate(a):
            if x == 0 or i >= n:
                continue
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
        p = F.p
        return [c % p for c in out]
    out = [0] * n
    mul, add = F.mul, F.add
    for i, x in enumerate(a):
        if x == 0 or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            y = b[j]
            if y:
                out[i + j] = add(out[i + j], mul(x, y))
    return out


def compose(g: Poly, h: Poly) -> Poly:
    """g(h), by Horner's rule in h."""
    g._check(h)
    F = g.field
    acc = Poly._raw(F, [])
    for c in reversed(g.coeffs):
        acc = acc * h
        if c:
            acc = acc + Poly._raw(F, [c])
    return acc


@dataclass(frozen=True)
class LinearPair:
    """The linear polynomial a*x + b (a != 0)."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if not self.a:
            raise ValueError("linear polynomial needs a nonzero slope")

    @property
    def field(self) -> GF:
        return self.a.field

    def as_poly(self) -> Poly:
        return Poly(self.field, [self.b, self.a])

    def inverse(self) -> "LinearPair":
        ainv = self.a.inverse()
        return LinearPair(ainv, -self.b * ainv)

    def __call__(self, arg):
        return compose(self.as_poly(), arg) if isinstance(arg, Poly) else self.a * arg + self.b


def normalize_monic_original(f: Poly) -> tuple[Poly, LinearPair]:
    """Return (a*f + b, (a, b)) with the result monic original."""
    if f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    F = f.field
    a = FieldElement(F, F.inv(f.lc))
    b = -a * f[0]
    return f * a + b, LinearPair(a, b)


def shift(f: Poly, a) -> Poly:
    """The original shift f(x + a) - f(a) of a monic original f."""
    if not f.is_monic_original():
        raise ValueError("shift is defined on monic original polynomials")
    return _shift(f, a)


def _shift(f: Poly, a) -> Poly:
    # Works for any f: (x - f(a)) o f o (x + a) is always original.
    F = f.field
    a = F.coerce(a)
    if a == 0:
        return f.original()
    g = compose(f, Poly._raw(F, [a, 1]))
    return g.original()


def second_normalize(f: Poly) -> tuple[Poly, FieldElement]:
    """Shift f so that its x^(n-1) coefficient vanishes.

    Returns the shifted polynomial and the shift b = -f_{n-1}/n.
    """
    F = f.field
    n = f.degree
    if n < 1 or not f.is_monic_original():
        raise ValueError("second_normalize needs a monic original polynomial")
    if n % F.p == 0:
        raise ValueError(f"characteristic {F.p} divides degree {n}")
    b = F.neg(F.div(f.coeff(n - 1), F.from_int(n)))
    return _shift(f, b), FieldElement(F, b)


def _series_inverse(f: Poly, prec: int) -> Poly:
    """1/f mod x^prec for f(0) = 1, by Newton iteration."""
    F = f.field
    s = Poly._raw(F, [1])
    k = 1
    two = Poly._raw(F, [F.from_int(2)])
    while k < prec:
        k = min(2 * k, prec)
        fs = Poly._raw(F, _mul_coeffs(F, f.coeffs[:k], s.coeffs, k))
        s = Poly._raw(F, _mul_coeffs(F, s.coeffs, (two - fs).coeffs, k))
    return s.truncate(prec)


def series_root(f: Poly, m: int, prec: int) -> Poly:
    """The power series s with s(0) = 1 and s^m = f mod x^prec.

    Newton iteration s <- s - (s^m - f) / (m s^(m-1)), doubling the
    precision each step.  Requires f(0) = 1 and p not dividing m.
    """
    F = f.field
    if f.coeff(0) != 1:
        raise ValueError("series_root needs constant term 1")
    if m % F.p == 0:
        raise ValueError(f"characteristic {F.p} divides the root index {m}")
    if prec <= 0:
        return Poly._raw(F, [])
    minv = F.inv(F.from_int(m))
    s = Poly._raw(F, [1])
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        sm1 = _trunc_pow(s, m - 1, k)
        sm = Poly._raw(F, _mul_coeffs(F, sm1.coeffs, s.coeffs, k))
        err = sm - f.truncate(k)
        corr = Poly._raw(F, _mul_coeffs(F, err.coeffs, _series_inverse(sm1, k).coeffs, k))
        s = s - corr.scale(FieldElement(F, minv))
    return s.truncate(prec)


def _trunc_pow(f: Poly, k: int, prec: int) -> Poly:
    F = f.field
    result = [1]
    base = list(f.coeffs[:prec])
    while k:
        if k & 1:
            result = _mul_coeffs(F, result, base, prec)
        k >>= 1
        if k:
            base = _mul_coeffs(F, base, base, prec)
    return Poly._raw(F, result)


def poly_sqrt_exact(f: Poly) -> Poly:
    """Monic u with u^2 = f, for a monic perfect square f.

    Odd characteristic: top-down coefficient matching.  Characteristic 2:
    squares are exactly the p-th powers, so u = phi_{-1}(f deflated by 2).
    Raises ValueError when f is not a square.
    """
    F = f.field
    if f.is_zero() or not f.is_monic() or f.degree % 2:
        raise ValueError("expected a monic polynomial of even degree")
    d = f.degree // 2
    if F.p == 2:
        if not f.in_x_power(2):
            raise ValueError("not a perfect square")
        return frobenius_map(f.deflate(2), -1)
    inv2 = F.inv(2)
    u = [0] * (d + 1)
    u[d] = 1
    for k in range(d - 1, -1, -1):
        # coefficient of x^(d+k) in u^2 is 2*u_k + sum over i+j=d+k with i,j in (k, d)
        acc = 0
        for i in range(k + 1, d):
            j = d + k - i
            if k < j < d:
                acc = F.add(acc, F.mul(u[i], u[j]))
        u[k] = F.mul(F.sub(f.coeff(d + k), acc), inv2)
    up = Poly._raw(F, u)
    if up * up != f:
        raise ValueError("not a perfect square")
    return up


def frobenius_map(f: Poly, j: int) -> Poly:
    """Raise every coefficient to the power p^j, keeping exponents."""
    F = f.field
    return Poly._raw(F, [F.frobenius(c, j) for c in f.coeffs])


def pth_power_split(f: Poly) -> tuple[int, Poly]:
    """Largest j with f = x^(p^j) o core, together with the core."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    p = f.field.p
    j, core = 0, f
    while core.degree >= 1 and core.in_x_power(p):
        core = frobenius_map(core.deflate(p), -1)
        j += 1
    return j, core


def monic_original_polys(field: GF, degree: int) -> Iterable[Poly]:
    """Every monic original polynomial of the given degree (q^(degree-1) of them)."""
    for mid in itertools.product(range(field.q), repeat=degree - 1):
        yield Poly._raw(field, [0, *mid, 1])
