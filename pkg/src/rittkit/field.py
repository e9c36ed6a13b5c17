"""Exact arithmetic in finite fields F_q, q = p^e.

Elements are stored as canonical integers: for e = 1 the residue in
[0, p), for e > 1 the base-p number whose digits d_0, ..., d_{e-1} are the
coefficients of the element as a polynomial in the generator t modulo the
field's defining polynomial.  `FieldElement` wraps such an integer together
with its field for use at API boundaries.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence

__all__ = ["GF", "FieldElement", "make_field", "field_of_order", "prime_power", "is_prime", "MAX_TABLE_ORDER"]

# Extension fields use exp/log tables; refuse to build anything larger.
MAX_TABLE_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e; ValueError if q is not a prime power."""
    factors = _prime_factors(q) if q >= 2 else []
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, e = factors[0], 0
    while q % p == 0:
        q //= p
        e += 1
    return p, e


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p as int lists, low-to-high; used only for
# -- modulus search before a field object exists.

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, mod, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _x_power_pk(k: int, mod: list[int], p: int) -> list[int]:
    """x^(p^k) mod `mod`, by k successive p-th powerings."""
    r = _pmod([0, 1], mod, p)
    for _ in range(k):
        acc = [1]
        base = r
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, mod, p)
            base = _pmulmod(base, base, mod, p)
            e >>= 1
        r = acc
    return r


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic `mod` over F_p."""
    mod = list(mod)
    e = len(mod) - 1
    if e < 1 or mod[-1] != 1:
        return False
    if e == 1:
        return True
    if mod[0] % p == 0:
        return False
    xp = _x_power_pk(e, mod, p)
    if _trim([(c - d) % p for c, d in itertools.zip_longest(xp, [0, 1], fillvalue=0)]):
        return False
    for r in _prime_factors(e):
        xr = _x_power_pk(e // r, mod, p)
        diff = _trim([(c - d) % p for c, d in itertools.zip_longest(xr, [0, 1], fillvalue=0)])
        if len(_pgcd(mod, diff, p)) != 1:
            return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    # itertools.product varies the last slot fastest, which is exactly
    # lexicographic order on (c_0, ..., c_{e-1}).
    for low in itertools.product(range(p), repeat=e):
        cand = (*low, 1)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class GF:
    """The finite field with q = p^e elements.

    Use `make_field` to construct instances; the constructor assumes its
    arguments were already validated.
    """

    def __init__(self, p: int, e: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if e > 1:
            self._build_tables()

    # -- identity ---------------------------------------------------------

    def _key(self):
        return (self.p, self.e, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, mod={list(self.modulus)})"

    def __str__(self):
        if self.e == 1:
            return str(self.p)
        return f"{self.p}^{self.e}:mod={','.join(map(str, self.modulus))}"

    # -- digits -----------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.e):
            a, d = divmod(a, p)
            out.append(d)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) != self.e:
            raise ValueError(f"expected {self.e} base-{self.p} digits, got {len(ds)}")
        v = 0
        for d in reversed(ds):
            if not 0 <= d < self.p:
                raise ValueError(f"digit {d} out of range for p={self.p}")
            v = v * self.p + d
        return v

    def _build_tables(self):
        q = self.q
        if q > MAX_TABLE_ORDER:
            raise ValueError(f"extension field of order {q} exceeds supported size {MAX_TABLE_ORDER}")
        order = q - 1
        factors = _prime_factors(order)
        for g in range(self.p, q):
            gd = _trim(self.digits(g))
            ok = True
            for r in factors:
                x = [1]
                base = gd
                k = order // r
                while k:
                    if k & 1:
                        x = _pmulmod(x, base, list(self.modulus), self.p)
                    base = _pmulmod(base, base, list(self.modulus), self.p)
                    k >>= 1
                if x == [1]:
                    ok = False
                    break
            if ok:
                break
        else:  # pragma: no cover - every finite field has a generator
            raise AssertionError("no primitive element found")
        exp = [0] * (2 * order)
        log = [0] * q
        cur = [1]
        for i in range(order):
            v = self.from_digits(cur + [0] * (self.e - len(cur)))
            exp[i] = v
            log[v] = i
            cur = _pmulmod(cur, gd, list(self.modulus), self.p)
        exp[order:] = exp[:order]
        self._exp = exp
        self._log = log

    # -- arithmetic on canonical ints -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        out, mult = 0, 1
        while a:
            a, d = divmod(a, p)
            out += (-d % p) * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        """Square-and-multiply; negative exponents go through the inverse."""
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def frobenius(self, a: int, j: int = 1) -> int:
        """a^(p^j); negative j gives iterated p-th roots."""
        j %= self.e
        if j == 0 or a == 0:
            return a
        return self.pow(a, self.p**j)

    def pth_root(self, a: int) -> int:
        """The unique b with b^p = a, namely a^(q/p)."""
        return self.pow(a, self.q // self.p)

    # -- elements ---------------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def coerce(self, value) -> int:
        """Canonical integer for an int, digit list or FieldElement."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value.value
        if isinstance(value, (list, tuple)):
            return self.from_digits(list(value))
        if isinstance(value, int):
            if self.e == 1:
                return value % self.p
            if not 0 <= value < self.q:
                raise ValueError(f"integer {value} does not encode an element of F_{self.q}")
            return value
        raise TypeError(f"cannot interpret {value!r} as an element of {self!r}")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> Iterable["FieldElement"]:
        return (FieldElement(self, v) for v in range(self.q))

    @cached_property
    def generator(self) -> "FieldElement":
        """The element t (the class of x modulo the defining polynomial)."""
        if self.e == 1:
            raise ValueError("prime fields have no distinguished generator")
        return FieldElement(self, self.p)


def make_field(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Build F_{p^e}.

    When e > 1 and no modulus is given, the lexicographically smallest
    monic irreducible polynomial of degree e (coefficients read low to
    high) is used, so repeated calls give identical fields.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if modulus is not None:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != e + 1:
            raise ValueError(f"modulus must have degree {e}, got {len(mod) - 1}")
        if any(not 0 <= c < p for c in mod):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if mod[-1] != 1:
            raise ValueError("modulus must be monic")
        if not _is_irreducible(mod, p):
            raise ValueError(f"modulus {list(mod)} is reducible over F_{p}")
        if e == 1:
            mod = None
    elif e > 1:
        mod = _smallest_irreducible(p, e)
    else:
        mod = None
    return GF(p, e, mod)


def field_of_order(q: int) -> GF:
    """The field with q elements and its canonical modulus."""
    return make_field(*prime_power(q))


class FieldElement:
    """An element of a `GF`, with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        self.field = field
        self.value = value

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise ValueError("operands belong to different fields")
            return b.value
        if isinstance(b, int):
            return self.field.from_int(b)
        return NotImplemented

    def __add__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, b):
        v = self._other(b)
        return NotImplemented if v is NotImplemented else FieldElement(self.field, self.field.div(v, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def pth_root(self) -> "FieldElement":
        return FieldElement(self.field, self.field.pth_root(self.value))

    def frobenius(self, j: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, j))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, b):
        if isinstance(b, FieldElement):
            return self.field == b.field and self.value == b.value
        if isinstance(b, int):
            return self.value == self.field.from_int(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def digits(self) -> list[int]:
        return self.field.digits(self.value)

    def __repr__(self):
        if self.field.e == 1:
            return f"{self.value} (mod {self.field.p})"
        return f"{self.digits()} in GF({self.field.q})"
