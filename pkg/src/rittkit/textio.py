"""Text and JSON formats for fields, elements and polynomials.

Fields are written ``p^e`` with an optional ``:mod=c0,c1,...,ce`` giving
the defining polynomial low-to-high; a bare prime (or prime power) is also
accepted.  Elements of prime fields are integers; elements of extension
fields are digit lists ``[d0,...,d_{e-1}]`` or their base-p integer code.
Polynomials are comma-separated coefficients, lowest degree first.
"""

from __future__ import annotations

import re

from .field import GF, FieldElement, make_field, prime_power
from .poly import Poly

__all__ = [
    "parse_field",
    "format_field",
    "parse_element",
    "format_element",
    "parse_poly",
    "format_poly",
    "poly_to_json",
    "poly_from_json",
    "element_to_json",
]

_FIELD_RE = re.compile(r"^\s*(\d+)(?:\s*\^\s*(\d+))?\s*(?::\s*mod\s*=\s*\[?([-\d,\s]+)\]?)?\s*$")
_TOKEN_RE = re.compile(r"\[[^\]]*\]|[^,\[\]]+")


def parse_field(text: str) -> GF:
    match = _FIELD_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse field spec {text!r}; expected p^e[:mod=c0,...,ce]")
    base, exp, mod = match.groups()
    base = int(base)
    if exp is None:
        p, e = prime_power(base)
    else:
        p, e = base, int(exp)
    modulus = None
    if mod is not None:
        modulus = [int(c) for c in mod.split(",") if c.strip()]
        if len(modulus) != e + 1:
            raise ValueError(f"modulus needs {e + 1} coefficients, got {len(modulus)}")
    return make_field(p, e, modulus)


def format_field(F: GF) -> str:
    return str(F)


def parse_element(F: GF, text: str) -> FieldElement:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ValueError(f"unterminated digit list {text!r}")
        digits = [int(d) for d in text[1:-1].split(",") if d.strip()]
        if len(digits) != F.e:
            raise ValueError(f"digit list {text} has length {len(digits)}, field needs {F.e}")
        return FieldElement(F, F.from_digits(digits))
    value = int(text)
    if F.e > 1 and not 0 <= value < F.q:
        raise ValueError(f"integer {value} does not encode an element of F_{F.q}")
    return FieldElement(F, F.coerce(value))


def element_to_json(F: GF, value: int):
    return value if F.e == 1 else F.digits(value)


def format_element(F: GF, value: int) -> str:
    if F.e == 1:
        return str(value)
    return "[" + ",".join(map(str, F.digits(value))) + "]"


def parse_poly(F: GF, text: str) -> Poly:
    tokens = [t.strip() for t in _TOKEN_RE.findall(text) if t.strip()]
    if not tokens:
        raise ValueError(f"empty polynomial {text!r}")
    return Poly(F, [parse_element(F, t).value for t in tokens])


def format_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    return ",".join(format_element(f.field, c) for c in f.coeffs)


def poly_to_json(f: Poly) -> list:
    return [element_to_json(f.field, c) for c in f.coeffs]


def poly_from_json(F: GF, data: list) -> Poly:
    return Poly(F, [F.from_digits(c) if isinstance(c, list) else F.coerce(c) for c in data])
