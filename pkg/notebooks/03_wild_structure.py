"""
Wild collisions
===============

When p divides a degree the left derivative can vanish.  Strip the
Frobenius factor and see what is left.
"""

from rittkit import (
    Collision,
    CountQuery,
    Decomposition,
    FirstCaseForm,
    Poly,
    build_first_case,
    census,
    classify,
    compose,
    make_field,
    reduce_vanishing,
)
from rittkit.census import derivative_bounds_hold
from rittkit.poly import frobenius_map

F3 = make_field(3)
x3 = Poly.monomial(F3, 3)

# start from a tame collision of degrees (2, 5) and wrap x^3 around it
inner = build_first_case(FirstCaseForm.make(2, 5, Poly(F3, [1, 0, 1]), 1))
G, H, Gs, Hs = inner.components
c = Collision(
    compose(x3, inner.f),
    Decomposition(compose(x3, G), H),
    Decomposition(frobenius_map(Gs, 1), compose(x3, Hs)),
)
print(c.l, c.m, c.left.g.derivative())  # g' = 0

r = reduce_vanishing(c)
print(r.side, r.exponent, r.reduced)
print(r.inner == inner, r.inner_form.kind)

# the only non-Frobenius (3, 4) collision over F_2
report = census(CountQuery(2, 3, 4), collect=True)
for e in report.elements:
    if not e.frobenius:
        print(e.f, classify(e.f, 3, 4))
        print(derivative_bounds_hold(e, 3, 4))
        for d in e.right:
            print("  g* =", d.g, " h* =", d.h)
