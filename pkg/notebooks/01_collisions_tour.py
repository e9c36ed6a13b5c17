"""
Collisions g o h = g* o h* over small fields
=============================================

Build the two families of collisions, recover their parameters, and look
at the one place they overlap.
"""

from rittkit import (
    FirstCaseForm,
    Poly,
    SecondCaseForm,
    build_first_case,
    build_second_case,
    classify,
    compose,
    make_field,
    second_case_to_first,
    shift,
)

F = make_field(5)
x = Poly.x(F)

# exponential type: w = x + 1, l = 2, m = 3
c = build_first_case(FirstCaseForm.make(2, 3, x + 1, 0))
print("f    =", c.f)
for name, comp in zip(("g", "h", "g*", "h*"), c.components):
    print(f"{name:4} = {comp}")
assert compose(c.left.g, c.left.h) == compose(c.right.g, c.right.h) == c.f

# shifting f by a moves the parameter a and nothing else
r = classify(shift(c.f, 3), 2, 3)
print(r.kind, r.form.w, r.form.a)

# Dickson type with z = 1
d = build_second_case(SecondCaseForm.make(2, 3, 1, 0, F))
print("T_6 shifted:", d.f)

# at l = 2 every Dickson collision is also exponential
as_first = second_case_to_first(SecondCaseForm.make(2, 3, 1, 0, F))
print("w =", as_first.w)
print(build_first_case(as_first).f == d.f)

# for l = 3 the families are disjoint
d34 = build_second_case(SecondCaseForm.make(3, 4, 2, 0, F))
print(classify(d34.f, 3, 4).kind)

# something that is not a collision
print(classify(Poly(F, [0, 0, 0, 0, 0, 1, 1]), 2, 3))
