"""
Building rings and reading off their series
===========================================

Rings are stored as structure tensors over F_p. Basis vectors are 0-based.
"""

from liefp.corpus import affine2, borel, heisenberg, sl2
from liefp.liering import bracket, center, derived_series, is_nilpotent, is_soluble, lower_central_series, validate

# The 3-dim Heisenberg ring: [e0, e1] = e2, everything else zero.
h = heisenberg(5)
print(h.name, "bracket e0,e1 ->", bracket(h, [1, 0, 0], [0, 1, 0]))
print("  center:", center(h).basis)
print("  lower central dims:", [U.dim for U in lower_central_series(h)])

# Upper triangular 2x2 matrices, basis (e11, e12, e22).
b = borel(2, 5)
print(b.name, "derived dims:", [U.dim for U in derived_series(b)])
print("  soluble:", is_soluble(b), " nilpotent:", is_nilpotent(b))

# sl2 is perfect, so its derived series never moves.
s = sl2(5)
print(s.name, "soluble:", is_soluble(s))

# Every ring produced by the library passes the axiom check.
for g in (h, b, s, affine2(7)):
    assert validate(g)
