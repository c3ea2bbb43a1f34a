"""
Fitting and Frattini subrings
=============================
"""

from liefp.corpus import affine2, borel, heisenberg
from liefp.engel import fitting, largest_nilpotent_ideal
from liefp.frattini import frattini

# The Fitting ideal from an element scan, next to the lattice answer.
for g in (affine2(5), borel(2, 5), heisenberg(5)):
    res = fitting(g)
    print(f"{g.name:14s} ad-nilpotent span {res.space.basis}  ideal={res.is_ideal} nilpotent={res.is_nilpotent}")
    assert res.space == largest_nilpotent_ideal(g)

# Frattini subring: intersect every maximal proper subring.
for g in (heisenberg(3), affine2(3), borel(2, 3)):
    res = frattini(g)
    print(f"{g.name:14s} {len(res.maximal_subrings)} maximal subrings, Frattini = {res.space.basis}")
