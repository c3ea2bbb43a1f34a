"""
Inner automorphisms and conjugate complements
=============================================

exp(ad x) is a finite sum when ad x is nilpotent of index at most p.
In affine2(p) the p complements of the derived ideal form a single orbit.
"""

from liefp.abnormal import enumerate_subrings
from liefp.corpus import affine2, heisenberg
from liefp.inner import exp_ad, inner_group, orbit
from liefp.liering import derived

h = heisenberg(5)
phi = exp_ad(h, [1, 0, 0])
print("exp(ad e0) on heisenberg(5):")
print(phi.matrix)

for p in (3, 5, 7):
    g = affine2(p)
    D = derived(g, g.full(), g.full())
    G = inner_group(g, D)
    complements = [U for U in enumerate_subrings(g) if U.dim == 1 and (U & D).dim == 0]
    reached = orbit(g, complements[0], G)
    print(f"{g.name}: group of order {len(G)}, {len(complements)} complements, orbit size {len(reached)}")
