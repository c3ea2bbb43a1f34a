"""
Three descriptions of the same subrings
=======================================

For a soluble ring with p larger than the dimension, the minimal
def-abnormal subrings, the Cartan subrings and the minimal Engel subrings
of nilpotent subrings all coincide. Here we compute each list by brute
force and compare.
"""

from liefp.abnormal import minimal_def_abnormal
from liefp.corpus import affine2, borel, random_soluble
from liefp.engel import cartan_subring, cartan_subrings, engel_minimal_subrings

for g in (affine2(5), borel(2, 5), random_soluble(3, 3, 7)):
    cartans = cartan_subrings(g)
    abnormal = minimal_def_abnormal(g)
    engel = engel_minimal_subrings(g)
    same = set(cartans) == set(abnormal) == set(engel)
    print(f"{g.name:28s} {len(cartans)} Cartan subrings, all three lists agree: {same}")
    # The Engel search finds one of them without any enumeration.
    print("   one found directly:", cartan_subring(g).basis)
