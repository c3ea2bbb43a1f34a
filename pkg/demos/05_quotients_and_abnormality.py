"""
Def-abnormality through quotients
=================================

A subring containing an ideal I is def-abnormal exactly when its image in
g/I is. We walk every ideal and every subring of borel(2, 3).
"""

from liefp.abnormal import enumerate_subrings, is_def_abnormal
from liefp.corpus import borel
from liefp.liering import ideals, quotient

g = borel(2, 3)
agree = total = 0
for I in ideals(g):
    q = quotient(g, I)
    for a in enumerate_subrings(g, containing=I):
        total += 1
        agree += bool(is_def_abnormal(g, a)) == bool(is_def_abnormal(q.ring, q.project(a)))
print(f"{g.name}: {agree}/{total} (ideal, subring) pairs agree")

# A failing check comes with the culprit overring.
cert = is_def_abnormal(g, g.span([[0, 1, 0]]))
print("span{e12} def-abnormal?", bool(cert), "- overring", cert.witness.basis, "has normalizer", cert.witness_normalizer.basis)
