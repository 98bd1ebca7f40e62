"""
Sphere family
=============

Build the 8-generator presentation for one parameter tuple, look at its
Euler characteristic and abelianization, then collapse it with coset
enumeration.  Finally scan a small window of tuples.
"""
from itertools import product

from toruscalc import abelianization, build_sphere, coset_enumerate, tietze_simplify, verify_sphere

###############################################################################
# One member of the family
sphere = build_sphere(2, -1, 1, 3)
p = sphere.presentation
print("generators:", ", ".join(p.generators))
for r in p.relators:
    print("   ", r)
print("chi =", sphere.chi)
print("H1  =", abelianization(p))

###############################################################################
# Tietze moves shrink the presentation before anything else happens
small = tietze_simplify(p)
print("after Tietze:", len(small.generators), "generators,", len(small.relators), "relators")

###############################################################################
# Coset enumeration over the trivial subgroup: index 1 means the group is trivial
out = coset_enumerate(p, budget=100_000)
print(out)

###############################################################################
# A whole window of tuples
verdicts = [verify_sphere(*t).verdict for t in product(range(-1, 2), repeat=4)]
print(f"{verdicts.count('certified')}/{len(verdicts)} certified")
