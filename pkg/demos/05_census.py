"""
Finite quotient census
======================

Count homomorphisms into small cyclic and symmetric groups.  A trivial
group has exactly one homomorphism into every target.
"""
from toruscalc import Presentation, build_sphere, build_X
from toruscalc.census import quotient_census

for name, p in [
    ("A4", Presentation.parse("gens: a,b / rels: a^2; b^3; (a b)^3")),
    ("X(1,1)", build_X(1, 1).presentation),
    ("S(1,1,1,1)", build_sphere(1, 1, 1, 1).presentation),
]:
    print(name, quotient_census(p, 24))
