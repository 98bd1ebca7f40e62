"""
SL(3,Z) and unit transvections
==============================

Factor a matrix into unit transvections, then replay the factors as
circle surgeries on the 3-torus bundle with identity monodromy.
"""
from toruscalc import IntMatrix, MappingTorus, Transvection, cs_condition, factor_transvections
from toruscalc.mapping_torus import circle_surgery_group, realize_by_surgeries, replay
from toruscalc.intmatrix import smith_normal_form

A = Transvection(1, 2).matrix() @ Transvection(2, 1).matrix()
print(A.to_text())
print("factors:", [str(t) for t in factor_transvections(A)])

###############################################################################
# Surgery order is the reverse of the product order
steps = realize_by_surgeries(A)
print("surgeries:", [str(t) for t in steps])
print("replayed monodromy:", replay(steps).monodromy.to_text())

###############################################################################
# A is not of Cappell-Shaneson type: det(A - I) = 0, so coker(A - I) is infinite
I3 = IntMatrix.identity(3)
print("det(A - I) =", cs_condition(A))
print("SNF of A - I:", smith_normal_form(A - I3).d)
print("circle surgery group:", circle_surgery_group(MappingTorus(A)))

###############################################################################
# A companion matrix that does satisfy the condition
C = IntMatrix.parse("0,1,0;0,0,1;1,0,1")
print("det(C - I) =", cs_condition(C), "->", circle_surgery_group(MappingTorus(C)))
