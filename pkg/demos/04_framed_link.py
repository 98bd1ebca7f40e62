"""
Framed links and handle moves
=============================

The 5-component link for the 3-manifold Y(m, n), its homology from the
linking matrix, and the slide/cancel sequence that reduces it to a single
0-framed unknot.
"""
from toruscalc.framed_link import apply_moves, build_Y, link_h1, reduce_Y

y = build_Y(3, 1)
print(y.labels)
print(y.lk.to_text())
print("H1 =", link_h1(y))

moves, reduced = reduce_Y(3, 1)
for mv in moves:
    print("   ", mv)
print("reduced:", reduced.labels, reduced.lk.to_text(), "H1 =", link_h1(reduced))
assert apply_moves(y, moves) == reduced
