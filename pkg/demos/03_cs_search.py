"""
Searching for Cappell-Shaneson matrices
=======================================

Enumerate det-1 matrices with small entries and det(phi - I) = +-1.
"""
from collections import Counter

from toruscalc import cs_search

for bound in (1, 2):
    found = cs_search(bound)
    traces = Counter(sum(m[i, i] for i in range(3)) for m in found)
    print(f"bound {bound}: {len(found)} matrices; traces {sorted(traces.items())[:6]} ...")

print("first few:", [m.to_text() for m in cs_search(1)[:3]])
