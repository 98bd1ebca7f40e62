"""Exact homomorphism counts from a finitely presented group into small targets."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .presentation import Presentation

MAX_TARGET_ORDER = 120


class FiniteGroup:
    """A finite group given by its Cayley table; element 0 is the identity."""

    def __init__(self, name: str, elements: list[tuple[int, ...]]):
        # elements are permutations in one-line notation; composition (p*q)(x) = p(q(x))
        index = {e: i for i, e in enumerate(elements)}
        self.name = name
        self.order = len(elements)
        self.mul = [[index[tuple(p[x] for x in q)] for q in elements] for p in elements]
        self.inv = [row.index(0) for row in self.mul]


@lru_cache(maxsize=None)
def cyclic_group(k: int) -> FiniteGroup:
    elements = [tuple((x + s) % k for x in range(k)) for s in range(k)]
    return FiniteGroup(f"C{k}", elements)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> FiniteGroup:
    elements = list(permutations(range(n)))  # identity first
    return FiniteGroup(f"S{n}", elements)


def census_targets(target_order_bound: int = MAX_TARGET_ORDER) -> list[FiniteGroup]:
    """Z/2..Z/12 and S3, S4, S5, restricted to order <= ``target_order_bound``."""
    if target_order_bound > MAX_TARGET_ORDER:
        raise ValueError(f"target_order_bound must be <= {MAX_TARGET_ORDER}")
    groups = [cyclic_group(k) for k in range(2, 13)] + [symmetric_group(n) for n in (3, 4, 5)]
    return [g for g in groups if g.order <= target_order_bound]


def count_homomorphisms(p: Presentation, target: FiniteGroup) -> int:
    """Count assignments of generators to target elements that kill every relator.

    Exhaustive backtracking; a relator in which exactly one unassigned
    generator occurs once forces that generator's value, and fully
    assigned relators prune the branch.
    """
    gens = p.generators
    col = {g: i for i, g in enumerate(gens)}
    rels = [[(col[g], e) for g, e in r] for r in p.relators]
    rel_gens = [sorted({g for g, _ in r}) for r in rels]
    mul, inv = target.mul, target.inv
    n = len(gens)

    def evaluate(letters, val):
        x = 0
        for g, e in letters:
            v = val[g]
            x = mul[x][v if e == 1 else inv[v]]
        return x

    def propagate(val):
        # returns False on a violated relator; mutates val with forced values
        changed = True
        while changed:
            changed = False
            for r, rg in zip(rels, rel_gens):
                free = [g for g in rg if val[g] < 0]
                if not free:
                    if evaluate(r, val):
                        return False
                    continue
                if len(free) != 1:
                    continue
                g = free[0]
                pos = [k for k, (h, _) in enumerate(r) if h == g]
                if len(pos) != 1:
                    continue
                k = pos[0]
                e = r[k][1]
                # u g^e v = 1  =>  g^e = u^-1 v^-1
                u, v = evaluate(r[:k], val), evaluate(r[k + 1:], val)
                x = mul[inv[u]][inv[v]]
                val[g] = x if e == 1 else inv[x]
                changed = True
        return True

    def choose(val):
        # the unassigned generator completing the most relators
        best, best_score = None, -1
        for g in range(n):
            if val[g] >= 0:
                continue
            score = 0
            for rg in rel_gens:
                if g in rg:
                    missing = sum(1 for h in rg if val[h] < 0)
                    score += 4 if missing <= 2 else 1
            if score > best_score:
                best, best_score = g, score
        return best

    def search(val):
        if not propagate(val):
            return 0
        g = choose(val)
        if g is None:
            return 1
        total = 0
        for x in range(target.order):
            trial = list(val)
            trial[g] = x
            total += search(trial)
        return total

    return search([-1] * n)


def quotient_census(p: Presentation, target_order_bound: int = MAX_TARGET_ORDER) -> dict[str, int]:
    """Map target name -> number of homomorphisms (trivial one included)."""
    return {t.name: count_homomorphisms(p, t) for t in census_targets(target_order_bound)}
