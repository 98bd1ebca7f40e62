"""Todd-Coxeter coset enumeration over the trivial subgroup.

HLT strategy (scan every relator at every coset, defining as needed) with
a lookahead pass plus table compaction whenever the table fills up.  The
table has at most ``budget`` rows at any moment; running out after a
lookahead yields ``BudgetExceeded``, which certifies nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .presentation import Presentation

DEFAULT_BUDGET = 100_000

COMPLETED = "completed"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class EnumerationOutcome:
    status: str
    index: int | None
    cosets_defined: int
    budget: int

    @property
    def completed(self) -> bool:
        return self.status == COMPLETED

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "index": self.index,
            "cosets_defined": self.cosets_defined,
            "budget": self.budget,
        }


class _TableFull(Exception):
    pass


class CosetTable:
    """Mutable coset table; columns ``2g`` and ``2g+1`` are generator ``g`` and its inverse."""

    def __init__(self, ncols: int, relators: list[list[int]], budget: int):
        self.ncols = ncols
        self.relators = relators
        self.budget = budget
        self.table: list[list[int]] = [[-1] * ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.defined = 1

    # -- union-find over coincident cosets
    def rep(self, k: int) -> int:
        parent = self.parent
        r = k
        while parent[r] != r:
            r = parent[r]
        while parent[k] != r:
            parent[k], k = r, parent[k]
        return r

    def _merge(self, k: int, l: int, queue: list[int]):
        a, b = self.rep(k), self.rep(l)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.live -= 1
        queue.append(b)

    def coincidence(self, alpha: int, beta: int):
        table = self.table
        queue: list[int] = []
        self._merge(alpha, beta, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            row = table[gamma]
            for x in range(self.ncols):
                delta = row[x]
                if delta < 0:
                    continue
                xi = x ^ 1
                table[delta][xi] = -1
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][xi] >= 0:
                    self._merge(mu, table[nu][xi], queue)
                else:
                    table[mu][x] = nu
                    table[nu][xi] = mu

    def define(self, alpha: int, x: int):
        if len(self.table) >= self.budget:
            raise _TableFull
        beta = len(self.table)
        row = [-1] * self.ncols
        row[x ^ 1] = alpha
        self.table.append(row)
        self.parent.append(beta)
        self.table[alpha][x] = beta
        self.live += 1
        self.defined += 1

    def scan(self, alpha: int, w: list[int], fill: bool):
        """Trace ``w`` from both ends at ``alpha``; deduce, merge, or (if ``fill``) define."""
        table = self.table
        f = b = alpha
        i, j = 0, len(w) - 1
        while True:
            while i <= j:
                nxt = table[f][w[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != alpha:
                    self.coincidence(f, alpha)
                return
            while j >= i:
                nxt = table[b][w[j] ^ 1]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, w[i])

    def lookahead(self):
        for beta in range(len(self.table)):
            for w in self.relators:
                if self.parent[beta] != beta:
                    break
                self.scan(beta, w, fill=False)

    def compact(self, alpha: int) -> int:
        """Renumber live cosets densely; returns the new index of the first live coset >= alpha."""
        keep = [k for k in range(len(self.table)) if self.parent[k] == k]
        new = {k: n for n, k in enumerate(keep)}
        rep = self.rep
        self.table = [[new[rep(y)] if y >= 0 else -1 for y in self.table[k]] for k in keep]
        self.parent = list(range(len(keep)))
        return sum(1 for k in keep if k < alpha)

    def run(self) -> bool:
        alpha = 0
        while alpha < len(self.table):
            try:
                if self.parent[alpha] == alpha:
                    for w in self.relators:
                        if self.parent[alpha] != alpha:
                            break
                        self.scan(alpha, w, fill=True)
                    if self.parent[alpha] == alpha:
                        row = self.table[alpha]
                        for x in range(self.ncols):
                            if row[x] < 0:
                                self.define(alpha, x)
            except _TableFull:
                size = len(self.table)
                self.lookahead()
                alpha = self.compact(alpha)
                if len(self.table) >= size:
                    return False
                continue
            alpha += 1
        return True


def encode_relators(generators, relators) -> list[list[int]]:
    col = {g: 2 * i for i, g in enumerate(generators)}
    out = []
    for r in relators:
        out.append([col[g] if e == 1 else col[g] + 1 for g, e in r])
    return out


def coset_enumerate(p: "Presentation", budget: int = DEFAULT_BUDGET) -> EnumerationOutcome:
    """Enumerate the cosets of the trivial subgroup, i.e. the elements of the group.

    ``Completed(k)`` certifies the group has order ``k``.
    """
    if budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    rels = encode_relators(p.generators, p.relators)
    # short relators first: they close the table fastest
    rels.sort(key=len)
    t = CosetTable(2 * len(p.generators), rels, budget)
    if t.run():
        return EnumerationOutcome(COMPLETED, t.live, t.defined, budget)
    return EnumerationOutcome(BUDGET_EXCEEDED, None, t.defined, budget)
