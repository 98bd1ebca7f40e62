"""Finite presentations: text I/O, Tietze simplification, abelianization."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .intmatrix import IntMatrix, cokernel_invariants
from .words import Word, parse_word


class Presentation:
    """``< generators | relators >`` with relators freely reduced and nonempty."""

    __slots__ = ("generators", "relators")

    def __init__(self, generators: Sequence[str], relators: Iterable[Word] = ()):
        generators = tuple(generators)
        if len(set(generators)) != len(generators):
            raise ValueError(f"duplicate generator names in {generators}")
        known = set(generators)
        rels = []
        for r in relators:
            r = Word(r.letters) if isinstance(r, Word) else Word(r)
            if not r:
                continue
            missing = r.generators() - known
            if missing:
                raise ValueError(f"relator {r} uses unknown generators {sorted(missing)}")
            rels.append(r)
        self.generators = generators
        self.relators = tuple(rels)

    @classmethod
    def parse(cls, text: str) -> "Presentation":
        """Parse ``gens: a1,b1,... / rels: [a1,c1]; [b1,c1]; ...``.

        The two sections may sit on separate lines or be separated by ``/``
        or ``|``; relators are separated by ``;``.
        """
        m = re.search(r"gens\s*:(.*?)(?:[\n/|]\s*)?rels\s*:(.*)\Z", text.strip(), re.S)
        if not m:
            m_gens = re.search(r"gens\s*:(.*)\Z", text.strip(), re.S)
            if not m_gens:
                raise ValueError("presentation text needs a 'gens:' section")
            gens_txt, rels_txt = m_gens.group(1), ""
        else:
            gens_txt, rels_txt = m.group(1), m.group(2)
        gens_txt = gens_txt.strip().rstrip("/|").strip()
        generators = [g for g in re.split(r"[\s,]+", gens_txt) if g]
        relators = [parse_word(chunk, generators) for chunk in rels_txt.split(";") if chunk.strip()]
        return cls(generators, relators)

    def to_text(self) -> str:
        rels = "; ".join(str(r) for r in self.relators)
        return f"gens: {','.join(self.generators)}\nrels: {rels}"

    def to_dict(self) -> dict:
        return {"generators": list(self.generators), "relators": [str(r) for r in self.relators]}

    def with_relators(self, extra: Iterable[Word]) -> "Presentation":
        return Presentation(self.generators, list(self.relators) + list(extra))

    def relation_matrix(self) -> IntMatrix:
        """Exponent-sum matrix: one row per relator, one column per generator."""
        return IntMatrix(
            ([r.exponent_sum(g) for g in self.generators] for r in self.relators),
            ncols=len(self.generators),
        )

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def __eq__(self, other) -> bool:
        if isinstance(other, Presentation):
            return self.generators == other.generators and self.relators == other.relators
        return NotImplemented

    def __repr__(self) -> str:
        return f"<{', '.join(self.generators)} | {', '.join(map(str, self.relators))}>"


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors ``d1 | d2 | ...`` of a f.g. abelian group; 0 stands for Z."""

    invariant_factors: tuple[int, ...] = field(default=())

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 0)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def order(self) -> int | None:
        """Group order, or None if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts)


def abelian_invariants_of_cokernel(m) -> AbelianInvariants:
    return AbelianInvariants(tuple(cokernel_invariants(m)))


def abelianization(p: Presentation) -> AbelianInvariants:
    # G^ab = Z^gens / (row space of the relation matrix) = coker of its transpose
    return abelian_invariants_of_cokernel(p.relation_matrix().transpose())


# ---------------------------------------------------------------------------
# Tietze moves


def _canonical_relator(w: Word) -> Word:
    return w.cyclically_reduced()


def _clean(relators: Iterable[Word]) -> list[Word]:
    out, seen = [], set()
    for r in relators:
        r = _canonical_relator(r)
        if not r:
            continue
        key = r.letters
        inv = r.inverse().letters
        if key in seen or inv in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _solve_for(r: Word, g: str) -> Word:
    """Given relator ``r`` with a single occurrence of ``g``, return ``w`` with ``g = w``."""
    letters = r.letters
    k = next(i for i, (name, _) in enumerate(letters) if name == g)
    e = letters[k][1]
    # r = u g^e v = 1  =>  g^e = u^-1 v^-1
    u, v = Word(letters[:k]), Word(letters[k + 1:])
    w = u.inverse() * v.inverse()
    return w if e == 1 else w.inverse()


def tietze_simplify(p: Presentation, max_growth: int = 0) -> Presentation:
    """Eliminate generators defined by a relator in which they occur exactly once.

    Each step picks the elimination that leaves the smallest total relator
    length, and is taken only when that total grows by at most
    ``max_growth`` letters (definitions of length <= 1 are always taken).
    Relators are cyclically reduced and deduplicated up to inversion;
    empty ones are dropped.  All moves are isomorphism-preserving.
    """
    gens = list(p.generators)
    rels = _clean(p.relators)
    while True:
        current = sum(len(r) for r in rels)
        best = None
        for ri, r in enumerate(rels):
            for g in sorted(r.generators(), key=gens.index):
                if r.occurrences(g) != 1:
                    continue
                w = _solve_for(r, g)
                new_rels = _clean(x.substitute({g: w}) for k, x in enumerate(rels) if k != ri)
                total = sum(len(x) for x in new_rels)
                if len(w) > 1 and total > current + max_growth:
                    continue
                key = (total, len(w), -gens.index(g), ri)
                if best is None or key < best[0]:
                    best = (key, g, new_rels)
        if best is None:
            break
        _, g, rels = best
        gens.remove(g)
    return Presentation(gens, rels)
