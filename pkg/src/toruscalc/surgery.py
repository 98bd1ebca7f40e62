"""Torus surgeries on the punctured-torus product and the glued sphere family.

Each copy ``i`` of the punctured-torus product carries loops ``ai, bi``
(one factor) and ``ci, di`` (the other).  The complement of the two
surgery tori is encoded by the commutators ``[ai, ci]``, ``[bi, ci]`` only;
the true group has more relations, so the encoded group surjects onto it
and a trivial encoded quotient is a valid triviality certificate.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coset import DEFAULT_BUDGET, EnumerationOutcome, coset_enumerate
from .presentation import AbelianInvariants, Presentation, abelianization
from .words import Word, commutator, power

T_AC = "T_ac"
T_BC = "T_bc"

CERTIFIED = "certified"
INCONCLUSIVE = "inconclusive"
FAILED = "failed"


def _g(name: str, i: int) -> Word:
    return Word.gen(f"{name}{i}")


@dataclass(frozen=True)
class TorusBoundaryBasis:
    """Basis ``{a, b, mu}`` of H_1 of a surgery torus' boundary 3-torus."""

    a: str
    b: str
    mu: str

    def __post_init__(self):
        if len({self.a, self.b, self.mu}) != 3:
            raise ValueError("basis classes must be distinct")


def meridian_word(torus_id: str, copy_index: int) -> Word:
    """Meridian of ``T_ac`` is ``[bi^-1, di^-1]``; of ``T_bc`` it is ``[ai^-1, di]``."""
    a, b, d = _g("a", copy_index), _g("b", copy_index), _g("d", copy_index)
    if torus_id == T_AC:
        return commutator(b.inverse(), d.inverse())
    if torus_id == T_BC:
        return commutator(a.inverse(), d)
    raise ValueError(f"unknown torus {torus_id!r}")


@dataclass(frozen=True)
class SurgerySpec:
    """A degree-``p`` surgery on one torus in the direction ``q a + r b``."""

    torus_id: str
    copy_index: int
    p: int
    q: int
    r: int
    direction_word: Word
    meridian_word: Word

    def __post_init__(self):
        if self.torus_id not in (T_AC, T_BC):
            raise ValueError(f"unknown torus {self.torus_id!r}")
        if self.copy_index not in (1, 2):
            raise ValueError(f"copy_index must be 1 or 2, got {self.copy_index!r}")
        if (self.p, self.q, self.r) == (0, 0, 0):
            raise ValueError("(p, q, r) must not all vanish")
        if sorted((abs(self.q), abs(self.r))) != [0, 1]:
            raise ValueError("exactly one of q, r must be +-1 and the other 0")
        i = self.copy_index
        expected_dir = power(_g("a", i), self.q) * power(_g("b", i), self.r)
        if self.direction_word != expected_dir:
            raise ValueError(f"direction word {self.direction_word} does not match q={self.q}, r={self.r}")
        if self.meridian_word != meridian_word(self.torus_id, i):
            raise ValueError(f"meridian word {self.meridian_word} is wrong for {self.torus_id} in copy {i}")

    @classmethod
    def standard(cls, torus_id: str, copy_index: int, p: int, sign: int = 1) -> "SurgerySpec":
        """The family's surgery: ``T_ac`` in direction ``a``, ``T_bc`` in direction ``b``."""
        q, r = (sign, 0) if torus_id == T_AC else (0, sign)
        i = copy_index
        direction = power(_g("a", i), q) * power(_g("b", i), r)
        return cls(torus_id, i, p, q, r, direction, meridian_word(torus_id, i))

    def relator(self) -> Word:
        """``mu^p = direction``, as the relator ``mu^p direction^-1``."""
        return power(self.meridian_word, self.p) * self.direction_word.inverse()


@dataclass(frozen=True)
class PieceModel:
    copy_index: int
    presentation: Presentation
    chi: int = 1
    surgeries: tuple[SurgerySpec, ...] = ()


@dataclass(frozen=True)
class SphereModel:
    parameters: tuple[int, int, int, int]
    presentation: Presentation
    chi: int


def build_piece(copy_index: int) -> PieceModel:
    if copy_index not in (1, 2):
        raise ValueError(f"copy_index must be 1 or 2, got {copy_index!r}")
    i = copy_index
    names = [f"{x}{i}" for x in "abcd"]
    a, b, c, _ = (Word.gen(n) for n in names)
    return PieceModel(i, Presentation(names, [commutator(a, c), commutator(b, c)]), chi=1)


def apply_surgery(piece: PieceModel, spec: SurgerySpec) -> PieceModel:
    # chi(T^2 x D^2) = 0, so excising and regluing leaves chi alone
    if spec.copy_index != piece.copy_index:
        raise ValueError(f"surgery for copy {spec.copy_index} applied to copy {piece.copy_index}")
    pres = piece.presentation.with_relators([spec.relator()])
    return PieceModel(piece.copy_index, pres, piece.chi, piece.surgeries + (spec,))


def build_X(m: int, n: int, copy_index: int = 1) -> PieceModel:
    """(m/1)-surgery on ``T_ac`` in direction a, (n/1)-surgery on ``T_bc`` in direction b."""
    piece = build_piece(copy_index)
    piece = apply_surgery(piece, SurgerySpec.standard(T_AC, copy_index, m))
    return apply_surgery(piece, SurgerySpec.standard(T_BC, copy_index, n))


def gluing_relators(i: int = 1, j: int = 2) -> list[Word]:
    """The boundary flip identifies ``ai~cj, bi~dj, aj~ci, bj~di``."""
    return [
        _g("a", i) * _g("c", j).inverse(),
        _g("b", i) * _g("d", j).inverse(),
        _g("a", j) * _g("c", i).inverse(),
        _g("b", j) * _g("d", i).inverse(),
    ]


def glue(x: PieceModel, x_bar: PieceModel) -> SphereModel:
    """Union along the boundary; the boundary has chi 0, so chi adds."""
    px, py = x.presentation, x_bar.presentation
    overlap = set(px.generators) & set(py.generators)
    if overlap:
        raise ValueError(f"pieces share generator names {sorted(overlap)}")
    if {x.copy_index, x_bar.copy_index} != {1, 2}:
        raise ValueError("glue needs one copy 1 piece and one copy 2 piece")
    pres = Presentation(
        px.generators + py.generators,
        list(px.relators) + list(py.relators) + gluing_relators(x.copy_index, x_bar.copy_index),
    )
    params = tuple(s.p for s in x.surgeries) + tuple(s.p for s in x_bar.surgeries)
    return SphereModel(params, pres, x.chi + x_bar.chi)


def build_sphere(m: int, n: int, mp: int, np_: int) -> SphereModel:
    return glue(build_X(m, n, 1), build_X(mp, np_, 2))


@dataclass
class VerificationReport:
    params: tuple[int, int, int, int]
    chi: int
    h1: AbelianInvariants
    enumeration: EnumerationOutcome
    presentation: Presentation
    verdict: str
    claim: str = "sphere-family: chi=2, H1=0, pi1 quotient trivial"
    command: str | None = None
    elapsed_ms: float | None = None

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "claim": self.claim,
            "params": dict(zip(("m", "n", "mp", "np"), self.params)),
            "chi": self.chi,
            "h1": list(self.h1.invariant_factors),
            "enumeration": self.enumeration.to_dict(),
            "presentation": self.presentation.to_dict(),
            "verdict": self.verdict,
            "elapsed_ms": self.elapsed_ms,
        }


def verdict_for(chi: int, h1: AbelianInvariants, outcome: EnumerationOutcome) -> str:
    if chi != 2 or not h1.is_trivial:
        return FAILED
    if not outcome.completed:
        return INCONCLUSIVE
    return CERTIFIED if outcome.index == 1 else FAILED


def verify_sphere(m: int, n: int, mp: int, np_: int, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Check chi = 2, trivial H_1 and a trivial coset enumeration for the glued family member."""
    if budget < 1:
        raise ValueError(f"budget must be a positive integer, got {budget!r}")
    start = time.perf_counter()
    sphere = build_sphere(m, n, mp, np_)
    h1 = abelianization(sphere.presentation)
    outcome = coset_enumerate(sphere.presentation, budget)
    report = VerificationReport(
        params=(m, n, mp, np_),
        chi=sphere.chi,
        h1=h1,
        enumeration=outcome,
        presentation=sphere.presentation,
        verdict=verdict_for(sphere.chi, h1, outcome),
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report
