"""3-torus bundles over the circle.

The monodromy is a 3x3 integer matrix whose columns are the images of the
fibre loops ``x, y, z``.  A (+-1)-surgery on a product torus in the fibre
multiplies the monodromy on the left by a unit transvection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

import numpy as np

from .intmatrix import IntMatrix, Transvection, as_intmatrix, determinant, factor_transvections
from .presentation import AbelianInvariants, Presentation, abelian_invariants_of_cokernel
from .words import Word, commutator, power

FIBRE = ("x", "y", "z")


@dataclass(frozen=True)
class MappingTorus:
    monodromy: IntMatrix
    label: str | None = None

    def __post_init__(self):
        m = as_intmatrix(self.monodromy)
        object.__setattr__(self, "monodromy", m)
        if m.shape != (3, 3):
            raise ValueError(f"monodromy must be 3x3, got {m.shape}")
        if determinant(m) != 1:
            raise ValueError("monodromy must have determinant +1")


def _image_word(phi: IntMatrix, col: int) -> Word:
    w = Word()
    for row, g in enumerate(FIBRE):
        w = w * power(Word.gen(g), phi[row, col])
    return w


def torus_presentation(mt: MappingTorus) -> Presentation:
    """``Z^3 x|_phi Z``: fibre commutators plus ``t g t^-1 = phi(g)``."""
    x, y, z = (Word.gen(g) for g in FIBRE)
    t = Word.gen("t")
    rels = [commutator(x, y), commutator(x, z), commutator(y, z)]
    for col, g in enumerate((x, y, z)):
        rels.append(t * g * t.inverse() * _image_word(mt.monodromy, col).inverse())
    return Presentation(FIBRE + ("t",), rels)


def _check_3x3(phi) -> IntMatrix:
    phi = as_intmatrix(phi)
    if phi.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {phi.shape}")
    return phi


def cs_condition(phi) -> int:
    """``det(phi - I)``; a Cappell-Shaneson monodromy has this equal to +-1."""
    phi = _check_3x3(phi)
    return determinant(phi - IntMatrix.identity(3))


def surgery_multiply(mt: MappingTorus, t: Transvection) -> MappingTorus:
    return MappingTorus(t.matrix() @ mt.monodromy, mt.label)


def realize_by_surgeries(phi) -> list[Transvection]:
    """Surgeries turning the trivial bundle into ``M_phi``.

    Replaying the list first-to-last through :func:`surgery_multiply`
    starting from the identity gives ``phi``.  Left multiplication means
    the replay order is the reverse of the factor order.
    """
    phi = _check_3x3(phi)
    return list(reversed(factor_transvections(phi)))


def replay(surgeries, start: MappingTorus | None = None) -> MappingTorus:
    mt = start if start is not None else MappingTorus(IntMatrix.identity(3))
    for t in surgeries:
        mt = surgery_multiply(mt, t)
    return mt


def circle_surgery_group(mt: MappingTorus) -> AbelianInvariants:
    """``Z^3 / (phi - I) Z^3``: what is left of pi_1 after killing the circle direction."""
    return abelian_invariants_of_cokernel(mt.monodromy - IntMatrix.identity(3))


def _cross_rows(rows: np.ndarray) -> np.ndarray:
    # all ordered pairs (r1, r2) in itertools.product order -> r1 x r2
    n = len(rows)
    r1 = np.repeat(rows, n, axis=0)
    r2 = np.tile(rows, (n, 1))
    return np.cross(r1, r2)


def cs_search(entry_bound: int) -> list[IntMatrix]:
    """All SL(3, Z) matrices with entries in ``[-b, b]`` and ``det(phi - I) = +-1``.

    Lexicographic order on the row-major entry sequence.  Determinants
    are taken row-wise as ``r0 . (r1 x r2)`` on int64 arrays, exact for
    these entry sizes.
    """
    if not 0 <= entry_bound <= 3:
        raise ValueError(f"entry_bound must be in [0, 3], got {entry_bound!r}")
    b = entry_bound
    rows = np.array(list(cartesian(range(-b, b + 1), repeat=3)), dtype=np.int64)
    eye = np.eye(3, dtype=np.int64)
    n = len(rows)
    cross = _cross_rows(rows)
    cross_shift = np.cross(np.repeat(rows - eye[1], n, axis=0), np.tile(rows - eye[2], (n, 1)))
    out = []
    for r0 in rows:
        dets = cross @ r0
        shifted = cross_shift @ (r0 - eye[0])
        hits = np.nonzero((dets == 1) & (np.abs(shifted) == 1))[0]
        for h in hits:
            r1, r2 = rows[h // n], rows[h % n]
            out.append(IntMatrix([r0.tolist(), r1.tolist(), r2.tolist()]))
    return out
