"""Framed links at the linking-matrix level.

Only the symmetric linking matrix (framings on the diagonal) is modelled.
That determines H_1 of the surgered 3-manifold and the bookkeeping of
handle slides and Hopf-pair cancellations, but not the knot types, so it
cannot tell S^2 x S^1 from other manifolds with H_1 = Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .intmatrix import IntMatrix, as_intmatrix
from .presentation import AbelianInvariants, abelian_invariants_of_cokernel


class MoveError(ValueError):
    """A slide or cancellation whose precondition fails."""


@dataclass(frozen=True)
class FramedLink:
    lk: IntMatrix
    labels: tuple[str, ...]

    def __post_init__(self):
        lk = as_intmatrix(self.lk)
        object.__setattr__(self, "lk", lk)
        object.__setattr__(self, "labels", tuple(self.labels))
        if not lk.is_square():
            raise ValueError(f"linking matrix must be square, got {lk.shape}")
        if lk != lk.transpose():
            raise ValueError("linking matrix must be symmetric")
        if len(self.labels) != lk.nrows:
            raise ValueError("one label per component")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be unique")

    @classmethod
    def from_matrix(cls, lk, labels: Sequence[str] | None = None) -> "FramedLink":
        lk = as_intmatrix(lk)
        if labels is None:
            labels = [f"K{i + 1}" for i in range(lk.nrows)]
        return cls(lk, tuple(labels))

    @property
    def n(self) -> int:
        return self.lk.nrows

    def index(self, c: int | str) -> int:
        return self.labels.index(c) if isinstance(c, str) else c

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "lk": self.lk.tolist()}


def build_Y(m: int, n: int) -> FramedLink:
    """0-framed Borromean rings B1, B2, B3 with meridians of B1 (framing m) and B2 (framing n)."""
    labels = ("B1", "B2", "B3", "mu_a", "mu_b")
    lk = [[0] * 5 for _ in range(5)]
    lk[3][3], lk[4][4] = m, n
    lk[0][3] = lk[3][0] = 1
    lk[1][4] = lk[4][1] = 1
    return FramedLink(IntMatrix(lk), labels)


def link_h1(link: FramedLink) -> AbelianInvariants:
    return abelian_invariants_of_cokernel(link.lk)


def handle_slide(link: FramedLink, i: int | str, j: int | str, sign: int = 1) -> FramedLink:
    """Slide component ``i`` over ``j``: ``lk <- E^T lk E`` with ``E = I + sign e_j e_i^T``."""
    i, j = link.index(i), link.index(j)
    if i == j:
        raise MoveError("cannot slide a component over itself")
    if not (0 <= i < link.n and 0 <= j < link.n):
        raise MoveError(f"component index out of range: {i}, {j}")
    if sign not in (1, -1):
        raise MoveError(f"sign must be +1 or -1, got {sign!r}")
    a = link.lk.tolist()
    for r in range(link.n):
        a[r][i] += sign * a[r][j]
    for c in range(link.n):
        a[i][c] += sign * a[j][c]
    return FramedLink(IntMatrix(a), link.labels)


def cancel_pair(link: FramedLink, i: int | str, j: int | str) -> FramedLink:
    """Delete a split pair whose block is ``[[0, +-1], [+-1, k]]``."""
    i, j = link.index(i), link.index(j)
    if i == j:
        raise MoveError("cancel_pair needs two distinct components")
    if not (0 <= i < link.n and 0 <= j < link.n):
        raise MoveError(f"component index out of range: {i}, {j}")
    lk = link.lk
    if lk[i, i] != 0:
        raise MoveError(f"component {link.labels[i]} must be 0-framed, has framing {lk[i, i]}")
    if abs(lk[i, j]) != 1:
        raise MoveError(f"components {link.labels[i]}, {link.labels[j]} must link once, lk = {lk[i, j]}")
    for c in range(link.n):
        if c in (i, j):
            continue
        for k in (i, j):
            if lk[k, c] != 0:
                raise MoveError(f"component {link.labels[k]} links {link.labels[c]} (lk = {lk[k, c]})")
    keep = [c for c in range(link.n) if c not in (i, j)]
    rows = [[lk[r, c] for c in keep] for r in keep]
    return FramedLink(IntMatrix(rows, ncols=len(keep)), tuple(link.labels[c] for c in keep))


Move = tuple  # ("slide", i_label, j_label, sign) | ("cancel", i_label, j_label)


def apply_moves(link: FramedLink, moves: Sequence[Move]) -> FramedLink:
    for mv in moves:
        if mv[0] == "slide":
            link = handle_slide(link, mv[1], mv[2], mv[3])
        elif mv[0] == "cancel":
            link = cancel_pair(link, mv[1], mv[2])
        else:
            raise MoveError(f"unknown move {mv!r}")
    return link


def hopf_split_moves(link: FramedLink, i: int | str, j: int | str) -> list[Move]:
    """Slides making ``(i, j)`` a split ``[[0, 1], [1, 0]]`` pair.

    Requires ``i`` 0-framed and linked only with ``j``, once.  Odd
    framing on ``j`` is first evened out by sliding ``j`` over some other
    odd-framed component; :class:`MoveError` if there is none.
    """
    i, j = link.index(i), link.index(j)
    lk = link.lk
    if lk[i, i] != 0 or lk[i, j] != 1 or any(lk[i, c] for c in range(link.n) if c != j):
        raise MoveError(f"{link.labels[i]} must be 0-framed and link only {link.labels[j]}, once")
    L = link.labels
    moves: list[Move] = []
    cur = link

    def slide(a, b, sign, times=1):
        nonlocal cur
        for _ in range(times):
            cur = handle_slide(cur, a, b, sign)
            moves.append(("slide", L[a], L[b], sign))

    if cur.lk[j, j] % 2:
        helper = next((c for c in range(link.n) if c not in (i, j) and cur.lk[c, c] % 2), None)
        if helper is None:
            raise MoveError(f"{L[j]} has odd framing and no odd-framed helper component exists")
        slide(j, helper, 1)
    # j over i shifts lk_jj by 2*sign and touches nothing else
    s = -cur.lk[j, j] // 2
    slide(j, i, 1 if s > 0 else -1, abs(s))
    # c over i shifts lk_cj by sign; i links nothing else so nothing else moves
    for c in range(link.n):
        if c in (i, j):
            continue
        s = -cur.lk[c, j]
        slide(c, i, 1 if s > 0 else -1, abs(s))
    return moves


def reduce_Y(m: int, n: int) -> tuple[list[Move], FramedLink]:
    """Slide one Hopf pair of ``Y(m, n)`` into split form, then cancel both pairs.

    Leaves the single 0-framed component B3, i.e. H_1 = Z.
    """
    y = build_Y(m, n)
    if m % 2 == 0 or n % 2:
        pair = ("B1", "mu_a")
    else:
        pair = ("B2", "mu_b")
    moves = hopf_split_moves(y, *pair)
    moves.append(("cancel",) + pair)
    rest = ("B2", "mu_b") if pair[0] == "B1" else ("B1", "mu_a")
    moves.append(("cancel",) + rest)
    return moves, apply_moves(y, moves)
