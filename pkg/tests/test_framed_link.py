import random
from itertools import product

import pytest

from toruscalc.framed_link import (
    FramedLink,
    MoveError,
    apply_moves,
    build_Y,
    cancel_pair,
    handle_slide,
    hopf_split_moves,
    link_h1,
    reduce_Y,
)
from toruscalc.intmatrix import IntMatrix


def test_build_Y():
    y = build_Y(0, 0)
    assert [y.lk[i, i] for i in range(5)] == [0] * 5
    y = build_Y(2, 3)
    off = {(i, j) for i in range(5) for j in range(i + 1, 5) if y.lk[i, j]}
    assert off == {(0, 3), (1, 4)}
    assert y.lk[3, 3] == 2 and y.lk[4, 4] == 3


def test_build_Y_symmetry():
    y, z = build_Y(2, 5), build_Y(5, 2)
    # relabel B1 <-> B2, mu_a <-> mu_b
    perm = [1, 0, 2, 4, 3]
    assert [[z.lk[perm[i], perm[j]] for j in range(5)] for i in range(5)] == y.lk.tolist()


def test_link_h1_examples():
    assert link_h1(FramedLink(IntMatrix([]), ())).is_trivial
    assert link_h1(FramedLink.from_matrix([[0]])).invariant_factors == (0,)
    assert link_h1(FramedLink.from_matrix([[5]])).invariant_factors == (5,)


@pytest.mark.parametrize("m, n", list(product(range(-5, 6), repeat=2)))
def test_Y_homology(m, n):
    h1 = link_h1(build_Y(m, n))
    assert h1.invariant_factors == (0,)


def test_slide_and_back():
    y = build_Y(2, 3)
    assert handle_slide(handle_slide(y, "mu_a", "B3", 1), "mu_a", "B3", -1) == y
    z = handle_slide(y, 3, 4, -1)
    assert link_h1(z) == link_h1(y)
    assert handle_slide(z, 3, 4, 1) == y
    with pytest.raises(MoveError):
        handle_slide(y, 1, 1)


def test_slide_formula():
    link = FramedLink.from_matrix([[2, 1], [1, 3]])
    s = handle_slide(link, 0, 1, 1)
    # framing becomes 2 + 2*1 + 3
    assert s.lk.tolist() == [[7, 4], [4, 3]]


def test_cancel_pair():
    assert cancel_pair(FramedLink.from_matrix([[0, 1], [1, 0]]), 0, 1).n == 0
    link = FramedLink.from_matrix([[0, 1, 1], [1, 0, 0], [1, 0, 2]])
    with pytest.raises(MoveError, match="links"):
        cancel_pair(link, 0, 1)
    with pytest.raises(MoveError, match="0-framed"):
        cancel_pair(FramedLink.from_matrix([[1, 1], [1, 0]]), 0, 1)
    with pytest.raises(MoveError, match="link once"):
        cancel_pair(FramedLink.from_matrix([[0, 2], [2, 0]]), 0, 1)


@pytest.mark.parametrize("m, n", list(product(range(-5, 6), repeat=2)))
def test_hopf_split_for_Y(m, n):
    y = build_Y(m, n)
    moves, reduced = reduce_Y(m, n)
    # before the cancellations the slid pair is a split [[0, 1], [1, 0]]
    slides = [mv for mv in moves if mv[0] == "slide"]
    mid = apply_moves(y, slides)
    first_cancel = next(mv for mv in moves if mv[0] == "cancel")
    i, j = mid.index(first_cancel[1]), mid.index(first_cancel[2])
    assert [[mid.lk[i, i], mid.lk[i, j]], [mid.lk[j, i], mid.lk[j, j]]] == [[0, 1], [1, 0]]
    assert all(mid.lk[k, c] == 0 for k in (i, j) for c in range(5) if c not in (i, j))
    assert reduced.labels == ("B3",)
    assert link_h1(reduced) == link_h1(y) == link_h1(FramedLink.from_matrix([[0]]))


def test_hopf_split_needs_helper():
    link = FramedLink.from_matrix([[0, 1], [1, 3]])
    with pytest.raises(MoveError, match="helper"):
        hopf_split_moves(link, 0, 1)


def random_symmetric(rng, n=5, lo=-3, hi=3):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return FramedLink.from_matrix(a)


def test_moves_preserve_h1_random():
    rng = random.Random(11)
    for _ in range(300):
        link = random_symmetric(rng)
        h1 = link_h1(link)
        for _ in range(6):
            if link.n >= 2 and rng.random() < 0.8:
                i, j = rng.sample(range(link.n), 2)
                link = handle_slide(link, i, j, rng.choice([1, -1]))
            elif link.n >= 2:
                i, j = rng.sample(range(link.n), 2)
                try:
                    link = cancel_pair(link, i, j)
                except MoveError:
                    continue
            assert link.lk == link.lk.transpose()
            assert link_h1(link) == h1
