from itertools import product

import pytest

from toruscalc.coset import coset_enumerate
from toruscalc.presentation import abelianization
from toruscalc.surgery import (
    T_AC,
    T_BC,
    SurgerySpec,
    TorusBoundaryBasis,
    apply_surgery,
    build_piece,
    build_sphere,
    build_X,
    glue,
    verify_sphere,
)
from toruscalc.words import Word, commutator, parse_word, power

a1, b1, c1, d1 = (Word.gen(n) for n in ("a1", "b1", "c1", "d1"))


def test_build_piece():
    p1 = build_piece(1)
    assert p1.presentation.generators == ("a1", "b1", "c1", "d1")
    assert p1.presentation.relators == (commutator(a1, c1), commutator(b1, c1))
    assert p1.chi == 1
    p2 = build_piece(2)
    assert p2.presentation.generators == ("a2", "b2", "c2", "d2")
    assert abelianization(p1.presentation).free_rank == 4
    with pytest.raises(ValueError):
        build_piece(3)


def test_apply_surgery_examples():
    piece = build_piece(1)
    s = apply_surgery(piece, SurgerySpec.standard(T_AC, 1, 1))
    assert s.presentation.relators[-1] == commutator(b1**-1, d1**-1) * a1**-1
    assert s.chi == piece.chi
    s = apply_surgery(piece, SurgerySpec.standard(T_BC, 1, 0))
    assert s.presentation.relators[-1] == b1**-1
    s = apply_surgery(piece, SurgerySpec.standard(T_BC, 1, 2))
    assert s.presentation.relators[-1] == power(commutator(a1**-1, d1), 2) * b1**-1
    assert str(s.presentation.relators[-1]) == "a1^-1 d1 a1 d1^-1 a1^-1 d1 a1 d1^-1 b1^-1"
    with pytest.raises(ValueError):
        apply_surgery(piece, SurgerySpec.standard(T_AC, 2, 1))


def test_surgery_spec_validation():
    mer = commutator(b1**-1, d1**-1)
    with pytest.raises(ValueError):
        SurgerySpec(T_AC, 1, 1, 1, 1, a1 * b1, mer)
    with pytest.raises(ValueError):
        SurgerySpec(T_AC, 1, 1, 1, 0, a1, commutator(a1**-1, d1))
    with pytest.raises(ValueError):
        SurgerySpec(T_AC, 1, 1, 1, 0, b1, mer)
    # the -1 direction is a legal spec
    spec = SurgerySpec.standard(T_AC, 1, 3, sign=-1)
    assert spec.relator() == power(mer, 3) * a1


def test_boundary_basis():
    assert TorusBoundaryBasis("a", "b", "mu").mu == "mu"
    with pytest.raises(ValueError):
        TorusBoundaryBasis("a", "a", "mu")


def test_build_X_11():
    rels = set(build_X(1, 1).presentation.relators)
    g = ["a1", "b1", "c1", "d1"]
    expected = {parse_word(t, g) for t in ("[a1,c1]", "[b1,c1]", "[b1^-1,d1^-1] a1^-1", "[a1^-1,d1] b1^-1")}
    assert rels == expected


@pytest.mark.parametrize("m, n", list(product(range(-6, 7), repeat=2)))
def test_X_betti_two(m, n):
    h1 = abelianization(build_X(m, n).presentation)
    assert h1.free_rank == 2 and h1.torsion == ()


def test_glue():
    s = build_sphere(1, 1, 1, 1)
    assert len(s.presentation.generators) == 8
    assert len(s.presentation.relators) == 12
    assert s.chi == 2
    assert s.parameters == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        glue(build_X(1, 1, 1), build_X(1, 1, 1))


def test_gluing_relators_identify_summands():
    from toruscalc.presentation import Presentation
    from toruscalc.surgery import gluing_relators

    gens = [f"{x}{i}" for i in (1, 2) for x in "abcd"]
    h1 = abelianization(Presentation(gens, gluing_relators()))
    assert h1.free_rank == 4 and h1.torsion == ()


def test_glue_A_double():
    s = glue(build_X(0, 0, 1), build_X(0, 0, 2))
    assert coset_enumerate(s.presentation).index == 1


@pytest.mark.parametrize("params", [(1, 1, 1, 1), (0, 0, 0, 0), (2, 3, -1, 5)])
def test_verify_sphere_examples(params):
    r = verify_sphere(*params, budget=100_000)
    assert r.verdict == "certified"
    assert r.chi == 2 and r.h1.is_trivial and r.enumeration.index == 1
    d = r.to_dict()
    assert set(d) == {"command", "claim", "params", "chi", "h1", "enumeration", "presentation", "verdict", "elapsed_ms"}
    assert d["h1"] == []


def test_verify_sphere_small_budget():
    r = verify_sphere(1, 1, 1, 1, budget=1)
    assert r.verdict == "inconclusive"
    with pytest.raises(ValueError):
        verify_sphere(1, 1, 1, 1, budget=0)


@pytest.mark.parametrize("params", [(1, 2, 3, 4), (-2, 0, 3, -1), (4, -4, 1, 0)])
def test_swap_symmetry(params):
    m, n, mp, np_ = params
    x = build_sphere(m, n, mp, np_).presentation
    y = build_sphere(mp, np_, m, n).presentation
    assert abelianization(x) == abelianization(y)
    assert coset_enumerate(x).index == coset_enumerate(y).index


def test_family_range_two():
    for params in product(range(-2, 3), repeat=4):
        r = verify_sphere(*params)
        assert r.verdict == "certified", params
