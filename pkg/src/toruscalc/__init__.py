"""Algebraic invariants of torus-surgery constructions of homotopy 4-spheres."""

from .census import count_homomorphisms, quotient_census
from .coset import DEFAULT_BUDGET, EnumerationOutcome, coset_enumerate
from .framed_link import (
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
from .intmatrix import (
    IntMatrix,
    SnfResult,
    Transvection,
    cokernel_invariants,
    determinant,
    factor_transvections,
    smith_normal_form,
)
from .mapping_torus import (
    MappingTorus,
    circle_surgery_group,
    cs_condition,
    cs_search,
    realize_by_surgeries,
    replay,
    surgery_multiply,
    torus_presentation,
)
from .presentation import AbelianInvariants, Presentation, abelianization, tietze_simplify
from .surgery import (
    PieceModel,
    SphereModel,
    SurgerySpec,
    TorusBoundaryBasis,
    VerificationReport,
    apply_surgery,
    build_piece,
    build_sphere,
    build_X,
    glue,
    verify_sphere,
)
from .words import Word, commutator, gens, parse_word, power, reduce

__version__ = "0.1.0"
