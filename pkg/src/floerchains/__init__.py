"""Exact-arithmetic chain data of singular instanton complexes.

Computes generators, absolute and relative mod-4 gradings, and rank
vectors of the instanton chain complexes of knots and two-component links
whose double branched covers are lens spaces or Seifert-fibered manifolds.
"""

from .arith import LaurentPoly, even_continued_fraction, mod_inverse, signature
from .complexes import (
    ChainRanks,
    GradedGenerators,
    LinkComplex,
    TorusComplex,
    casson_from_alexander,
    euler_characteristic,
    montesinos_knot_complex,
    montesinos_link_complex,
    special_montesinos_complex,
    torus_alexander,
    torus_complex,
    two_bridge_complex,
    two_bridge_generators,
)
from .covers import (
    CoverHomology,
    SeifertData,
    branched_cover_h1,
    cup_form,
    grading_shift_delta,
    seifert_h1_order,
)
from .lens import LensRep, lattice_counts, lens_reps, index_plus_one, morse_bott_index
from .seifert import (
    RotationRep,
    TwistMask,
    casson,
    enumerate_irreducibles,
    enumerate_projective,
    enumerate_reducibles,
)
from .signatures import (
    ExplicitSignature,
    KnotSpec,
    Montesinos,
    Pretzel,
    Torus,
    TwoBridge,
    signature_mod4,
    torus_signature,
    two_bridge_signature,
)

__version__ = "0.1.0"

__all__ = [
    "ChainRanks",
    "CoverHomology",
    "ExplicitSignature",
    "GradedGenerators",
    "KnotSpec",
    "LaurentPoly",
    "LensRep",
    "LinkComplex",
    "Montesinos",
    "Pretzel",
    "RotationRep",
    "SeifertData",
    "Torus",
    "TorusComplex",
    "TwistMask",
    "TwoBridge",
    "branched_cover_h1",
    "casson",
    "casson_from_alexander",
    "cup_form",
    "enumerate_irreducibles",
    "enumerate_projective",
    "enumerate_reducibles",
    "euler_characteristic",
    "even_continued_fraction",
    "grading_shift_delta",
    "index_plus_one",
    "lattice_counts",
    "lens_reps",
    "mod_inverse",
    "montesinos_knot_complex",
    "montesinos_link_complex",
    "morse_bott_index",
    "seifert_h1_order",
    "signature",
    "signature_mod4",
    "special_montesinos_complex",
    "torus_alexander",
    "torus_complex",
    "torus_signature",
    "two_bridge_complex",
    "two_bridge_generators",
    "two_bridge_signature",
]
