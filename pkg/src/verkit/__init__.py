"""Exact invariants of the symmetric tensor categories Ver_{p^n}.

The categories are built from tilting modules of SL2 in characteristic p
modulo the ideal of the n-th Steinberg module.  This package computes their
combinatorial skeleton with exact arithmetic: tilting characters and their
tensor products, decomposition and Cartan matrices by three independent
routes, block structure, Steinberg labels, Ext^1, cyclotomic
Frobenius-Perron dimensions, fusion rules, and stable Grothendieck rings.
"""

from .catalog import CategoryData, VerificationReport, build, verify_all
from .charring import SymChar, dim_at_one, frobenius_twist, inner, mul, weyl_char, weyl_expand
from .cyclo import CycloInt, chebyshev_Q, dim_simple, fpdim_projective, fpdim_simple, qint
from .digits import (
    block_partition,
    cartan_descendant,
    cartan_kronecker,
    decomposition_matrix,
    descendants,
    ext1,
    frobenius_on_simple,
    simple_of_projective,
    steinberg_label,
)
from .errors import (
    BoundExceeded,
    NegativeLeadingCoefficient,
    OutOfRange,
    UnsupportedPrime,
    VerkitError,
)
from .grring import GrElement, base_fusion, fold_projectives, fuse_simples, tilting_class
from .linalg import smith_normal_form
from .tilting import (
    TiltingSum,
    decompose_tilting,
    hom_dim,
    invariant_dims,
    series_fn,
    tensor_decompose,
    tilting_char,
    truncate,
)

__all__ = [
    "BoundExceeded",
    "CategoryData",
    "CycloInt",
    "GrElement",
    "NegativeLeadingCoefficient",
    "OutOfRange",
    "SymChar",
    "TiltingSum",
    "UnsupportedPrime",
    "VerificationReport",
    "VerkitError",
    "base_fusion",
    "block_partition",
    "build",
    "cartan_descendant",
    "cartan_kronecker",
    "chebyshev_Q",
    "decompose_tilting",
    "decomposition_matrix",
    "descendants",
    "dim_at_one",
    "dim_simple",
    "ext1",
    "fold_projectives",
    "fpdim_projective",
    "fpdim_simple",
    "frobenius_on_simple",
    "frobenius_twist",
    "fuse_simples",
    "hom_dim",
    "inner",
    "invariant_dims",
    "mul",
    "qint",
    "series_fn",
    "simple_of_projective",
    "smith_normal_form",
    "steinberg_label",
    "tensor_decompose",
    "tilting_char",
    "tilting_class",
    "truncate",
    "verify_all",
    "weyl_char",
    "weyl_expand",
]

__version__ = "0.1.0"
