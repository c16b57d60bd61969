"""Exact factorization of unitary polynomial maps under composition.

Everything runs over arbitrary-precision rationals: polynomials compose,
peel apart, and factor with bit-for-bit equality, never floating point.
"""

from polydecomp.decompose import (
    Decomposition,
    PeelResult,
    candidate_split,
    enumerate_decompositions,
    is_decomposable,
    peel,
    signature_set,
    solve_tail_system,
)
from polydecomp.errors import (
    InternalInvariantError,
    NoFactorError,
    NotInFreeMonoidError,
    NotUnitaryError,
)
from polydecomp.inversion import (
    TriangularAuto,
    build_automorphism,
    closed_form_factors,
    dprime,
    inverse_expansion,
    invert,
    phi_full,
    phi_truncated,
)
from polydecomp.mpoly import MPoly, format_mpoly
from polydecomp.multiindex import (
    MultiIndex,
    enumerate_weighted,
    iter_simplex,
    multinomial,
    norm,
    power_product,
    weight,
)
from polydecomp.parsing import ParseError, parse_poly
from polydecomp.polynomials import Poly, Rat, as_rat, format_poly
from polydecomp.reducibility import (
    IrreducibilityReport,
    ShapeOutcome,
    irreducibility_report,
    lift_to_unitary,
    reducibility_witnesses,
)
from polydecomp.unitary import RatioForm, UnitaryMap
from polydecomp.words import (
    Generator,
    factor_word,
    recover_head,
    strip_head,
    word_product,
)

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "Generator",
    "InternalInvariantError",
    "IrreducibilityReport",
    "MPoly",
    "MultiIndex",
    "NoFactorError",
    "NotInFreeMonoidError",
    "NotUnitaryError",
    "ParseError",
    "PeelResult",
    "Poly",
    "Rat",
    "RatioForm",
    "ShapeOutcome",
    "TriangularAuto",
    "UnitaryMap",
    "as_rat",
    "build_automorphism",
    "candidate_split",
    "closed_form_factors",
    "dprime",
    "enumerate_decompositions",
    "enumerate_weighted",
    "factor_word",
    "format_mpoly",
    "format_poly",
    "inverse_expansion",
    "invert",
    "irreducibility_report",
    "is_decomposable",
    "iter_simplex",
    "lift_to_unitary",
    "multinomial",
    "norm",
    "parse_poly",
    "peel",
    "phi_full",
    "phi_truncated",
    "power_product",
    "recover_head",
    "reducibility_witnesses",
    "signature_set",
    "solve_tail_system",
    "strip_head",
    "weight",
    "word_product",
]
