"""Annihilator ideals of two-generated metabelian p-groups.

Exact models of the residue class ring Z[X,Y] modulo the annihilator of
the main commutator, group-presentation modules with an independent
kernel oracle, and verification campaigns tying the two together.
"""

from .bipoly import (
    BiPoly,
    Monomial,
    ParseError,
    format_poly,
    parse_ideal,
    parse_poly,
    trace_poly_x,
    trace_poly_xy,
    trace_poly_y,
)
from .families import (
    AnnihilatorPrediction,
    IdealFamily,
    NoPrediction,
    family_generators,
    nearly_homocyclic,
    parse_family,
    predicted_annihilator,
    predicted_derived_type,
)
from .groups import (
    GroupModel,
    InconsistentPresentation,
    InvalidParameters,
    MaxClassParams,
    NonMaxParams,
    annihilator_contains,
    build_max_class,
    build_nonmax_3,
    psi,
    schreier_check,
    verify_annihilator,
    verify_surjectivity,
)
from .quotient import (
    CapTooSmall,
    InfiniteOrder,
    PossiblyInfiniteQuotient,
    QuotientModel,
    RewriteRule,
    basis,
    build_quotient,
    build_quotient_cached,
    contains,
    element_order,
    ideal_equal,
    reduce,
)
from .reports import VerificationReport, aggregate, jsonl, markdown_summary
from .zlinalg import AbelianType, IntMat, Lattice, abelian_type, hnf, snf

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
