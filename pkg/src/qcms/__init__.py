"""Exact symbolic tools for the relation triples in α, β, γ (classical, Floer and
quantum families), their ideals, and Gromov-Witten numbers of lines."""

from .algebra import POLY, AlgebraElement, AlgebraSignature
from .ideals import (
    GradedIdeal,
    IdealError,
    build,
    build_from_triple,
    ideal_equal,
    normal_form,
    quotient_dim,
)
from .iso import poincare_series, special_case_g1, special_case_g2, verify_isomorphism
from .jacobian import jacobian, primitive_dim
from .presentations import (
    classical_triple,
    deformation_split,
    floer_triple,
    generic_triple,
    graded_triple,
    quantum_triple,
)
from .quantum_n import GWQuery, gw_via_formula, gw_via_ring, n_ring
from .scalar import Scalar

__version__ = "0.1.0"
