"""Exact-arithmetic conversion of subalgebra (Sagbi) bases between monomial orders.

The package provides sparse rational polynomial arithmetic, matrix term
orders, weighted initial forms, subduction with representation tracking,
Sagbi basis construction and testing, cone crossing, the conversion walk,
and a JSON command-line front end.
"""

from .cone import ConeSystem, advance, cone_vectors, in_cone, in_interior, integer_weight, next_cone
from .errors import ParseError, PreconditionError, ResourceGuardError
from .groebner import buchberger, normal_form, spolynomial, toric_relations
from .guards import DEFAULT_GUARDS, Guards
from .initial import MINUS_INFINITY, initial_form, initial_set, is_weight_homogeneous, weighted_degree
from .membership import SubductionResult, is_reduced, semigroup_member, subduct
from .order import (
    TermOrder,
    Weight,
    deglex_order,
    degrevlex_order,
    lex_order,
    refine,
    separating_weight,
    weight_vector,
)
from .poly import Exponent, Polynomial, RingContext, Term, evaluate_representation, representation_ring
from .sagbi import TrackedBasis, interreduce, is_sagbi, sagbi_basis
from .walk import CONVERGED, GUARD_EXCEEDED, WalkReport, WalkStep, lift, walk

__version__ = "0.1.0"

__all__ = [
    "ConeSystem",
    "CONVERGED",
    "DEFAULT_GUARDS",
    "Exponent",
    "GUARD_EXCEEDED",
    "Guards",
    "MINUS_INFINITY",
    "ParseError",
    "Polynomial",
    "PreconditionError",
    "ResourceGuardError",
    "RingContext",
    "SubductionResult",
    "Term",
    "TermOrder",
    "TrackedBasis",
    "WalkReport",
    "WalkStep",
    "Weight",
    "advance",
    "buchberger",
    "cone_vectors",
    "deglex_order",
    "degrevlex_order",
    "evaluate_representation",
    "in_cone",
    "in_interior",
    "initial_form",
    "initial_set",
    "integer_weight",
    "interreduce",
    "is_reduced",
    "is_sagbi",
    "is_weight_homogeneous",
    "lex_order",
    "lift",
    "next_cone",
    "normal_form",
    "refine",
    "representation_ring",
    "sagbi_basis",
    "semigroup_member",
    "separating_weight",
    "spolynomial",
    "subduct",
    "toric_relations",
    "walk",
    "weight_vector",
    "weighted_degree",
]
