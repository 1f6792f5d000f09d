"""Exact fields and linear algebra."""

from .fields import FieldElement, FieldError, FieldSpec, field_arith, multiplicative_order, nth_roots_of_unity
from .linalg import (
    SparseMatrix,
    contains,
    coordinates,
    independent_rows,
    inverse,
    left_nullspace,
    nullspace,
    quotient_representatives,
    rank,
    rank_nullspace,
    rowspace,
    rref,
    same_space,
    solve,
    solve_many,
    solve_or_membership,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
)

__all__ = [
    "FieldElement",
    "FieldError",
    "FieldSpec",
    "SparseMatrix",
    "contains",
    "coordinates",
    "field_arith",
    "independent_rows",
    "inverse",
    "left_nullspace",
    "multiplicative_order",
    "nth_roots_of_unity",
    "nullspace",
    "quotient_representatives",
    "rank",
    "rank_nullspace",
    "rowspace",
    "rref",
    "same_space",
    "solve",
    "solve_many",
    "solve_or_membership",
    "subspace_intersection",
    "subspace_ops",
    "subspace_sum",
]
