"""Radicals, projective resolutions, Ext and Gerstenhaber-Schack cohomology."""

from .gs import (
    CohomologyTable,
    Verification,
    algebra_hash,
    bialgebra_cohomology,
    cd_gs_observed,
    cyclic_oracle,
    gs_cohomology,
    verify_corollary,
    verify_theorem_restriction,
)
from .idempotents import SimpleType, SplittingError, lift_idempotent, projective_basis, simple_types
from ..hopfcore.modules import RightModule, one_dim_module, regular_module
from .radical import RadicalError, is_nilpotent, quotient_algebra, radical, restrict_scalars
from .resolution import (
    FREE,
    MAX_RANK,
    AlgebraData,
    FreeResolution,
    ResolutionError,
    algebra_data,
    ext_dims,
    ext_dims_from,
    hom_complex_ranks,
    hom_dim,
    minimal_free_resolution,
)

FDModule = RightModule

__all__ = [
    "FREE",
    "MAX_RANK",
    "AlgebraData",
    "CohomologyTable",
    "FDModule",
    "FreeResolution",
    "RadicalError",
    "ResolutionError",
    "RightModule",
    "SimpleType",
    "SplittingError",
    "Verification",
    "algebra_data",
    "algebra_hash",
    "bialgebra_cohomology",
    "cd_gs_observed",
    "cyclic_oracle",
    "ext_dims",
    "ext_dims_from",
    "gs_cohomology",
    "hom_complex_ranks",
    "hom_dim",
    "is_nilpotent",
    "lift_idempotent",
    "minimal_free_resolution",
    "one_dim_module",
    "projective_basis",
    "quotient_algebra",
    "radical",
    "regular_module",
    "restrict_scalars",
    "simple_types",
    "verify_corollary",
    "verify_theorem_restriction",
]
