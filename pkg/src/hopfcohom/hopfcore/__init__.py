"""Finite-dimensional Hopf algebras, morphisms, exact sequences, the double."""

from .double import DoubleTranslation, drinfeld_double
from .groups import Group, GroupError, cyclic, dihedral, symmetric
from .hopf import (
    FinDimAlgebra,
    FinDimHopf,
    HopfError,
    HopfMorphism,
    check_hopf_axioms,
    counit_morphism,
    dual_hopf,
    group_algebra,
    group_morphism,
    morphism_check,
    transport,
    trivial_hopf,
)
from .modules import RightModule, one_dim_module, regular_module
from .sequences import (
    ExactSequenceWitness,
    QuotientMap,
    augmentation_image,
    cocentral_check,
    left_coinvariants,
    quotient_by_subalgebra,
    right_coinvariants,
    subgroup_inclusion,
    verify_exact_sequence,
)

__all__ = [
    "DoubleTranslation",
    "ExactSequenceWitness",
    "FinDimAlgebra",
    "FinDimHopf",
    "Group",
    "GroupError",
    "HopfError",
    "HopfMorphism",
    "QuotientMap",
    "RightModule",
    "augmentation_image",
    "check_hopf_axioms",
    "cocentral_check",
    "counit_morphism",
    "cyclic",
    "dihedral",
    "drinfeld_double",
    "dual_hopf",
    "group_algebra",
    "group_morphism",
    "left_coinvariants",
    "morphism_check",
    "one_dim_module",
    "quotient_by_subalgebra",
    "regular_module",
    "right_coinvariants",
    "subgroup_inclusion",
    "symmetric",
    "transport",
    "trivial_hopf",
    "verify_exact_sequence",
]
