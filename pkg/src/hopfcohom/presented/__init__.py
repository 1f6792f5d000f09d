"""Finitely presented Hopf algebras, checked up to a word-length cap."""

from .constructions import (
    asymmetry_from,
    bilinear_form_hopf,
    bplus_sequence_check,
    crossed_product_z2,
    free_product,
    group_z2,
    mat_inv,
    matrix,
    q_matrix,
    smash_maps,
    tau_automorphism,
    tau_report,
    trivial_presented,
    universal_cosovereign,
    verify_smash_iso,
)
from .genericity import EXCLUDED, GENERIC, NOT_GENERIC, NOT_NORMALIZABLE, GenericityVerdict, excluded_table, genericity_check
from .hopf import DEFAULT_CAP, GenMap, PresentedHopf, hopf_axiom_check_to_cap
from .ncpoly import QQ, Alphabet, NCPolynomial, PresentationError, Scalars, Tensor2, gens
from .rewriting import CACHE_ENV, Certificate, CompletionError, RewriteSystem, cache_dir, complete_to_cap

__all__ = [
    "CACHE_ENV", "DEFAULT_CAP", "EXCLUDED", "GENERIC", "NOT_GENERIC", "NOT_NORMALIZABLE", "QQ",
    "Alphabet", "Certificate", "CompletionError", "GenMap", "GenericityVerdict", "NCPolynomial",
    "PresentationError", "PresentedHopf", "RewriteSystem", "Scalars", "Tensor2",
    "asymmetry_from", "bilinear_form_hopf", "bplus_sequence_check", "cache_dir", "complete_to_cap",
    "crossed_product_z2", "excluded_table", "free_product", "gens", "genericity_check", "group_z2",
    "hopf_axiom_check_to_cap", "mat_inv", "matrix", "q_matrix", "smash_maps", "tau_automorphism",
    "tau_report", "trivial_presented", "universal_cosovereign", "verify_smash_iso",
]
