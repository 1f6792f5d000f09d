"""Yetter-Drinfeld modules and the constructions built from them."""

from .constructions import (
    coadjoint_on_image,
    coadjoint_quotient,
    cotensor_subspace,
    fourier_transform,
    grading_components,
    grading_report,
    group_characters,
    induce,
    restrict,
    restriction_subspace,
)
from .core import (
    Character,
    YDError,
    YDModule,
    YDMorphism,
    coevaluation,
    direct_sum,
    dual_yd,
    evaluation,
    hom_space,
    k_psi,
    tensor_yd,
    trivial_yd,
    yd_check,
    yd_iso_search,
    yd_morphism_check,
)
from .double_modules import double_module_to_yd, double_of, yd_to_double_module

__all__ = [
    "Character",
    "YDError",
    "YDModule",
    "YDMorphism",
    "coadjoint_on_image",
    "coadjoint_quotient",
    "coevaluation",
    "cotensor_subspace",
    "direct_sum",
    "double_module_to_yd",
    "double_of",
    "dual_yd",
    "evaluation",
    "fourier_transform",
    "grading_components",
    "grading_report",
    "group_characters",
    "hom_space",
    "induce",
    "k_psi",
    "restrict",
    "restriction_subspace",
    "tensor_yd",
    "trivial_yd",
    "yd_check",
    "yd_iso_search",
    "yd_morphism_check",
    "yd_to_double_module",
]
