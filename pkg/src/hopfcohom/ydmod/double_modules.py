"""YD modules over A as right modules over the double D (see hopfcore.double)."""

from __future__ import annotations

import numpy as np

from ..hopfcore.double import drinfeld_double
from ..hopfcore.hopf import FinDimAlgebra, FinDimHopf
from ..hopfcore.modules import RightModule
from .core import YDModule

_DOUBLES: dict = {}


def double_of(A: FinDimHopf) -> FinDimAlgebra:
    """The double of A, built once per Hopf algebra object."""
    hit = _DOUBLES.get(id(A))
    if hit is None or hit[0] is not A:
        hit = (A, drinfeld_double(A)[0])
        _DOUBLES[id(A)] = hit
    return hit[1]


def yd_to_double_module(V: YDModule, D: FinDimAlgebra | None = None) -> RightModule:
    """rho(phi_i (x) b_j) = C_i R_j (first the coaction functional, then b_j)."""
    A, F = V.base, V.field
    D = double_of(A) if D is None else D
    act = F.einsum("vwi,wjz->ijvz", V.coaction, V.action)
    return RightModule(D, act.reshape(A.dim * A.dim, V.dim, V.dim, F.degree), V.name)


def double_module_to_yd(M: RightModule, A: FinDimHopf) -> YDModule:
    """Inverse translation: R_j = sum_i eps_i rho(phi_i (x) b_j), C_i = sum_j u_j rho(phi_i (x) b_j)."""
    F = A.field
    n, k = A.dim, M.dim
    rho = M.action.reshape(n, n, k, k, F.degree)
    # eps = sum_i eps(b_i) phi_i and 1 = sum_j u_j b_j
    R = F.einsum("i,ijvw->vjw", A.counit, rho)
    C = F.einsum("j,ijvw->vwi", A.unit, rho)
    return YDModule(A, np.ascontiguousarray(R), np.ascontiguousarray(C), M.name)

