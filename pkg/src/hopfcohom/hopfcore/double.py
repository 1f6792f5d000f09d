"""The algebra whose right modules are right-right Yetter-Drinfeld modules.

Basis element ``(i, j)`` (flattened to ``i * n + j``) is phi_i (x) b_j,
acting on a YD module V by "first the coaction functional phi_i, then
b_j":

    v . (phi_i (x) b_j) = (phi_i(v_(1)) v_(0)) . b_j

Functionals compose as f then f' = f' * f (convolution).  Moving b_j past
phi_k uses the YD condition:

    b . f = sum f(S(b_(1)) - b_(3)) (x) b_(2)

which gives the structure constants below.  The convention is pinned by
the property test "YD condition <=> module axioms" in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..exactla import rank
from .hopf import FinDimAlgebra, FinDimHopf, HopfError


@dataclass(frozen=True)
class DoubleTranslation:
    """How YD data and D-module data correspond (see module docstring)."""

    base_dim: int

    def index(self, i: int, j: int) -> int:
        return i * self.base_dim + j

    def split(self, x: int) -> tuple[int, int]:
        return divmod(x, self.base_dim)


def drinfeld_double(A: FinDimHopf) -> tuple[FinDimAlgebra, DoubleTranslation]:
    F = A.field
    n = A.dim
    if rank(F, A.antipode) != n:
        raise HopfError("antipode is singular (corrupted input)")
    m, c, S = A.mult, A.comult, A.antipode
    # G[p, r, k, a] = phi_k(S(b_p) b_a b_r)
    SbA = F.einsum("pt,tas->pas", S, m)
    G = F.einsum("pas,srk->prka", SbA, m)
    X = F.einsum("jpqr,prka->jkqa", A.comult2, G)
    # (g * phi_i)(b_z) = sum_a c[z, a, i] g(b_a)
    Y = F.einsum("jkqa,zai->jkqzi", X, c)
    M = F.einsum("jkqzi,qlt->ijklzt", Y, m)
    mult = M.reshape(n * n, n * n, n * n, F.degree)
    unit = F.einsum("i,j->ij", A.counit, A.unit).reshape(n * n, F.degree)
    labels = tuple(f"{A.labels[i]}*|{A.labels[j]}" for i in range(n) for j in range(n))
    D = FinDimAlgebra(F, mult, unit, labels, f"D({A.name})" if A.name else "D")
    return D, DoubleTranslation(n)
