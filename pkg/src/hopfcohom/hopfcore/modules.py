"""Right modules over a finite-dimensional algebra, as action matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..checks import CheckReport
from ..exactla import rowspace
from .hopf import FinDimAlgebra, _witness


@dataclass(frozen=True, eq=False)
class RightModule:
    """``action[a]`` is the matrix of v |-> v . b_a (rows are images)."""

    algebra: FinDimAlgebra
    action: np.ndarray
    name: str = ""

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    def rho(self, x):
        """Matrix of v |-> v . x for an algebra element x."""
        return self.field.einsum("a,avw->vw", x, self.action)

    def act(self, V, x):
        """Rows of V acted on by x."""
        return self.field.matmul(V, self.rho(x))

    def act_all(self, V):
        """All v . b_a as rows, for v in the rows of V."""
        F = self.field
        out = F.einsum("kv,avw->kaw", V, self.action)
        return out.reshape(-1, self.dim, F.degree)

    def check_axioms(self) -> CheckReport:
        F, D = self.field, self.algebra
        rep = CheckReport(f"module axioms{': ' + self.name if self.name else ''}")
        lhs = F.einsum("avw,bwz->abvz", self.action, self.action)
        rhs = F.einsum("abc,cvz->abvz", D.mult, self.action)
        rep.add("(v.x).y = v.(xy)", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, D.labels))
        one = self.rho(D.unit)
        rep.add("v.1 = v", F.equal(one, F.eye(self.dim)))
        return rep

    def submodule(self, V):
        """Basis of the submodule generated by the rows of V."""
        F = self.field
        cur = rowspace(F, V)
        while True:
            nxt = rowspace(F, np.concatenate([cur, self.act_all(cur)], axis=0)) if cur.shape[0] else cur
            if nxt.shape[0] == cur.shape[0]:
                return cur
            cur = nxt


def regular_module(D: FinDimAlgebra) -> RightModule:
    return RightModule(D, D.right_regular, "regular")


def one_dim_module(D: FinDimAlgebra, character, name: str = "") -> RightModule:
    """k with v . b_a = character[a] v."""
    F = D.field
    return RightModule(D, character.reshape(D.dim, 1, 1, F.degree).copy(), name)
