"""Right-right Yetter-Drinfeld modules as a pair of structure tensors.

* ``action[v, a, w]``:   v . b_a = sum_w action[v, a, w] w
* ``coaction[v, w, a]``: rho(v) = sum_{w,a} coaction[v, w, a] w (x) b_a

The compatibility checked is

    (v.a)_(0) (x) (v.a)_(1) = v_(0).a_(2) (x) S(a_(1)) v_(1) a_(3)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..checks import CheckReport
from ..exactla import nullspace, rank
from ..hopfcore.hopf import FinDimHopf


class YDError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class YDModule:
    base: FinDimHopf
    action: np.ndarray
    coaction: np.ndarray
    name: str = ""

    def __post_init__(self):
        n, d = self.base.dim, self.base.field.degree
        k = self.action.shape[0]
        if self.action.shape != (k, n, k, d) or self.coaction.shape != (k, k, n, d):
            raise YDError(
                f"structure tensors {self.action.shape}, {self.coaction.shape} do not fit dim {k} over a {n}-dim algebra"
            )

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self) -> int:
        return self.action.shape[0]

    def action_matrix(self, a: int):
        return self.action[:, a]

    def coaction_matrix(self, i: int):
        """C_i[v, w] = coaction[v, w, i] (apply the functional phi_i to the A-leg)."""
        return self.coaction[:, :, i]

    def labels(self):
        return tuple(f"v{i}" for i in range(self.dim))


@dataclass(frozen=True, eq=False)
class YDMorphism:
    source: YDModule
    target: YDModule
    matrix: np.ndarray
    name: str = ""

    def check(self) -> CheckReport:
        return yd_morphism_check(self.matrix, self.source, self.target)

    @property
    def is_isomorphism(self) -> bool:
        F = self.source.field
        return self.source.dim == self.target.dim and rank(F, self.matrix) == self.source.dim


def _first_diff(F, X, Y):
    diff = np.argwhere(~F.iszero(F.sub(X, Y)))
    return None if diff.size == 0 else tuple(int(t) for t in diff[0])


def _vw(V, idx, names=("vector", "algebra element")):
    """Witness (basis vector, basis algebra element) from an index tuple (v, a, ...)."""
    if idx is None:
        return None
    return {names[0]: f"v{idx[0]}", names[1]: V.base.labels[idx[1]]}


def yd_check(V: YDModule) -> CheckReport:
    A, F = V.base, V.field
    m, c, S = A.mult, A.comult, A.antipode
    R, C = V.action, V.coaction
    k = V.dim
    rep = CheckReport(f"YD module{': ' + V.name if V.name else ''}")

    lhs = F.einsum("vau,ubw->vabw", R, R)
    rhs = F.einsum("abx,vxw->vabw", m, R)
    rep.add("module associativity", F.equal(lhs, rhs), witness=_vw(V, _first_diff(F, lhs, rhs)))
    one = F.einsum("a,vaw->vw", A.unit, R)
    idx = _first_diff(F, one, F.eye(k))
    rep.add("module unit", idx is None, witness=None if idx is None else {"vector": f"v{idx[0]}"})

    lhs = F.einsum("vus,uwt->vwts", C, C)
    rhs = F.einsum("vwa,ats->vwts", C, c)
    idx = _first_diff(F, lhs, rhs)
    rep.add("comodule coassociativity", F.equal(lhs, rhs), witness=None if idx is None else {"vector": f"v{idx[0]}"})
    cu = F.einsum("vwa,a->vw", C, A.counit)
    idx = _first_diff(F, cu, F.eye(k))
    rep.add("comodule counit", idx is None, witness=None if idx is None else {"vector": f"v{idx[0]}"})

    # (v.a)_(0) (x) (v.a)_(1)
    lhs = F.einsum("vau,uwt->vawt", R, C)
    # S(b_p) b_s b_r, then v_(0).a_(2) (x) S(a_(1)) v_(1) a_(3)
    Sm = F.einsum("px,xsy->psy", S, m)
    G = F.einsum("psy,yrt->psrt", Sm, m)
    T = F.einsum("apqr,psrt->aqst", A.comult2, G)
    U = F.einsum("vus,aqst->vuaqt", C, T)
    rhs = F.einsum("vuaqt,uqw->vawt", U, R)
    rep.add("YD condition", F.equal(lhs, rhs), witness=_vw(V, _first_diff(F, lhs, rhs)))
    return rep


def yd_morphism_check(f, V: YDModule, W: YDModule) -> CheckReport:
    """A-linearity and A-colinearity of the matrix f : V -> W."""
    F = V.field
    rep = CheckReport("YD morphism")
    if V.base is not W.base and not _same_base(V.base, W.base):
        rep.add("same base", False)
        return rep
    lin_l = F.einsum("vau,uw->vaw", V.action, f)
    lin_r = F.einsum("vu,uaw->vaw", f, W.action)
    rep.add("A-linear", F.equal(lin_l, lin_r), witness=_vw(V, _first_diff(F, lin_l, lin_r)))
    col_l = F.einsum("vua,uw->vwa", V.coaction, f)
    col_r = F.einsum("vu,uwa->vwa", f, W.coaction)
    idx = _first_diff(F, col_l, col_r)
    rep.add("A-colinear", idx is None, witness=None if idx is None else {"vector": f"v{idx[0]}"})
    return rep


def _same_base(A: FinDimHopf, B: FinDimHopf) -> bool:
    F = A.field
    return (
        A.field == B.field
        and A.dim == B.dim
        and all(F.equal(getattr(A, t), getattr(B, t)) for t in ("mult", "unit", "comult", "counit", "antipode"))
    )


def hom_space(V: YDModule, W: YDModule):
    """Basis (rows, flattened dimV x dimW matrices) of Hom_YD(V, W)."""
    F = V.field
    p, q = V.dim, W.dim
    Ip, Iq = F.eye(p), F.eye(q)
    # unknown f[x, y]; equations (R_V f - f R_W)[v, a, w] and (C_V f - f C_W)[v, w, a]
    lin = F.sub(F.einsum("vax,yw->xyvaw", V.action, Iq), F.einsum("vx,yaw->xyvaw", Ip, W.action))
    col = F.sub(F.einsum("vxa,yw->xyvwa", V.coaction, Iq), F.einsum("vx,ywa->xyvwa", Ip, W.coaction))
    E = np.concatenate([lin.reshape(p * q, -1, F.degree), col.reshape(p * q, -1, F.degree)], axis=1)
    return nullspace(F, np.swapaxes(E, 0, 1))


def yd_iso_search(V: YDModule, W: YDModule, seeds=range(16)) -> YDMorphism | None:
    """An isomorphism V -> W, certified, or None.

    Random elements of Hom_YD(V, W) are drawn on a fixed seed schedule and
    tested for invertibility.
    """
    F = V.field
    if V.dim != W.dim:
        return None
    if V.dim == 0:
        return YDMorphism(V, W, F.zeros((0, 0)), "iso")
    H = hom_space(V, W)
    if H.shape[0] == 0:
        return None
    candidates = [H[i] for i in range(H.shape[0])]
    for s in seeds:
        rng = np.random.default_rng(s)
        coeffs = F.random(H.shape[0], rng)
        candidates.append(F.einsum("k,kx->x", coeffs, H))
    for f in candidates:
        M = f.reshape(V.dim, W.dim, F.degree)
        if rank(F, M) == V.dim and yd_morphism_check(M, V, W).passed:
            return YDMorphism(V, W, M, "iso")
    return None


@dataclass(frozen=True, eq=False)
class Character:
    """psi : A -> k given by its values on the basis."""

    base: FinDimHopf
    values: np.ndarray
    name: str = ""

    def check(self) -> CheckReport:
        A, F, psi = self.base, self.base.field, self.values
        rep = CheckReport(f"character{': ' + self.name if self.name else ''}")
        lhs = F.einsum("ijk,k->ij", A.mult, psi)
        rhs = F.einsum("i,j->ij", psi, psi)
        idx = _first_diff(F, lhs, rhs)
        ok_unit = F.equal(F.einsum("k,k->", A.unit, psi), F.scalar(1))
        rep.add(
            "algebra map",
            idx is None and ok_unit,
            witness=None if idx is None else (A.labels[idx[0]], A.labels[idx[1]]),
        )
        # psi(a_(1)) a_(2) = psi(a_(2)) a_(1)
        left = F.einsum("ijk,j->ik", A.comult, psi)
        right = F.einsum("ijk,k->ij", A.comult, psi)
        idx = _first_diff(F, left, right)
        rep.add("central type", idx is None, witness=None if idx is None else A.labels[idx[0]])
        return rep

    def __mul__(self, other: "Character") -> "Character":
        """Convolution (psi.phi)(a) = psi(a_(1)) phi(a_(2))."""
        F = self.base.field
        vals = F.einsum("ijk,j,k->i", self.base.comult, self.values, other.values)
        return Character(self.base, vals, f"{self.name}*{other.name}")

    def compose(self, M) -> "Character":
        """psi o f for a linear map f with matrix M (rows = images)."""
        F = self.base.field
        return Character(self.base, F.einsum("ij,j->i", M, self.values), self.name)


def k_psi(A: FinDimHopf, psi: Character) -> YDModule:
    rep = psi.check()
    if not rep.passed:
        bad = rep.failures[0]
        raise YDError(f"{bad.name} fails for the character (witness {bad.witness})")
    F = A.field
    R = psi.values.reshape(1, A.dim, 1, F.degree).copy()
    C = A.unit.reshape(1, 1, A.dim, F.degree).copy()
    return YDModule(A, R, C, f"k_{psi.name}" if psi.name else "k_psi")


def trivial_yd(A: FinDimHopf) -> YDModule:
    return k_psi(A, Character(A, A.counit, "eps"))


def direct_sum(*mods: YDModule, name: str = "") -> YDModule:
    if not mods:
        raise YDError("empty direct sum")
    A = mods[0].base
    F = A.field
    k = sum(M.dim for M in mods)
    R = F.zeros((k, A.dim, k))
    C = F.zeros((k, k, A.dim))
    off = 0
    for M in mods:
        s = slice(off, off + M.dim)
        R[s, :, s] = M.action
        C[s, s, :] = M.coaction
        off += M.dim
    return YDModule(A, R, C, name or " + ".join(M.name for M in mods))


def tensor_yd(V: YDModule, W: YDModule) -> YDModule:
    """Diagonal action (v (x) w).a = v.a_(1) (x) w.a_(2), codiagonal coaction."""
    if not (V.base is W.base or _same_base(V.base, W.base)):
        raise YDError("tensor product of YD modules over different bases")
    A, F = V.base, V.field
    p, q = V.dim, W.dim
    RV = F.einsum("ajk,vjx->avkx", A.comult, V.action)
    R = F.einsum("avkx,wky->vwaxy", RV, W.action).reshape(p * q, A.dim, p * q, F.degree)
    CV = F.einsum("vxs,wyt->vwxyst", V.coaction, W.coaction)
    C = F.einsum("vwxyst,stc->vwxyc", CV, A.mult).reshape(p * q, p * q, A.dim, F.degree)
    return YDModule(A, R, C, f"({V.name})(x)({W.name})")


def dual_yd(V: YDModule) -> YDModule:
    """V* with (f.a)(w) = f(w . S^-1(a)) and f_(0)(w) f_(1) = f(w_(0)) S(w_(1)).

    With this convention ev : V* (x) V -> k and coev : k -> V (x) V* are
    YD morphisms (checked in the test suite).
    """
    A, F = V.base, V.field
    Sinv = A.antipode_inverse
    # (f_v . b_a)(w) = f_v(w . S^-1(b_a)): matrix entry [v, a, w] = sum_x Sinv[a, x] action[w, x, v]
    R = F.einsum("ax,wxv->vaw", Sinv, V.action)
    # rho(f_v) = sum_w f_w (x) sum_a coaction[w, v, a] S(b_a)
    C = F.einsum("wva,ab->vwb", V.coaction, A.antipode)
    return YDModule(A, R, C, f"({V.name})*")


def evaluation(V: YDModule):
    """ev : V* (x) V -> k as a (dim^2 x 1) matrix; basis f_v (x) w at v * dim + w."""
    F = V.field
    return F.eye(V.dim).reshape(V.dim * V.dim, 1, F.degree)


def coevaluation(V: YDModule):
    """coev : k -> V (x) V*, 1 |-> sum_v v (x) f_v."""
    F = V.field
    return F.eye(V.dim).reshape(1, V.dim * V.dim, F.degree)
