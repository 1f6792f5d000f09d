"""Finite-dimensional Hopf algebras as structure tensors.

Conventions (all arrays carry the field's trailing coordinate axis):

* ``mult[i, j, k]``:    b_i b_j = sum_k mult[i, j, k] b_k
* ``unit[k]``:          1 = sum_k unit[k] b_k
* ``comult[i, j, k]``:  Delta(b_i) = sum_{j,k} comult[i, j, k] b_j (x) b_k
* ``counit[i]``:        eps(b_i)
* ``antipode[i, j]``:   S(b_i) = sum_j antipode[i, j] b_j

Linear maps are matrices acting on row vectors: row i is the image of
basis vector i, so "f then g" is ``f @ g``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..checks import CheckReport
from ..exactla import FieldSpec, inverse, rank
from . import groups as _groups


class HopfError(ValueError):
    pass


def _witness(F, X, Y, labels):
    """First index tuple where X and Y differ, translated to labels."""
    diff = np.argwhere(~F.iszero(F.sub(X, Y)))
    if diff.size == 0:
        return None
    idx = tuple(int(t) for t in diff[0])
    return tuple(labels[t] if t < len(labels) else t for t in idx)


@dataclass(frozen=True, eq=False)
class FinDimAlgebra:
    """Associative unital algebra: ``mult`` and ``unit`` as above."""

    field: FieldSpec
    mult: np.ndarray
    unit: np.ndarray
    labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        n = self.mult.shape[0]
        if self.mult.shape[:3] != (n, n, n) or self.unit.shape[0] != n:
            raise HopfError("inconsistent algebra tensor shapes")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"b{i}" for i in range(n)))

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def prod(self, x, y):
        return self.field.einsum("i,j,ijk->k", x, y, self.mult)

    def right_mult(self, y):
        """Matrix of a |-> a y."""
        return self.field.einsum("ijk,j->ik", self.mult, y)

    def left_mult(self, x):
        """Matrix of a |-> x a."""
        return self.field.einsum("i,ijk->jk", x, self.mult)

    @cached_property
    def right_regular(self):
        """R[x, a, k]: a b_x = sum_k R[x, a, k] b_k (right action on itself)."""
        return np.ascontiguousarray(np.transpose(self.mult, (1, 0, 2, 3)))

    def span_products(self, X, Y):
        """All products x y (x in rows of X, y in rows of Y), as rows."""
        P = self.field.einsum("ai,ijk,bj->abk", X, self.mult, Y)
        return P.reshape(-1, self.dim, self.field.degree)

    def check_axioms(self) -> CheckReport:
        F, m, u = self.field, self.mult, self.unit
        rep = CheckReport(f"algebra axioms{': ' + self.name if self.name else ''}")
        lhs = F.einsum("ijl,lkm->ijkm", m, m)
        rhs = F.einsum("jkl,ilm->ijkm", m, m)
        rep.add("associativity", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, self.labels))
        I = F.eye(self.dim)
        left = F.einsum("i,ijk->jk", u, m)
        right = F.einsum("j,ijk->ik", u, m)
        ok = F.equal(left, I) and F.equal(right, I)
        rep.add("unit", ok, witness=None if ok else _witness(F, left, I, self.labels) or _witness(F, right, I, self.labels))
        return rep


@dataclass(frozen=True, eq=False)
class FinDimHopf(FinDimAlgebra):
    comult: np.ndarray = None
    counit: np.ndarray = None
    antipode: np.ndarray = None
    group: object = None  # G when this is kG in the group-like basis
    dual_group: object = None  # G when this is k^G in the dual basis

    def __post_init__(self):
        super().__post_init__()
        n = self.dim
        if self.comult is None or self.counit is None or self.antipode is None:
            raise HopfError("comultiplication, counit and antipode are required")
        if self.comult.shape[:3] != (n, n, n) or self.counit.shape[0] != n or self.antipode.shape[:2] != (n, n):
            raise HopfError("inconsistent coalgebra tensor shapes")

    @cached_property
    def comult2(self):
        """Delta^2: c2[i, p, q, r] = coefficient of b_p (x) b_q (x) b_r."""
        return self.field.einsum("ijk,jpq->ipqk", self.comult, self.comult)

    @cached_property
    def antipode_inverse(self):
        return inverse(self.field, self.antipode)

    def coproduct(self, x):
        return self.field.einsum("i,ijk->jk", x, self.comult)

    def eps(self, x):
        return self.field.einsum("i,i->", x, self.counit)

    @property
    def is_commutative(self) -> bool:
        return self.field.equal(self.mult, np.transpose(self.mult, (1, 0, 2, 3)))

    @property
    def is_cocommutative(self) -> bool:
        return self.field.equal(self.comult, np.transpose(self.comult, (0, 2, 1, 3)))

    def as_algebra(self) -> FinDimAlgebra:
        return FinDimAlgebra(self.field, self.mult, self.unit, self.labels, self.name)

    def replace(self, **changes) -> "FinDimHopf":
        return dataclasses.replace(self, **changes)


def check_hopf_axioms(H: FinDimHopf) -> CheckReport:
    """Seven axiom families, each exact, with a witness index on failure."""
    F, m, u, c, e, S = H.field, H.mult, H.unit, H.comult, H.counit, H.antipode
    lab = H.labels
    rep = CheckReport(f"Hopf axioms{': ' + H.name if H.name else ''}")
    rep.extend(H.as_algebra().check_axioms())

    lhs = F.einsum("ijk,jlm->ilmk", c, c)
    rhs = F.einsum("ijk,kmn->ijmn", c, c)
    rep.add("coassociativity", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, lab))

    I = F.eye(H.dim)
    left = F.einsum("ijk,j->ik", c, e)
    right = F.einsum("ijk,k->ij", c, e)
    ok = F.equal(left, I) and F.equal(right, I)
    rep.add("counit", ok, witness=None if ok else (_witness(F, left, I, lab) or _witness(F, right, I, lab)))

    lhs = F.einsum("ijl,lpq->ijpq", m, c)
    rhs = F.einsum("iab,acp,jcd,bdq->ijpq", c, m, c, m)
    du = F.einsum("i,ijk->jk", u, c)
    uu = F.einsum("j,k->jk", u, u)
    ok = F.equal(lhs, rhs) and F.equal(du, uu)
    rep.add(
        "comultiplication is an algebra map",
        ok,
        witness=None if ok else (_witness(F, lhs, rhs, lab) or ("unit",)),
    )

    lhs = F.einsum("ijk,k->ij", m, e)
    rhs = F.einsum("i,j->ij", e, e)
    ok = F.equal(lhs, rhs) and F.equal(F.einsum("i,i->", u, e), F.scalar(1))
    rep.add("counit is an algebra map", ok, witness=None if ok else (_witness(F, lhs, rhs, lab) or ("unit",)))

    ue = F.einsum("i,k->ik", e, u)
    left = F.einsum("ijk,ja,akq->iq", c, S, m)
    right = F.einsum("ijk,kb,jbq->iq", c, S, m)
    ok = F.equal(left, ue) and F.equal(right, ue)
    wit = None
    if not ok:
        wit = _witness(F, left, ue, lab) or _witness(F, right, ue, lab)
        wit = wit[:1]
    rep.add("antipode", ok, witness=wit)

    rep.add("antipode invertible", rank(F, S) == H.dim)
    return rep


def hopf_from_group(G: _groups.Group, F: FieldSpec) -> FinDimHopf:
    n = G.order
    mult = F.zeros((n, n, n))
    comult = F.zeros((n, n, n))
    S = F.zeros((n, n))
    one = F.scalar(1)
    for a in range(n):
        comult[a, a, a] = one
        S[a, G.inverses[a]] = one
        for b in range(n):
            mult[a, b, G.mul(a, b)] = one
    unit = F.zeros(n)
    unit[G.identity] = one
    counit = F.zeros(n)
    counit[:] = one
    return FinDimHopf(
        F, mult, unit, tuple(G.labels), f"k{G.name}", comult=comult, counit=counit, antipode=S, group=G
    )


def group_algebra(group, field: FieldSpec | str) -> FinDimHopf:
    """kG for a :class:`Group`, a Cayley table, or ``{"builtin": kind, "n": n}``."""
    F = FieldSpec.parse(field) if isinstance(field, str) else field
    if isinstance(group, dict):
        if "builtin" in group:
            G = _groups.builtin(group["builtin"], int(group["n"]))
        else:
            G = _groups.from_table(group["table"], group.get("labels"), group.get("name", "G"))
    elif isinstance(group, _groups.Group):
        G = group
    else:
        G = _groups.from_table(group)
    return hopf_from_group(G, F)


def dual_hopf(H: FinDimHopf) -> FinDimHopf:
    """The dual Hopf algebra on the dual basis phi_i."""
    m = np.ascontiguousarray(np.transpose(H.comult, (1, 2, 0, 3)))
    c = np.ascontiguousarray(np.transpose(H.mult, (2, 0, 1, 3)))
    S = np.ascontiguousarray(np.transpose(H.antipode, (1, 0, 2)))
    labels = tuple(f"{lab}*" for lab in H.labels)
    name = f"{H.name}*" if H.name else ""
    return FinDimHopf(
        H.field, m, H.counit.copy(), labels, name, comult=c, counit=H.unit.copy(), antipode=S, dual_group=H.group
    )


def transport(H: FinDimHopf, P) -> FinDimHopf:
    """Structure tensors of H in the basis given by the rows of P."""
    F = H.field
    Pi = inverse(F, P)
    m = F.einsum("ai,bj,ijk,kc->abc", P, P, H.mult, Pi)
    u = F.einsum("k,kc->c", H.unit, Pi)
    c = F.einsum("ai,ijk,jb,kc->abc", P, H.comult, Pi, Pi)
    e = F.einsum("ai,i->a", P, H.counit)
    S = F.einsum("ai,ij,jb->ab", P, H.antipode, Pi)
    return FinDimHopf(F, m, u, tuple(f"v{i}" for i in range(H.dim)), H.name, comult=c, counit=e, antipode=S)


@dataclass(frozen=True, eq=False)
class HopfMorphism:
    source: FinDimHopf
    target: FinDimHopf
    matrix: np.ndarray
    name: str = ""

    def __post_init__(self):
        if self.matrix.shape[:2] != (self.source.dim, self.target.dim):
            raise HopfError("morphism matrix shape does not match source/target dimensions")

    def check(self) -> CheckReport:
        return morphism_check(self.matrix, self.source, self.target)

    def __call__(self, x):
        return self.source.field.matmul(x[None], self.matrix)[0]


def morphism_check(f, H1: FinDimHopf, H2: FinDimHopf) -> CheckReport:
    F = H1.field
    lab = H1.labels
    rep = CheckReport("Hopf morphism")
    lhs = F.einsum("ijk,kl->ijl", H1.mult, f)
    rhs = F.einsum("ia,jb,abl->ijl", f, f, H2.mult)
    rep.add("multiplicative", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, lab))
    rep.add("unital", F.equal(F.einsum("i,ij->j", H1.unit, f), H2.unit))
    lhs = F.einsum("ik,kpq->ipq", f, H2.comult)
    rhs = F.einsum("iab,ap,bq->ipq", H1.comult, f, f)
    rep.add("comultiplicative", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, lab))
    lhs = F.einsum("ij,j->i", f, H2.counit)
    rep.add("counital", F.equal(lhs, H1.counit), witness=_witness(F, lhs, H1.counit, lab))
    lhs = F.einsum("ij,jk->ik", H1.antipode, f)
    rhs = F.einsum("ij,jk->ik", f, H2.antipode)
    rep.add("commutes with antipode", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, lab))
    return rep


def group_morphism(H1: FinDimHopf, H2: FinDimHopf, images) -> HopfMorphism:
    """Linear extension of a map of group-like bases (``images[a]`` = index)."""
    F = H1.field
    f = F.zeros((H1.dim, H2.dim))
    one = F.scalar(1)
    for a, b in enumerate(images):
        f[a, b] = one
    return HopfMorphism(H1, H2, f)


def counit_morphism(H: FinDimHopf) -> HopfMorphism:
    """eps : H -> k, with k the one-dimensional Hopf algebra."""
    K = trivial_hopf(H.field)
    return HopfMorphism(H, K, H.counit.reshape(H.dim, 1, H.field.degree).copy(), "eps")


def trivial_hopf(F: FieldSpec) -> FinDimHopf:
    from .groups import cyclic

    return hopf_from_group(cyclic(1), F)
