"""Cocentral maps, quotients by Hopf subalgebras, exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..checks import CheckReport
from ..exactla import coordinates, left_nullspace, nullspace, quotient_representatives, rank, rowspace, same_space
from .hopf import FinDimHopf, HopfMorphism, _witness


@dataclass(frozen=True, eq=False)
class QuotientMap:
    """Projection A -> A/I onto the span of chosen representatives.

    ``hopf`` is the quotient Hopf algebra when I is a Hopf ideal, else None
    (then only the quotient coalgebra structure is meaningful).
    """

    source: FinDimHopf
    matrix: np.ndarray
    ideal: np.ndarray
    representatives: np.ndarray
    hopf: FinDimHopf | None = None

    @property
    def target(self):
        return self.hopf

    def as_morphism(self) -> HopfMorphism:
        if self.hopf is None:
            raise ValueError("quotient is not a Hopf algebra")
        return HopfMorphism(self.source, self.hopf, self.matrix, "p")


def cocentral_check(p) -> CheckReport:
    """p(a_(1)) (x) a_(2) = p(a_(2)) (x) a_(1) on every basis vector a."""
    A = p.source
    F = A.field
    lhs = F.einsum("ijk,jq->iqk", A.comult, p.matrix)
    rhs = F.einsum("ijk,kq->iqj", A.comult, p.matrix)
    rep = CheckReport("cocentrality")
    rep.add("p(a1) (x) a2 = p(a2) (x) a1", F.equal(lhs, rhs), witness=_witness(F, lhs, rhs, A.labels))
    return rep


def augmentation_image(incl) -> np.ndarray:
    """Basis of i(B)^+ = i(Ker eps_B) inside A."""
    B = incl.source
    F = B.field
    kerB = nullspace(F, B.counit.reshape(1, B.dim, F.degree))
    if kerB.shape[0] == 0:
        return F.zeros((0, incl.target.dim))
    return rowspace(F, F.matmul(kerB, incl.matrix))


def right_ideal_span(A: FinDimHopf, X) -> np.ndarray:
    """span{x a} (the right ideal X A)."""
    F = A.field
    if X.shape[0] == 0:
        return X
    return rowspace(F, A.span_products(X, F.eye(A.dim)))


def left_ideal_span(A: FinDimHopf, X) -> np.ndarray:
    """span{a x} (the left ideal A X)."""
    F = A.field
    if X.shape[0] == 0:
        return X
    return rowspace(F, A.span_products(F.eye(A.dim), X))


def _coinvariants(A: FinDimHopf, p, side: str) -> np.ndarray:
    F = A.field
    one_L = F.einsum("i,iq->q", A.unit, p.matrix)
    nL = p.matrix.shape[1]
    if side == "right":
        # a |-> (id (x) p) Delta(a) - a (x) 1
        T = F.einsum("ijk,kq->ijq", A.comult, p.matrix)
        T = F.sub(T, F.einsum("ij,q->ijq", F.eye(A.dim), one_L))
    else:
        # a |-> (p (x) id) Delta(a) - 1 (x) a
        T = F.einsum("ijk,jq->iqk", A.comult, p.matrix)
        T = F.sub(T, F.einsum("q,ik->iqk", one_L, F.eye(A.dim)))
    M = T.reshape(A.dim, -1, F.degree)
    return left_nullspace(F, M)


def right_coinvariants(A, p):
    """A^{co L} = {a : (id (x) p) Delta(a) = a (x) 1}."""
    return _coinvariants(A, p, "right")


def left_coinvariants(A, p):
    """^{co L}A = {a : (p (x) id) Delta(a) = 1 (x) a}."""
    return _coinvariants(A, p, "left")


def quotient_by_subalgebra(incl) -> QuotientMap:
    """p : A -> L = A / B^+A, with the Hopf structure when it descends."""
    A = incl.target
    F = A.field
    ideal = right_ideal_span(A, augmentation_image(incl))
    reps = quotient_representatives(F, ideal)
    basis = np.concatenate([ideal, reps], axis=0)
    coords = coordinates(F, basis, F.eye(A.dim))
    p = np.ascontiguousarray(coords[:, ideal.shape[0]:])
    hopf = None
    two_sided = same_space(F, ideal, left_ideal_span(A, augmentation_image(incl))) if ideal.shape[0] else True
    if two_sided:
        m = F.einsum("ai,bj,ijk,kc->abc", reps, reps, A.mult, p)
        u = F.einsum("i,ic->c", A.unit, p)
        c = F.einsum("ai,ijk,jb,kc->abc", reps, A.comult, p, p)
        e = F.einsum("ai,i->a", reps, A.counit)
        S = F.einsum("ai,ij,jb->ab", reps, A.antipode, p)
        labels = []
        for r in reps:
            nz = np.flatnonzero(~F.iszero(r))
            labels.append(f"[{A.labels[nz[0]]}]" if len(nz) == 1 else f"v{len(labels)}")
        hopf = FinDimHopf(F, m, u, tuple(labels), f"{A.name}/B+{A.name}", comult=c, counit=e, antipode=S)
    return QuotientMap(A, p, ideal, reps, hopf)


@dataclass
class ExactSequenceWitness:
    """Everything computed while checking k -> B -> A -> L -> k."""

    rank_i: int
    rank_p: int
    dim_B: int
    dim_L: int
    ker_p: np.ndarray
    Bplus_A: np.ndarray
    A_Bplus: np.ndarray
    image_i: np.ndarray
    coinv_right: np.ndarray
    coinv_left: np.ndarray
    flags: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return all(self.flags[k] for k in ("condition 1", "condition 2", "condition 3"))

    def report(self) -> CheckReport:
        rep = CheckReport("exact sequence k -> B -> A -> L -> k")
        rep.add("condition 1", self.flags["condition 1"], f"rank i = {self.rank_i}/{self.dim_B}, rank p = {self.rank_p}/{self.dim_L}")
        rep.add(
            "condition 2",
            self.flags["condition 2"],
            f"dim Ker p = {self.ker_p.shape[0]}, dim B+A = {self.Bplus_A.shape[0]}, dim AB+ = {self.A_Bplus.shape[0]}",
        )
        rep.add(
            "condition 3",
            self.flags["condition 3"],
            f"dim i(B) = {self.image_i.shape[0]}, dim A^coL = {self.coinv_right.shape[0]}, dim coL^A = {self.coinv_left.shape[0]}",
        )
        rep.add("p i = eps 1", self.flags["p i = eps 1"])
        return rep


def verify_exact_sequence(incl, p) -> ExactSequenceWitness:
    """Decide the three exactness conditions by exact subspace comparison.

    ``incl`` is a HopfMorphism B -> A; ``p`` is a HopfMorphism A -> L or a
    :class:`QuotientMap` (for which L may be only a coalgebra).
    """
    A = incl.target
    F = A.field
    dim_B = incl.source.dim
    dim_L = p.matrix.shape[1]
    rank_i = rank(F, incl.matrix)
    rank_p = rank(F, p.matrix)
    ker_p = rowspace(F, left_nullspace(F, p.matrix))
    bplus = augmentation_image(incl)
    BA = right_ideal_span(A, bplus)
    AB = left_ideal_span(A, bplus)
    img = rowspace(F, incl.matrix)
    cr = rowspace(F, right_coinvariants(A, p))
    cl = rowspace(F, left_coinvariants(A, p))
    one_L = F.einsum("i,iq->q", A.unit, p.matrix)
    pi = F.matmul(incl.matrix, p.matrix)
    eps1 = F.einsum("i,q->iq", incl.source.counit, one_L)
    flags = {
        "condition 1": rank_i == dim_B and rank_p == dim_L,
        "condition 2": same_space(F, ker_p, BA) and same_space(F, ker_p, AB),
        "condition 3": same_space(F, img, cr) and same_space(F, img, cl),
        "p i = eps 1": F.equal(pi, eps1),
    }
    return ExactSequenceWitness(rank_i, rank_p, dim_B, dim_L, ker_p, BA, AB, img, cr, cl, flags)


def subgroup_inclusion(A: FinDimHopf, elements, name: str = "") -> HopfMorphism:
    """k<N> -> kG for a subgroup N given by element indices of A.group."""
    from .groups import from_table
    from .hopf import hopf_from_group

    G = A.group
    elems = sorted(elements)
    pos = {g: k for k, g in enumerate(elems)}
    table = [[pos[G.mul(a, b)] for b in elems] for a in elems]
    N = from_table(table, [G.labels[g] for g in elems], name or f"sub{G.name}")
    B = hopf_from_group(N, A.field)
    F = A.field
    M = F.zeros((B.dim, A.dim))
    for k, g in enumerate(elems):
        M[k, g] = F.scalar(1)
    return HopfMorphism(B, A, M, "i")
