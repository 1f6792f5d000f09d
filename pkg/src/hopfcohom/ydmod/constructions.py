"""Coadjoint quotients, restriction, induction, gradings, Fourier transform."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..checks import CheckReport
from ..exactla import (
    coordinates,
    left_nullspace,
    nth_roots_of_unity,
    quotient_representatives,
    rank,
    rowspace,
    solve_many,
)
from ..hopfcore.groups import Group
from ..hopfcore.hopf import FinDimHopf, HopfMorphism
from ..hopfcore.sequences import quotient_by_subalgebra
from .core import Character, YDError, YDModule, YDMorphism, direct_sum, k_psi, yd_morphism_check


def _adjoint_coaction_tensor(A: FinDimHopf):
    """T[a, q, t]: a |-> a_(2) (x) S(a_(1)) a_(3) as coefficients of b_q (x) b_t."""
    F = A.field
    Sm = F.einsum("px,xry->pry", A.antipode, A.mult)  # S(b_p) b_r
    return F.einsum("apqr,prt->aqt", A.comult2, Sm)


def _first_bad(F, X, Y):
    return tuple(int(t) for t in np.argwhere(~F.iszero(F.sub(X, Y)))[0])


def _descend(A: FinDimHopf, P, reps, name: str) -> YDModule:
    """Structure on the image of a surjection P : A -> L.

    Action p(a).b = p(ab), coaction p(a) |-> p(a_(2)) (x) S(a_(1)) a_(3).
    Both are computed on representatives and then checked against the
    formulas on every basis vector of A.
    """
    F = A.field
    full_R = F.einsum("abx,xq->abq", A.mult, P)
    full_C = F.einsum("aqt,qw->awt", _adjoint_coaction_tensor(A), P)
    R = F.einsum("la,abq->lbq", reps, full_R)
    C = F.einsum("la,awt->lwt", reps, full_C)
    pR = F.einsum("aw,wbq->abq", P, R)
    if not F.equal(pR, full_R):
        a, b, _ = _first_bad(F, pR, full_R)
        raise YDError(f"action does not descend (witness {A.labels[a]}, {A.labels[b]})")
    pC = F.einsum("aw,wxt->axt", P, C)
    if not F.equal(pC, full_C):
        a = _first_bad(F, pC, full_C)[0]
        raise YDError(f"coaction does not descend (witness {A.labels[a]})")
    return YDModule(A, R, C, name)


def coadjoint_quotient(incl: HopfMorphism) -> YDModule:
    """YD module on L = A / B^+A."""
    q = quotient_by_subalgebra(incl)
    A = incl.target
    return _descend(A, q.matrix, q.representatives, f"L({A.name}/{incl.source.name})")


def coadjoint_on_image(p: HopfMorphism) -> YDModule:
    """The same structure on the target of a surjective Hopf map p : A -> L."""
    A, F = p.source, p.source.field
    k = p.matrix.shape[1]
    if rank(F, p.matrix) != k:
        raise YDError("p is not surjective")
    reps = np.swapaxes(solve_many(F, np.swapaxes(p.matrix, 0, 1), F.eye(k)), 0, 1)
    return _descend(A, p.matrix, reps, f"coadjoint {p.target.name}")


def restriction_subspace(X: YDModule, incl: HopfMorphism):
    """Basis of X^(B) = {x : rho(x) in X (x) B} inside X."""
    A, F = X.base, X.field
    iB = rowspace(F, incl.matrix)
    comp = quotient_representatives(F, iB)
    proj = coordinates(F, np.concatenate([iB, comp], axis=0), F.eye(A.dim))[:, iB.shape[0]:]
    if proj.shape[1] == 0:
        return F.eye(X.dim)
    T = F.einsum("vwa,aq->vwq", X.coaction, proj).reshape(X.dim, -1, F.degree)
    return rowspace(F, left_nullspace(F, T))


def restrict(X: YDModule, incl: HopfMorphism) -> YDModule:
    """X^(B) as a YD module over B."""
    B, F = incl.source, X.field
    sub = restriction_subspace(X, incl)
    k = sub.shape[0]
    if k == 0:
        return YDModule(B, F.zeros((0, B.dim, 0)), F.zeros((0, 0, B.dim)), f"{X.name}^({B.name})")
    RB = F.einsum("ba,vaw->vbw", incl.matrix, X.action)
    moved = F.einsum("sv,vbw->sbw", sub, RB).reshape(-1, X.dim, F.degree)
    if rank(F, np.concatenate([sub, moved], axis=0)) != k:
        raise YDError("X^(B) is not B-stable")
    R = coordinates(F, sub, moved).reshape(k, B.dim, k, F.degree)
    # rho(x) = sum_beta z_beta (x) i(b_beta) with z_beta in X^(B)
    Cx = F.einsum("sv,vwa->swa", sub, X.coaction).reshape(-1, X.coaction.shape[2], F.degree)
    Z = coordinates(F, incl.matrix, Cx).reshape(k, X.dim, B.dim, F.degree)
    Zs = coordinates(F, sub, np.swapaxes(Z, 1, 2).reshape(-1, X.dim, F.degree))
    C = np.swapaxes(Zs.reshape(k, B.dim, k, F.degree), 1, 2)
    return YDModule(B, R, np.ascontiguousarray(C), f"{X.name}^({B.name})")


def cotensor_subspace(X: YDModule, incl: HopfMorphism):
    """X []_A B = ker(rho (x) id - id (x) Delta'), mapped into X by id (x) eps.

    Delta'(b) = i(b_(1)) (x) b_(2).  Independent of :func:`restrict`.
    """
    B, F = incl.source, X.field
    p, nb = X.dim, B.dim
    lhs = F.einsum("xwa,bc->xbwac", X.coaction, F.eye(nb))
    Dp = F.einsum("bjc,ja->bac", B.comult, incl.matrix)
    rhs = F.einsum("xw,bac->xbwac", F.eye(p), Dp)
    T = left_nullspace(F, F.sub(lhs, rhs).reshape(p * nb, -1, F.degree))
    if T.shape[0] == 0:
        return F.zeros((0, p))
    return rowspace(F, F.einsum("kxb,b->kx", T.reshape(-1, p, nb, F.degree), B.counit))


def induce(V: YDModule, incl: HopfMorphism) -> YDModule:
    """V (x)_B A: the quotient of V (x) A by span{v.b (x) a - v (x) ba}.

    Coaction v (x) a |-> v_(0) (x) a_(2) (x) S(a_(1)) v_(1) a_(3).
    """
    B, A, F = V.base, incl.target, V.field
    p, n = V.dim, A.dim
    left = F.einsum("vbw,ac->vbawc", V.action, F.eye(n))
    iba = F.einsum("bx,xay->bay", incl.matrix, A.mult)
    right = F.einsum("vw,bac->vbawc", F.eye(p), iba)
    rel = rowspace(F, F.sub(left, right).reshape(-1, p * n, F.degree))
    reps = quotient_representatives(F, rel)
    proj = coordinates(F, np.concatenate([rel, reps], axis=0), F.eye(p * n))[:, rel.shape[0]:]

    act = F.einsum("vw,axc->vaxwc", F.eye(p), A.mult).reshape(p * n, n, p * n, F.degree)
    Sm = F.einsum("pz,zyt->pyt", A.antipode, A.mult)  # S(b_p) b_y
    SiB = F.einsum("sry,pyt->psrt", iba, Sm)  # S(b_p) i(b_s) b_r
    G = F.einsum("apqr,psrt->aqst", A.comult2, SiB)
    coact = F.einsum("vus,aqst->vauqt", V.coaction, G).reshape(p * n, p * n, n, F.degree)

    act_p = F.einsum("axb,bm->axm", act, proj)
    coact_p = F.einsum("abt,bm->amt", coact, proj)
    R = F.einsum("la,axm->lxm", reps, act_p)
    C = F.einsum("la,amt->lmt", reps, coact_p)
    if not F.equal(F.einsum("al,lxm->axm", proj, R), act_p):
        raise YDError("induced action does not descend")
    if not F.equal(F.einsum("al,lmt->amt", proj, C), coact_p):
        raise YDError("induced coaction does not descend")
    return YDModule(A, R, C, f"{V.name}(x)_{B.name} {A.name}")


# -- gradings and characters ----------------------------------------------


def grading_components(p: HopfMorphism):
    """[(g, basis of A_g)] with A_g = {a : a_(1) (x) p(a_(2)) = a (x) g}.

    ``p`` maps onto a group algebra kG (``p.target.group`` set).  Raises if
    the components do not give a direct sum decomposition.
    """
    A, L, F = p.source, p.target, p.source.field
    G: Group = L.group
    if G is None:
        raise YDError("target of p is not a group algebra")
    T0 = F.einsum("axk,kq->axq", A.comult, p.matrix)
    out = []
    for g in range(G.order):
        delta = F.einsum("ax,q->axq", F.eye(A.dim), F.eye(L.dim)[g])
        M = F.sub(T0, delta).reshape(A.dim, -1, F.degree)
        out.append((G.labels[g], rowspace(F, left_nullspace(F, M))))
    total = np.concatenate([b for _, b in out], axis=0)
    if total.shape[0] != A.dim or rank(F, total) != A.dim:
        raise YDError(f"grading components do not form a direct sum (dims {[b.shape[0] for _, b in out]})")
    return out


def grading_report(p: HopfMorphism, comps) -> CheckReport:
    A, L, F = p.source, p.target, p.source.field
    G = L.group
    rep = CheckReport("grading")
    rep.add("direct sum", sum(b.shape[0] for _, b in comps) == A.dim)
    pos = {lab: k for k, lab in enumerate(G.labels)}
    ok_mult = True
    for (g, Ag) in comps:
        for (h, Ah) in comps:
            if Ag.shape[0] == 0 or Ah.shape[0] == 0:
                continue
            gh = G.labels[G.mul(pos[g], pos[h])]
            Agh = dict(comps)[gh]
            prods = A.span_products(Ag, Ah)
            if rank(F, np.concatenate([Agh, prods], axis=0)) != Agh.shape[0]:
                ok_mult = False
    rep.add("A_g A_h in A_gh", ok_mult)
    ok_p = True
    for g, Ag in comps:
        if Ag.shape[0] == 0:
            continue
        lhs = F.matmul(Ag, p.matrix)
        rhs = F.einsum("k,q->kq", F.einsum("ka,a->k", Ag, A.counit), F.eye(L.dim)[pos[g]])
        ok_p &= F.equal(lhs, rhs)
    rep.add("p(a) = eps(a) g on A_g", ok_p)
    return rep


def _value_key(F, vec):
    # 1 sorts first, so the trivial character leads
    one = F.equal(vec, F.scalar(1))
    if F.is_finite:
        return (not one, int(F.encode(vec[None])[0]))
    return (not one,) + tuple((abs(Fraction(c)), Fraction(c) < 0) for c in vec)


def group_characters(G: Group, F) -> list[np.ndarray]:
    """All homomorphisms G -> k^x as value arrays (|G|, d), canonically ordered."""
    roots = nth_roots_of_unity(F, G.exponent)
    gens = []
    span = [G.identity]
    for g in range(G.order):
        if g not in span:
            gens.append(g)
            span = G.subgroup_generated(gens)
    found = []
    for choice in np.ndindex(*([len(roots)] * len(gens))):
        val = {G.identity: F.element(F.scalar(1))}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            a = frontier.pop()
            for gi, r in zip(gens, choice):
                b = G.mul(a, gi)
                v = val[a] * roots[r]
                if b in val:
                    if val[b] != v:
                        ok = False
                        break
                else:
                    val[b] = v
                    frontier.append(b)
        if not ok:
            continue
        if all(val[G.mul(a, b)] == val[a] * val[b] for a in range(G.order) for b in range(G.order)):
            found.append(np.stack([val[g].vector() for g in range(G.order)]))
    found.sort(key=lambda arr: tuple(_value_key(F, row) for row in arr))
    return found


def fourier_transform(p: HopfMorphism) -> YDMorphism:
    """g |-> sum_psi psi(g) e_psi from coadjoint kG to the sum of k_{psi o p}."""
    A, L, F = p.source, p.target, p.source.field
    G: Group = L.group
    if G is None:
        raise YDError("target of p is not a group algebra")
    if not G.is_abelian:
        raise YDError("Fourier transform needs an abelian group")
    if F.char and G.order % F.char == 0:
        raise YDError("|Γ| = 0 in k")
    chars = group_characters(G, F)
    if len(chars) < G.order:
        raise YDError(f"insufficient roots of unity ({len(chars)} characters for |Γ| = {G.order})")
    source = coadjoint_on_image(p)
    summands = [k_psi(A, Character(A, F.matmul(p.matrix, c), f"psi{j}")) for j, c in enumerate(chars)]
    target = direct_sum(*summands, name="sum k_psi")
    M = np.ascontiguousarray(np.stack(chars, axis=1))  # M[g, j] = psi_j(g)
    f = YDMorphism(source, target, M, "fourier")
    rep = yd_morphism_check(M, source, target)
    if not rep.passed:
        bad = rep.failures[0]
        raise YDError(f"Fourier transform is not a YD morphism: {bad.name} fails at {bad.witness}")
    if rank(F, M) != G.order:
        raise YDError("Fourier matrix is singular")
    return f
