"""Primitive idempotents, one per isomorphism type of simple module.

The semisimple quotient S = D/rad is split by idempotents of commutative
subalgebras.  Over F_q the Frobenius-fixed part of a commutative
semisimple algebra is a product of copies of F_q, so its elements have all
eigenvalues in F_q and Lagrange interpolation splits them using root
enumeration only.  Idempotents are lifted to D by e <- 3e^2 - 2e^3.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exactla import left_nullspace, rank, rowspace
from ..exactla.fields import _rational_roots
from ..hopfcore.hopf import FinDimAlgebra
from .radical import quotient_algebra, radical


class SplittingError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class SimpleType:
    """A primitive idempotent e of D; ``end_dim`` = dim eSe (S = D/rad)."""

    idempotent: np.ndarray
    end_dim: int
    simple_dim: int
    label: str


def _corner(S: FinDimAlgebra, e, f=None):
    """Basis of e S f."""
    F = S.field
    f = e if f is None else f
    X = S.span_products(e[None], F.eye(S.dim))
    return rowspace(F, S.span_products(X, f[None]))


def _powers_basis(S, e, x):
    """Basis of the unital subalgebra k[x] (unit e), and min-poly coefficients."""
    F = S.field
    pows = [e]
    while True:
        nxt = S.prod(pows[-1], x)
        M = np.stack(pows + [nxt])
        ker = left_nullspace(F, M)
        if ker.shape[0]:
            c = ker[0]
            lead = c[-1]
            c = F.smul(F.inv(lead), c)
            return np.stack(pows), [F.element(v) for v in c]
        pows.append(nxt)


def _is_commutative(S, V):
    P = S.field.einsum("ai,ijk,bj->abk", V, S.mult, V)
    return S.field.equal(P, np.swapaxes(P, 0, 1))


def _frobenius_fixed(S, e, B):
    """Basis of {y in span B : y^q = y} (B spans a commutative subalgebra)."""
    F = S.field
    q = F.size
    rows = []
    for b in B:
        acc, base, k = e, b, q
        while k:
            if k & 1:
                acc = S.prod(acc, base)
            base = S.prod(base, base)
            k >>= 1
        rows.append(F.sub(acc, b))
    ker = left_nullspace(F, np.stack(rows))
    if ker.shape[0] == 0:
        return ker
    return rowspace(F, F.matmul(ker, B))


def _eigenvalues(F, coeffs):
    """Roots in F of the monic polynomial sum coeffs[k] t^k."""
    if F.is_finite:
        out = []
        for c in F.elements():
            acc = F.element(F.scalar(0))
            for a in reversed(coeffs):
                acc = acc * c + a
            if acc.is_zero():
                out.append(c)
        return out
    rat = []
    for a in coeffs:
        v = a.vector()
        if any(x != 0 for x in v[1:]):
            return []
        rat.append(v[0])
    return [F(r) for r in _rational_roots(rat)]


def _lagrange_split(S, e, y, roots):
    F = S.field
    out = []
    for c in roots:
        acc = e
        for c2 in roots:
            if c2 == c:
                continue
            factor = F.sub(y, F.smul(c2.vector(), e))
            acc = F.smul((c - c2).inv().vector(), S.prod(acc, factor))
        out.append(acc)
    return out


def _try_split(S, e, x):
    """Orthogonal idempotents summing to e from the subalgebra k[x], or None."""
    F = S.field
    P, coeffs = _powers_basis(S, e, x)
    if P.shape[0] == 1:
        return None
    if F.is_finite:
        Bq = _frobenius_fixed(S, e, P)
        if Bq.shape[0] < 2:
            return None
        # any element of the fixed part outside k.e separates components
        for y in Bq:
            if rank(F, np.stack([e, y])) == 2:
                break
        _, coeffs = _powers_basis(S, e, y)
    else:
        y = x
    roots = _eigenvalues(F, coeffs)
    if len(roots) < 2 or len(roots) != len(coeffs) - 1:
        return None
    return _lagrange_split(S, e, y, roots)


def _split_primitive(S: FinDimAlgebra, rng, max_tries: int = 200):
    F = S.field
    work = [S.unit]
    done = []
    while work:
        e = work.pop()
        E = _corner(S, e)
        if E.shape[0] == 1:
            done.append((e, 1))
            continue
        comm = _is_commutative(S, E)
        parts = None
        if comm and F.is_finite:
            # the corner itself: split by its Frobenius-fixed part
            Bq = _frobenius_fixed(S, e, E)
            if Bq.shape[0] == 1:
                done.append((e, E.shape[0]))
                continue
            for y in Bq:
                if rank(F, np.stack([e, y])) == 2:
                    parts = _try_split(S, e, y)
                    break
        else:
            for _ in range(max_tries if F.is_finite else min(max_tries, 12)):
                coeffs = F.random(E.shape[0], rng)
                x = F.einsum("k,kv->v", coeffs, E)
                parts = _try_split(S, e, x)
                if parts:
                    break
        if not parts:
            if comm and not F.is_finite:
                raise SplittingError(f"cannot split a {E.shape[0]}-dimensional corner over {F}")
            raise SplittingError("random splitting of a simple corner failed")
        work.extend(parts)
    return done


def lift_idempotent(D: FinDimAlgebra, e):
    F = D.field
    for _ in range(D.dim + 2):
        e2 = D.prod(e, e)
        if F.equal(e2, e):
            return e
        e = F.sub(F.smul(F.scalar(3), e2), F.smul(F.scalar(2), D.prod(e2, e)))
    raise SplittingError("idempotent lifting did not converge")


def simple_types(D: FinDimAlgebra, rad=None, seed: int = 0) -> list[SimpleType]:
    """One primitive idempotent of D per isomorphism type of simple module.

    The splitting is seeded, so the result is deterministic.
    """
    F = D.field
    rad = radical(D) if rad is None else rad
    S, proj, reps = quotient_algebra(D, rad)
    rng = np.random.default_rng(seed)
    prim = _split_primitive(S, rng)
    types = []
    for e, end in prim:
        if any(not F.is_zero_array(S.span_products(S.span_products(e[None], F.eye(S.dim)), t[0][None])) for t in types):
            continue
        types.append((e, end))
    out = []
    for k, (e, end) in enumerate(types):
        eD = lift_idempotent(D, F.einsum("a,ai->i", e, reps))
        out.append(SimpleType(eD, end, _simple_dim(S, e), f"S{k}"))
    out.sort(key=lambda t: tuple(F.encode(t.idempotent).tolist()) if F.is_finite else str(t.idempotent.tolist()))
    return [SimpleType(t.idempotent, t.end_dim, t.simple_dim, f"S{k}") for k, t in enumerate(out)]


def _simple_dim(S, e):
    """dim of the simple right module eS (e primitive in semisimple S)."""
    F = S.field
    return rowspace(F, S.span_products(e[None], F.eye(S.dim))).shape[0]


def projective_basis(D: FinDimAlgebra, e):
    """Basis of the right ideal eD."""
    F = D.field
    if F.equal(e, D.unit):
        return F.eye(D.dim)
    return rowspace(F, D.span_products(e[None], F.eye(D.dim)))

