"""Jacobson radical of a finite-dimensional algebra.

Characteristic 0: kernel of the trace form (x, y) -> Tr(L_xy).

Characteristic p: the iterated trace-map algorithm over the prime field
(restriction of scalars handles F_q = F_p[x]/(f)).  With I_{-1} = D and
g_i(a) = Tr(lift(L_a)^(p^i)) / p^i mod p,

    I_i = {a in I_{i-1} : g_i(a b) = 0 for all b in D}

and rad D = I_l for p^l <= dim.  g_i is F_p-linear on I_{i-1}, so it is
evaluated on a basis of I_{i-1} only and extended by coordinates.
"""

from __future__ import annotations

import numpy as np

from ..exactla import FieldSpec, coordinates, left_nullspace, quotient_representatives, rowspace
from ..exactla.fields import FieldError
from ..hopfcore.hopf import FinDimAlgebra


class RadicalError(RuntimeError):
    pass


def trace_vector(D: FinDimAlgebra):
    """t[k] = Tr(L_{b_k})."""
    return D.field.einsum("kab,ab->k", D.mult, D.field.eye(D.dim))


def _trace_form_kernel(D: FinDimAlgebra):
    F = D.field
    t = trace_vector(D)
    T = F.einsum("xyk,k->xy", D.mult, t)
    return rowspace(F, left_nullspace(F, T))


def restrict_scalars(D: FinDimAlgebra) -> np.ndarray:
    """Structure constants over F_p of an F_{p^d}-algebra.

    F_p-basis element ``i * d + s`` is b_i x^s.
    """
    F = D.field
    n, d = D.dim, F.degree
    if d == 1:
        return D.mult[..., 0].astype(np.int64)
    # (b_i x^s)(b_j x^t) = sum_k m[i,j,k] x^s x^t, and x^s x^t = T[s, t]
    T = F.mult_table.astype(np.int64)
    shape = (n, d, n, d, n, d)
    c = np.broadcast_to(D.mult[:, None, :, None, :, :], shape)
    st = np.broadcast_to(T[None, :, None, :, None, :], shape)
    prod = F.mul(c, st)  # prod[i, s, j, t, k] = coords of the b_k coefficient
    return np.ascontiguousarray(prod.reshape(n * d, n * d, n * d))


def _from_prime_vectors(F: FieldSpec, W, n):
    return W.reshape(W.shape[0], n, F.degree).astype(np.int64)


def _radical_char_p(D: FinDimAlgebra):
    F = D.field
    p = F.p
    Fp = FieldSpec.prime(p)
    m = restrict_scalars(D)
    N = m.shape[0]
    # left regular matrices over Z: L[a] maps b_x to b_a b_x
    L = m  # L[a, x, k]

    I = np.eye(N, dtype=np.int64)  # basis of I_{-1} as rows (over F_p)
    i = 0
    while p**i <= N and I.shape[0]:
        mod = p ** (i + 1)
        # g_i on each basis vector of the current ideal
        g = np.zeros(I.shape[0], dtype=np.int64)
        for r, a in enumerate(I):
            La = np.einsum("a,axk->xk", a, L) % p
            P = _matpow_mod(La, p**i, mod)
            tr = int(np.trace(P)) % mod
            if tr % (p**i):
                raise RadicalError("trace not divisible; algebra input is inconsistent")
            g[r] = (tr // p**i) % p
        # phi(a b) for a in basis of I, b in basis of D, via coordinates in I
        prods = np.einsum("ai,ijk->ajk", I, m) % p  # (dimI, N, N)
        C = coordinates(Fp, I[..., None], prods.reshape(-1, N)[..., None])[..., 0]
        vals = (C @ g) % p  # phi(a_r b_s)
        M = vals.reshape(I.shape[0], N)  # rows: a_r, cols: b_s
        ker = left_nullspace(Fp, M[..., None])[..., 0]
        I = rowspace(Fp, ((ker @ I) % p)[..., None])[..., 0] if ker.shape[0] else I[:0]
        i += 1
    if F.degree == 1:
        return I[..., None]
    V = _from_prime_vectors(F, I, D.dim)
    return rowspace(F, V) if V.shape[0] else F.zeros((0, D.dim))


def _matpow_mod(A, e, mod):
    result = np.eye(A.shape[0], dtype=np.int64)
    base = A % mod
    while e:
        if e & 1:
            result = (result @ base) % mod
        base = (base @ base) % mod
        e >>= 1
    return result


def is_nilpotent(D: FinDimAlgebra, I) -> bool:
    F = D.field
    cur = I
    for _ in range(D.dim + 1):
        if cur.shape[0] == 0:
            return True
        nxt = rowspace(F, D.span_products(cur, I))
        if nxt.shape[0] == cur.shape[0]:
            return False
        cur = nxt
    return cur.shape[0] == 0


def quotient_algebra(D: FinDimAlgebra, ideal):
    """D / ideal on representative basis; returns (S, projection, reps)."""
    F = D.field
    reps = quotient_representatives(F, ideal)
    basis = np.concatenate([ideal, reps], axis=0)
    coords = coordinates(F, basis, F.eye(D.dim))
    proj = np.ascontiguousarray(coords[:, ideal.shape[0]:])
    mult = F.einsum("ai,ijk,bj->abk", reps, D.mult, reps)
    mult = F.einsum("abk,kc->abc", mult, proj)
    unit = F.einsum("i,ic->c", D.unit, proj)
    S = FinDimAlgebra(F, mult, unit, tuple(f"s{i}" for i in range(reps.shape[0])), f"{D.name}/rad")
    return S, proj, reps


def radical(D: FinDimAlgebra, verify: bool = True):
    """Basis (rows) of the Jacobson radical of D.

    With ``verify`` the result is checked to be a nilpotent ideal with
    semisimple quotient; a failure raises :class:`RadicalError`.
    """
    F = D.field
    if F.char == 0:
        R = _trace_form_kernel(D)
    elif F.is_finite:
        R = _radical_char_p(D)
    else:  # pragma: no cover - no other field kinds exist
        raise FieldError(f"radical: unsupported field {F}")
    if R.shape[0] == 0:
        R = F.zeros((0, D.dim))
    if verify:
        if not is_nilpotent(D, R):
            raise RadicalError("computed radical is not nilpotent")
        if R.shape[0]:
            S, _, _ = quotient_algebra(D, R)
            if radical(S, verify=False).shape[0]:
                raise RadicalError("quotient by the computed radical is not semisimple")
    return R
