"""Exact linear algebra on field arrays.

Matrices are arrays of shape ``(m, n, d)`` over a :class:`FieldSpec`;
vectors are ``(n, d)``; lists of vectors (subspace bases) are stored as
the rows of a matrix.  Finite fields are reduced through the compiled
kernels in :mod:`.kernels`; characteristic 0 uses a vectorised object
path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fields import FieldError, FieldSpec
from .kernels import rref_modp, rref_table


def _rref_generic(F: FieldSpec, M):
    A = M.copy()
    m, n = A.shape[:2]
    piv = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(~F.iszero(A[r:, c]))
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[k, r], c:] = A[[r, k], c:]
        A[r, c:] = F.smul(F.inv(A[r, c]), A[r, c:])
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(~F.iszero(col))
        if rows.size:
            A[rows, c:] = F.sub(A[rows, c:], F.mul(col[rows][:, None, :], A[r, c:][None, :, :]))
        piv.append(c)
        r += 1
    return A, np.array(piv, dtype=np.int64)


def rref(F: FieldSpec, M, use_numba=None):
    """Reduced row echelon form and pivot columns (canonical)."""
    M = F.check(np.asarray(M))
    if M.ndim != 3:
        raise FieldError(f"expected a matrix of shape (m, n, d), got {M.shape}")
    if M.shape[0] == 0 or M.shape[1] == 0:
        return M.copy(), np.zeros(0, dtype=np.int64)
    if not F.is_finite:
        return _rref_generic(F, M)
    if F.degree == 1:
        R, piv = rref_modp(M[..., 0], F.p, use_numba)
        return R[..., None], piv
    R, piv = rref_table(F.encode(M), F.code_tables, use_numba)
    return F.decode(R), piv


def rank(F: FieldSpec, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: FieldSpec, M):
    """Basis (as rows) of {v : M v = 0}, one vector per free column, ascending."""
    m, n = M.shape[:2]
    R, piv = rref(F, M)
    free = [c for c in range(n) if c not in set(piv.tolist())]
    N = F.zeros((len(free), n))
    one = F.scalar(1)
    for k, f in enumerate(free):
        N[k, f] = one
        for i, pc in enumerate(piv):
            N[k, pc] = F.neg(R[i, f])
    return N


def left_nullspace(F: FieldSpec, M):
    """Basis (as rows) of {x : x M = 0}."""
    return nullspace(F, np.swapaxes(M, 0, 1))


def rank_nullspace(F: FieldSpec, M):
    """(rank, nullspace basis) for a dense array or a :class:`SparseMatrix`."""
    if isinstance(M, SparseMatrix):
        F = M.field
        M = M.to_dense()
    return rank(F, M), nullspace(F, M)


def solve(F: FieldSpec, M, b):
    """Some x with M x = b, or ``None`` when inconsistent.

    Free variables are set to zero, so the representative is the one
    determined by the echelon form with ascending pivots.
    """
    m, n = M.shape[:2]
    aug = np.concatenate([M, b.reshape(m, 1, F.degree)], axis=1)
    R, piv = rref(F, aug)
    if len(piv) and piv[-1] == n:
        return None
    x = F.zeros(n)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x


def solve_or_membership(F: FieldSpec, M, b):
    """Like :func:`solve` but returns the string ``"inconsistent"``."""
    x = solve(F, M, b)
    return "inconsistent" if x is None else x


def solve_many(F: FieldSpec, M, B):
    """Solve M X = B column by column; ``None`` if any column fails."""
    m, n = M.shape[:2]
    k = B.shape[1]
    aug = np.concatenate([M, B], axis=1)
    R, piv = rref(F, aug)
    if len(piv) and piv[-1] >= n:
        return None
    X = F.zeros((n, k))
    for i, pc in enumerate(piv):
        X[pc] = R[i, n:]
    return X


def inverse(F: FieldSpec, M):
    n = M.shape[0]
    if M.shape[1] != n:
        raise FieldError("inverse of a non-square matrix")
    aug = np.concatenate([M, F.eye(n)], axis=1)
    R, piv = rref(F, aug)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return R[:, n:]


def rowspace(F: FieldSpec, V):
    """Echelonised basis of the span of the rows of V."""
    if V.shape[0] == 0:
        return V.copy()
    R, piv = rref(F, V)
    return R[: len(piv)]


def independent_rows(F: FieldSpec, V) -> list[int]:
    """Indices of the greedy (first-come) maximal independent subset of rows."""
    if V.shape[0] == 0:
        return []
    _, piv = rref(F, np.swapaxes(V, 0, 1))
    return piv.tolist()


def subspace_sum(F, U, W):
    return rowspace(F, np.concatenate([U, W], axis=0))


def subspace_intersection(F, U, W):
    U = rowspace(F, U)
    W = rowspace(F, W)
    if U.shape[0] == 0 or W.shape[0] == 0:
        return U[:0]
    coeffs = left_nullspace(F, np.concatenate([U, W], axis=0))
    if coeffs.shape[0] == 0:
        return U[:0]
    return rowspace(F, F.matmul(coeffs[:, : U.shape[0]], U))


def quotient_representatives(F, U, W=None):
    """Representatives of a basis of W / U (W defaults to the whole space).

    With W the whole space these are the standard basis vectors at the
    non-pivot columns of U's echelon form.  Otherwise they are the rows of
    W's echelon basis that are independent modulo U, in order.
    """
    U = rowspace(F, U)
    n = U.shape[1]
    if W is None:
        piv = set(rref(F, U)[1].tolist()) if U.shape[0] else set()
        free = [c for c in range(n) if c not in piv]
        return F.eye(n)[free]
    W = rowspace(F, W)
    idx = independent_rows(F, np.concatenate([U, W], axis=0))
    picked = [i - U.shape[0] for i in idx if i >= U.shape[0]]
    return W[picked]


def subspace_ops(F, U, W):
    """(intersection, sum, representatives of (U + W) / U)."""
    return subspace_intersection(F, U, W), subspace_sum(F, U, W), quotient_representatives(F, U, subspace_sum(F, U, W))


def contains(F, U, W) -> bool:
    """Is every row of W in the row space of U?"""
    if W.shape[0] == 0:
        return True
    if U.shape[0] == 0:
        return F.is_zero_array(W)
    return rank(F, np.concatenate([U, W], axis=0)) == rank(F, U)


def same_space(F, U, W) -> bool:
    return F.equal(rowspace(F, U), rowspace(F, W))


def coordinates(F, basis, vectors):
    """Coordinates C with C @ basis = vectors (basis rows independent)."""
    X = solve_many(F, np.swapaxes(basis, 0, 1), np.swapaxes(vectors, 0, 1))
    if X is None:
        raise FieldError("vector not in the span of the basis")
    return np.swapaxes(X, 0, 1)


@dataclass(frozen=True)
class SparseMatrix:
    """Coordinate-list matrix: (row, col) -> nonzero entry, no duplicates."""

    field: FieldSpec
    nrows: int
    ncols: int
    entries: tuple = field(default=())

    def __post_init__(self):
        seen = set()
        clean = []
        for i, j, v in self.entries:
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
            if (i, j) in seen:
                raise ValueError(f"duplicate entry at ({i}, {j})")
            seen.add((i, j))
            v = self.field(v)
            if not v.is_zero():
                clean.append((int(i), int(j), v))
        object.__setattr__(self, "entries", tuple(sorted(clean, key=lambda t: (t[0], t[1]))))

    @classmethod
    def from_dense(cls, F: FieldSpec, M) -> "SparseMatrix":
        nz = np.argwhere(~F.iszero(M))
        return cls(F, M.shape[0], M.shape[1], tuple((i, j, F.element(M[i, j])) for i, j in nz))

    def to_dense(self):
        out = self.field.zeros((self.nrows, self.ncols))
        for i, j, v in self.entries:
            out[i, j] = v.vector()
        return out

    @property
    def nnz(self) -> int:
        return len(self.entries)
