"""Row-reduction kernels over finite fields.

Two interchangeable implementations of each kernel: a numba one (scalar
loops) and a vectorised numpy one.  ``USE_NUMBA`` from :mod:`hopfcohom._accel`
picks the default; both are importable for the benchmark and for the
equivalence tests.

Input matrices are 2-D ``int64`` arrays of element codes (prime fields:
residues mod p; extension fields: codes 0..q-1 with lookup tables).
Output is the reduced row echelon form plus the pivot columns.  Pivots
are chosen as the first nonzero entry scanning rows top-down, columns
left to right, so the output is canonical.
"""

import numpy as np

from .._accel import USE_NUMBA, njit


@njit
def _modinv(a, p):
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit
def rref_modp_numba(M, p):
    A = M.copy()
    m, n = A.shape
    piv = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        k = -1
        for i in range(r, m):
            if A[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(c, n):
                tmp = A[k, j]
                A[k, j] = A[r, j]
                A[r, j] = tmp
        inv = _modinv(A[r, c], p)
        for j in range(c, n):
            A[r, j] = (A[r, j] * inv) % p
        for i in range(m):
            if i != r:
                f = A[i, c]
                if f != 0:
                    for j in range(c, n):
                        if A[r, j] != 0:
                            A[i, j] = (A[i, j] - f * A[r, j]) % p
        piv[r] = c
        r += 1
    return A, piv[:r].copy()


@njit
def rref_table_numba(M, add, mul, neg, inv):
    A = M.copy()
    m, n = A.shape
    piv = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        k = -1
        for i in range(r, m):
            if A[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(c, n):
                tmp = A[k, j]
                A[k, j] = A[r, j]
                A[r, j] = tmp
        s = inv[A[r, c]]
        for j in range(c, n):
            A[r, j] = mul[s, A[r, j]]
        for i in range(m):
            if i != r:
                f = A[i, c]
                if f != 0:
                    nf = neg[f]
                    for j in range(c, n):
                        if A[r, j] != 0:
                            A[i, j] = add[A[i, j], mul[nf, A[r, j]]]
        piv[r] = c
        r += 1
    return A, piv[:r].copy()


def rref_modp_numpy(M, p):
    A = np.array(M, dtype=np.int64, copy=True)
    m, n = A.shape
    piv = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[k, r], c:] = A[[r, k], c:]
        A[r, c:] = (A[r, c:] * pow(int(A[r, c]), -1, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows, c:] = (A[rows, c:] - np.outer(col[rows], A[r, c:])) % p
        piv.append(c)
        r += 1
    return A, np.array(piv, dtype=np.int64)


def rref_table_numpy(M, add, mul, neg, inv):
    A = np.array(M, dtype=np.int64, copy=True)
    m, n = A.shape
    piv = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[k, r], c:] = A[[r, k], c:]
        A[r, c:] = mul[inv[A[r, c]], A[r, c:]]
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            prod = mul[neg[col[rows]][:, None], A[r, c:][None, :]]
            A[rows, c:] = add[A[rows, c:], prod]
        piv.append(c)
        r += 1
    return A, np.array(piv, dtype=np.int64)


def rref_modp(M, p, use_numba=None):
    if use_numba is None:
        use_numba = USE_NUMBA
    M = np.ascontiguousarray(M, dtype=np.int64)
    if M.size == 0:
        return M.copy(), np.zeros(0, dtype=np.int64)
    if use_numba:
        return rref_modp_numba(M, np.int64(p))
    return rref_modp_numpy(M, p)


def rref_table(M, tables, use_numba=None):
    if use_numba is None:
        use_numba = USE_NUMBA
    M = np.ascontiguousarray(M, dtype=np.int64)
    if M.size == 0:
        return M.copy(), np.zeros(0, dtype=np.int64)
    if use_numba:
        return rref_table_numba(M, *tables)
    return rref_table_numpy(M, *tables)
