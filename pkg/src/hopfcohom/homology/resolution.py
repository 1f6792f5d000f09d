"""Minimal projective resolutions and Ext dimensions.

P_n is a direct sum of indecomposable projectives e D, one per generator,
so ``ranks[n]`` counts indecomposable summands (for a local algebra these
are free ranks).  Each cover is built on the top K / K rad: generators are
taken from K e for the primitive idempotents e, one per simple summand of
the top.  When D is semisimple every module is projective and the
resolution is M itself.

Elements of P_n live in D^r (row vectors of length r * dim D).  With
generators w_j of P_{n+1} mapping to (y_ji)_i in D^{r_n}, the cochain map
Hom(P_n, N) -> Hom(P_{n+1}, N) is

    (n_i in N e_i)_i |-> (sum_i n_i . y_ji)_j
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..checks import CheckReport
from ..exactla import contains, left_nullspace, rank, rowspace
from ..hopfcore.hopf import FinDimAlgebra
from .idempotents import projective_basis, simple_types
from ..hopfcore.modules import RightModule
from .radical import radical

MAX_RANK = 4096
FREE = -1  # generator type of a free summand D


class ResolutionError(RuntimeError):
    pass


@dataclass(eq=False)
class AlgebraData:
    """Radical, simple types and projective ideals of D, computed once."""

    algebra: FinDimAlgebra
    rad: np.ndarray
    types: list
    proj: dict = field(default_factory=dict)

    @property
    def semisimple(self) -> bool:
        return self.rad.shape[0] == 0

    def idempotent(self, t: int):
        return self.algebra.unit if t == FREE else self.types[t].idempotent

    def projective(self, t: int):
        if t not in self.proj:
            D = self.algebra
            self.proj[t] = D.field.eye(D.dim) if t == FREE else projective_basis(D, self.idempotent(t))
        return self.proj[t]


_CACHE: dict = {}


def algebra_data(D: FinDimAlgebra, seed: int = 0) -> AlgebraData:
    hit = _CACHE.get((id(D), seed))
    if hit is not None and hit.algebra is D:
        return hit
    rad = radical(D)
    types = simple_types(D, rad, seed) if rad.shape[0] else []
    data = AlgebraData(D, rad, types)
    _CACHE[(id(D), seed)] = data
    return data


class _ModuleActor:
    def __init__(self, M: RightModule):
        self.F, self.action, self.dim = M.field, M.action, M.dim

    def __call__(self, V, X):
        """All v . x (v in rows of V, x in rows of X), v-major."""
        F = self.F
        mats = F.einsum("ka,avw->kvw", X, self.action)
        return F.einsum("vx,kxy->vky", V, mats).reshape(-1, self.dim, F.degree)


class _FreeActor:
    def __init__(self, D: FinDimAlgebra, r: int):
        self.F, self.D, self.r = D.field, D, r
        self.dim = r * D.dim

    def __call__(self, V, X):
        F, n = self.F, self.D.dim
        mats = F.einsum("ka,axy->kxy", X, self.D.right_regular)
        Vb = V.reshape(V.shape[0], self.r, n, F.degree)
        return F.einsum("vrx,kxy->vkry", Vb, mats).reshape(-1, self.dim, F.degree)


@dataclass(eq=False)
class Stage:
    """Generators of P_n: their types and images in the previous term."""

    types: list
    images: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.types)


@dataclass(eq=False)
class FreeResolution:
    """P_length -> ... -> P_0 -> M with cover data for every stage."""

    module: RightModule
    data: AlgebraData
    stages: list
    minimal: bool
    checks: CheckReport

    @property
    def ranks(self) -> list[int]:
        return [s.rank for s in self.stages]

    @property
    def length(self) -> int:
        return len(self.stages) - 1

    @property
    def semisimple(self) -> bool:
        return self.data.semisimple and self.minimal

    @property
    def augmentation(self):
        """Images in M of the generators of P_0."""
        return self.stages[0].images

    def differential(self, n: int):
        """d_n : P_n -> P_{n-1} as an (r_n, r_{n-1}) matrix of elements of D."""
        F = self.data.algebra.field
        st, prev = self.stages[n], self.stages[n - 1]
        if st.rank == 0 or prev.rank == 0:
            return F.zeros((st.rank, prev.rank, self.data.algebra.dim))
        return st.images.reshape(st.rank, prev.rank, self.data.algebra.dim, F.degree)


def _cover(F, data: AlgebraData, K, act, minimal: bool):
    """Generators (type, vector) whose cyclic submodules together span K."""
    D = data.algebra
    if not minimal:
        return [(FREE, v) for v in K]
    U = rowspace(F, act(K, data.rad)) if data.rad.shape[0] else K[:0]
    gens = []
    for t in range(len(data.types)):
        if U.shape[0] == K.shape[0]:
            break
        for w in rowspace(F, act(K, data.idempotent(t)[None])):
            if U.shape[0] == K.shape[0]:
                break
            if U.shape[0] and contains(F, U, w[None]):
                continue
            gens.append((t, w))
            U = rowspace(F, np.concatenate([U, act(w[None], F.eye(D.dim))], axis=0))
    if U.shape[0] != K.shape[0]:
        raise ResolutionError("cover does not reach the module (top computation failed)")
    return gens


def minimal_free_resolution(
    D: FinDimAlgebra, M: RightModule, max_degree: int, *, minimal: bool = True, max_rank: int | None = None, seed: int = 0
) -> FreeResolution:
    """Resolution P_max_degree -> ... -> P_0 -> M.

    ``minimal=False`` takes every basis vector of each kernel as a free
    generator: a valid but much larger resolution, for cross-checks.
    """
    if M.algebra is not D:
        raise ResolutionError("module is not over the given algebra")
    length = max_degree
    ceiling = MAX_RANK if max_rank is None else max_rank  # read late so callers can lower it
    F = D.field
    data = algebra_data(D, seed)
    rep = CheckReport("resolution")
    if minimal and data.semisimple:
        rep.add("M projective (D semisimple)", True)
        stages = [Stage(["M"], F.eye(M.dim))] if M.dim else [Stage([], F.zeros((0, 0)))]
        stages += [Stage([], F.zeros((0, 0))) for _ in range(length)]
        return FreeResolution(M, data, stages, True, rep)
    stages = []
    K = F.eye(M.dim)
    act = _ModuleActor(M)
    for n in range(length + 1):
        if K.shape[0] == 0:
            stages.append(Stage([], F.zeros((0, 0))))
            continue
        gens = _cover(F, data, K, act, minimal)
        r = len(gens)
        if r > ceiling:
            raise ResolutionError(f"rank {r} in degree {n} exceeds the ceiling {ceiling}")
        images = np.stack([w for _, w in gens])
        stages.append(Stage([t for t, _ in gens], images))
        # P_n -> previous term: basis vector e_j x of block j |-> w_j . (e_j x)
        rows, emb = [], []
        for j, (t, w) in enumerate(gens):
            B = data.projective(t)
            rows.append(act(w[None], B))
            Z = F.zeros((B.shape[0], r, D.dim))
            Z[:, j] = B
            emb.append(Z.reshape(B.shape[0], r * D.dim, F.degree))
        Phi = np.concatenate(rows, axis=0)
        Pbasis = np.concatenate(emb, axis=0)
        rk = rank(F, Phi)
        rep.add(f"P_{n} onto K_{n - 1}" if n else "P_0 onto M", rk == K.shape[0], f"rank {rk}, dim {K.shape[0]}")
        ker = left_nullspace(F, Phi)
        K = rowspace(F, F.matmul(ker, Pbasis)) if ker.shape[0] else F.zeros((0, r * D.dim))
        act = _FreeActor(D, r)
    res = FreeResolution(M, data, stages, minimal, rep)
    _check_dd(res)
    return res


def _apply_differential(res: FreeResolution, n: int, V):
    """Image under P_n -> P_{n-1} (or M) of rows V in D^{r_n}."""
    F = res.data.algebra.field
    D = res.data.algebra
    st = res.stages[n]
    prev = _ModuleActor(res.module) if n == 0 else _FreeActor(D, res.stages[n - 1].rank)
    Vb = V.reshape(V.shape[0], st.rank, D.dim, F.degree)
    out = F.zeros((V.shape[0], prev.dim))
    for j in range(st.rank):
        # w_j . v_j for each row v
        part = prev(st.images[j][None], Vb[:, j])
        out = F.add(out, part)
    return out


def _check_dd(res: FreeResolution):
    F = res.data.algebra.field
    for n in range(1, res.length + 1):
        st = res.stages[n]
        if st.rank == 0 or res.stages[n - 1].rank == 0:
            continue
        img = _apply_differential(res, n - 1, st.images)
        res.checks.add(f"d_{n - 1} d_{n} = 0", F.is_zero_array(img))


def hom_complex_ranks(res: FreeResolution, N: RightModule):
    """dims of Hom(P_n, N) and ranks of the cochain maps delta_n."""
    F = N.field
    data = res.data
    rho_e = {}

    def Ne(t):
        if t not in rho_e:
            rho_e[t] = rowspace(F, N.rho(data.idempotent(t)))
        return rho_e[t]

    dims = [sum(Ne(t).shape[0] for t in st.types) for st in res.stages]
    ranks = [0]
    act = _ModuleActor(N)
    n_blocks = res.data.algebra.dim
    for n in range(1, len(res.stages)):
        src, tgt = res.stages[n - 1], res.stages[n]
        if src.rank == 0 or tgt.rank == 0:
            ranks.append(0)
            continue
        Y = tgt.images.reshape(tgt.rank, src.rank, n_blocks, F.degree)
        rows = []
        for i, t in enumerate(src.types):
            U = Ne(t)
            if U.shape[0] == 0:
                continue
            # component j of the image of u in N e_i is u . y_ji
            comp = act(U, Y[:, i])  # (|U| * r_tgt, dim N)
            rows.append(comp.reshape(U.shape[0], tgt.rank * N.dim, F.degree))
        ranks.append(rank(F, np.concatenate(rows, axis=0)) if rows else 0)
    return dims, ranks


def ext_dims(D: FinDimAlgebra, M: RightModule, N: RightModule, max_degree: int = 4, *, minimal: bool = True) -> list[int]:
    """dim Ext^n_D(M, N) for n = 0 .. max_degree."""
    return ext_dims_from(minimal_free_resolution(D, M, max_degree + 1, minimal=minimal), N, max_degree)


def ext_dims_from(res: FreeResolution, N: RightModule, max_degree: int | None = None) -> list[int]:
    """dim Ext^n(M, N) from an existing resolution (needs P_{max_degree + 1})."""
    top = res.length - 1 if max_degree is None else max_degree
    if res.semisimple:
        dims = [_hom_dim(res.module, N)] + [0] * top
        return dims[: top + 1]
    if top + 1 > res.length:
        raise ResolutionError(f"resolution too short for degree {top}")
    dims, ranks = hom_complex_ranks(res, N)
    return [dims[n] - ranks[n + 1] - ranks[n] for n in range(top + 1)]


def _hom_dim(M: RightModule, N: RightModule) -> int:
    """dim Hom_D(M, N): f with rho_M(b) f = f rho_N(b) for every basis b."""
    F = M.field
    m, k = M.dim, N.dim
    if m == 0 or k == 0:
        return 0
    # f as an m x k matrix, flattened row-major; equations per basis element
    I_m, I_k = F.eye(m), F.eye(k)
    eqs = []
    for a in range(M.algebra.dim):
        A, B = M.action[a], N.action[a]
        # (A f)[v, w] - (f B)[v, w]; coefficient of f[x, y]
        L = F.sub(F.einsum("vx,yw->xyvw", A, I_k), F.einsum("vx,yw->xyvw", I_m, B))
        eqs.append(L.reshape(m * k, m * k, F.degree))
    E = np.concatenate(eqs, axis=1)
    return m * k - rank(F, E)


def hom_dim(M: RightModule, N: RightModule) -> int:
    return _hom_dim(M, N)
