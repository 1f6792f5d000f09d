"""Gerstenhaber-Schack and bialgebra cohomology as Ext over the double."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import dataclass, field

import numpy as np

from ..checks import CheckReport
from ..exactla import FieldSpec, rank
from ..hopfcore.hopf import FinDimAlgebra, FinDimHopf, HopfMorphism, dual_hopf
from ..hopfcore.sequences import QuotientMap, cocentral_check, verify_exact_sequence
from ..ydmod import (
    Character,
    YDModule,
    coadjoint_on_image,
    coadjoint_quotient,
    double_of,
    dual_yd,
    group_characters,
    k_psi,
    restrict,
    tensor_yd,
    trivial_yd,
    yd_check,
    yd_to_double_module,
)
from .radical import radical
from .resolution import ext_dims_from, minimal_free_resolution

DEFAULT_MAX_DEGREE = 4


def algebra_hash(A: FinDimAlgebra) -> str:
    h = hashlib.sha256()
    h.update(str(A.field).encode())
    for t in ("mult", "unit", "comult", "counit", "antipode"):
        arr = getattr(A, t, None)
        if arr is not None:
            h.update(t.encode())
            h.update(repr(arr.shape).encode())
            h.update(",".join(str(x) for x in arr.ravel()).encode())
    return h.hexdigest()[:16]


@dataclass
class CohomologyTable:
    """dim H^p for p = 0 .. max_degree."""

    coefficient: str
    dims: list
    field: str
    algebra: str = ""
    algebra_hash: str = ""
    side: str = ""

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise ValueError("negative cohomology dimension")

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def rows(self):
        return [(p, d) for p, d in enumerate(self.dims)]

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "algebra_hash": self.algebra_hash,
            "field": self.field,
            "coefficient": self.coefficient,
            "max_degree": self.max_degree,
            "dims": list(self.dims),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        head = f"{self.algebra or 'A'} over {self.field}, coefficients {self.coefficient}"
        lines = [head, f"{'degree':>6}  {'dim':>4}"]
        lines += [f"{p:>6}  {d:>4}" for p, d in self.rows()]
        return "\n".join(lines)

    def to_csv(self, task: str = "gs") -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["task", "side", "degree", "dim"])
        for p, d in self.rows():
            w.writerow([task, self.side, p, d])
        return buf.getvalue()


_RES_CACHE: dict = {}


def _trivial_resolution(A: FinDimHopf, length: int):
    D = double_of(A)
    key = (id(D), length)
    hit = _RES_CACHE.get(key)
    if hit is not None and hit[0] is D:
        return hit[1]
    k = yd_to_double_module(trivial_yd(A), D)
    res = minimal_free_resolution(D, k, length)
    if not res.checks.passed:
        raise RuntimeError(f"resolution failed its exactness checks:\n{res.checks}")
    _RES_CACHE[key] = (D, res)
    return res


def gs_cohomology(A: FinDimHopf, V: YDModule, max_degree: int = DEFAULT_MAX_DEGREE) -> CohomologyTable:
    """dims of Ext^*_{YD}(k, V), computed over the double of A."""
    if V.base is not A:
        raise ValueError("coefficient module is not over the given Hopf algebra")
    res = _trivial_resolution(A, max_degree + 1)
    N = yd_to_double_module(V, res.data.algebra)
    dims = ext_dims_from(res, N, max_degree)
    return CohomologyTable(V.name or "V", dims, str(A.field), A.name, algebra_hash(A))


def bialgebra_cohomology(A: FinDimHopf, max_degree: int = DEFAULT_MAX_DEGREE) -> CohomologyTable:
    t = gs_cohomology(A, trivial_yd(A), max_degree)
    t.coefficient = "k"
    return t


def cyclic_oracle(n: int, field: FieldSpec | str, max_degree: int = DEFAULT_MAX_DEGREE) -> list[int]:
    """Ext_{kZ_n}(k, k) from the 2-periodic resolution (h - 1), (1 + h + ... + h^(n-1)).

    kZ_n is realised as k[h]/(h^n - 1) with explicit matrices; nothing from
    the resolution engine is used.
    """
    F = FieldSpec.parse(field) if isinstance(field, str) else field
    # right multiplication by h on the basis 1, h, ..., h^(n-1)
    H = F.zeros((n, n))
    for i in range(n):
        H[i, (i + 1) % n] = F.scalar(1)
    I = F.eye(n)
    maps = [F.sub(H, I), I.copy()]
    Hp = I.copy()
    for _ in range(n - 1):
        Hp = F.matmul(Hp, H)
        maps[1] = F.add(maps[1], Hp)
    # exactness of the periodic complex on the group algebra itself
    for a, b in ((0, 1), (1, 0)):
        if not F.is_zero_array(F.matmul(maps[a], maps[b])):
            raise RuntimeError("periodic complex is not a complex")
        if rank(F, maps[a]) + rank(F, maps[b]) != n:
            raise RuntimeError("periodic complex is not exact")
    # Hom_{kZ_n}(kZ_n, k) = k; the induced map of right multiplication by x is eps(x)
    ones = F.from_ints(np.ones(n, dtype=np.int64))
    eps = [F.einsum("j,j->", m[0], ones) for m in maps]
    delta_rank = [0] + [0 if F.is_zero_array(eps[(i - 1) % 2]) else 1 for i in range(1, max_degree + 2)]
    return [1 - delta_rank[i + 1] - delta_rank[i] for i in range(max_degree + 1)]


# -- verifiers -----------------------------------------------------------------


@dataclass
class Verification:
    """Outcome of a verifier: hypothesis checks, then per-degree comparison."""

    name: str
    hypotheses: CheckReport
    lhs: list = field(default_factory=list)
    rhs: list = field(default_factory=list)
    rejected: str = ""
    details: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return not self.rejected and self.lhs == self.rhs

    def report(self) -> CheckReport:
        rep = CheckReport(self.name)
        rep.extend(self.hypotheses, "hypothesis: ")
        if self.rejected:
            rep.notes.append(f"rejected: {self.rejected}")
            return rep
        for p, (a, b) in enumerate(zip(self.lhs, self.rhs)):
            rep.add(f"degree {p}", a == b, f"LHS {a}, RHS {b}")
        return rep

    def to_dict(self) -> dict:
        out = {"name": self.name, "equal": self.equal, "rejected": self.rejected or None}
        out["hypotheses"] = self.hypotheses.to_dict()
        out["lhs"], out["rhs"] = list(self.lhs), list(self.rhs)
        out.update(self.details)
        return out


def _sequence_hypotheses(incl, p, rep: CheckReport):
    seq = verify_exact_sequence(incl, p)
    rep.add("exact sequence", seq.exact, ", ".join(k for k, v in seq.flags.items() if not v))
    return seq.exact


def verify_corollary(A: FinDimHopf, incl: HopfMorphism, p: HopfMorphism, max_degree: int = DEFAULT_MAX_DEGREE) -> Verification:
    """H_b(B) against the sum over characters psi of Gamma of H_GS(A, k_psi)."""
    F = A.field
    hyp = CheckReport("hypotheses")
    v = Verification("bialgebra cohomology of B vs sum of H_GS(A, k_psi)", hyp)
    L = p.target
    G = getattr(L, "group", None)
    if G is None:
        hyp.add("target is a group algebra", False)
        v.rejected = "target of p is not a group algebra"
        return v
    ok = _sequence_hypotheses(incl, p, hyp)
    cc = cocentral_check(p)
    hyp.add("p cocentral", cc.passed)
    inv = not (F.char and G.order % F.char == 0)
    hyp.add("|Γ| invertible", inv)
    chars = group_characters(G, F) if inv else []
    enough = inv and len(chars) == G.order
    hyp.add("enough roots of unity", enough, f"{len(chars)} characters")
    if not inv:
        v.rejected = "|Γ| = 0 in k"
    elif not enough:
        v.rejected = "insufficient roots of unity"
    elif not ok:
        v.rejected = "not an exact sequence"
    elif not cc.passed:
        v.rejected = "p is not cocentral"
    if v.rejected:
        return v
    v.lhs = bialgebra_cohomology(incl.source, max_degree).dims
    per = []
    total = [0] * (max_degree + 1)
    for j, c in enumerate(chars):
        psi = Character(A, F.einsum("iq,q->i", p.matrix, c), f"psi{j}")
        dims = gs_cohomology(A, k_psi(A, psi), max_degree).dims
        per.append(dims)
        total = [a + b for a, b in zip(total, dims)]
    v.rhs = total
    v.details["per_character"] = per
    return v


def _coadjoint(incl, p):
    if isinstance(p, QuotientMap):
        return coadjoint_quotient(incl)
    return coadjoint_on_image(p)


def verify_theorem_restriction(
    A: FinDimHopf, incl: HopfMorphism, p, X: YDModule, max_degree: int = DEFAULT_MAX_DEGREE
) -> Verification:
    """H_GS(B, X^(B)) against H_GS(A, X (x) L*)."""
    hyp = CheckReport("hypotheses")
    v = Verification("H_GS(B, X^(B)) vs H_GS(A, X (x) L*)", hyp)
    ok = _sequence_hypotheses(incl, p, hyp)
    L = p.hopf if isinstance(p, QuotientMap) else p.target
    if L is None:
        hyp.add("L is a Hopf algebra", False)
        v.rejected = "quotient is not a Hopf algebra"
        return v
    cos = radical(dual_hopf(L).as_algebra()).shape[0] == 0
    hyp.add("L cosemisimple", cos)
    yd = yd_check(X).passed
    hyp.add("X is a YD module", yd)
    if not ok:
        v.rejected = "not an exact sequence"
    elif not cos:
        v.rejected = "L is not cosemisimple"
    elif not yd:
        v.rejected = "X fails the YD axioms"
    if v.rejected:
        return v
    XB = restrict(X, incl)
    Lyd = _coadjoint(incl, p)
    v.lhs = gs_cohomology(incl.source, XB, max_degree).dims
    v.rhs = gs_cohomology(A, tensor_yd(X, dual_yd(Lyd)), max_degree).dims
    v.details["dim X^(B)"] = XB.dim
    v.details["dim L"] = Lyd.dim
    return v


def cd_gs_observed(A: FinDimHopf, coefficients, max_degree: int = DEFAULT_MAX_DEGREE):
    """Largest degree <= max_degree with nonzero H_GS(A, V) for some V given.

    Returns an int, or the string ">= max_degree" when the top degree is
    already nonzero (the observation is saturated).
    """
    coefficients = list(coefficients)
    if not coefficients:
        raise ValueError("no coefficients")
    top = -1
    for V in coefficients:
        dims = gs_cohomology(A, V, max_degree).dims
        nz = [p for p, d in enumerate(dims) if d]
        if nz:
            top = max(top, nz[-1])
    if top == max_degree:
        return f">= {max_degree}"
    return top
