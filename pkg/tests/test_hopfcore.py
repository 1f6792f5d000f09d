import numpy as np
import pytest

from hopfcohom.exactla import FieldSpec, inverse, rank
from hopfcohom.hopfcore import (
    GroupError,
    HopfMorphism,
    check_hopf_axioms,
    cocentral_check,
    counit_morphism,
    cyclic,
    dihedral,
    drinfeld_double,
    dual_hopf,
    group_algebra,
    group_morphism,
    morphism_check,
    quotient_by_subalgebra,
    subgroup_inclusion,
    symmetric,
    transport,
    verify_exact_sequence,
)
from hopfcohom.hopfcore.groups import from_table, sign
from hopfcohom.ydmod import (
    YDModule,
    coadjoint_quotient,
    double_module_to_yd,
    double_of,
    dual_yd,
    induce,
    tensor_yd,
    trivial_yd,
    yd_check,
    yd_to_double_module,
)

Q = FieldSpec.parse("Q")
F2 = FieldSpec.parse("F2")
F3 = FieldSpec.parse("F3")
F4 = FieldSpec.parse("F4")


def test_cyclic2_f2():
    A = group_algebra(cyclic(2), F2)
    assert A.dim == 2
    assert F2.equal(A.antipode, F2.eye(2))


def test_s3_counit_all_ones():
    A = group_algebra(symmetric(3), F3)
    assert A.dim == 6
    assert F3.equal(A.counit, F3.from_ints(np.ones(6, dtype=np.int64)))


def test_cyclic4_grouplikes():
    A = group_algebra(cyclic(4), Q)
    for g in range(4):
        expect = Q.zeros((4, 4))
        expect[g, g] = Q.scalar(1)
        assert Q.equal(A.coproduct(Q.eye(4)[g]), expect)


def test_builtin_spec_and_bad_table():
    A = group_algebra({"builtin": "dihedral", "n": 4}, "Q")
    assert A.dim == 8 and check_hopf_axioms(A).passed
    with pytest.raises(GroupError):
        group_algebra([[0, 1], [0, 1]], "Q")
    with pytest.raises(GroupError):
        from_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])


@pytest.mark.parametrize(
    "group,field",
    [(cyclic(1), "Q"), (cyclic(5), "F5"), (dihedral(3), "F2"), (symmetric(3), "Q"), (symmetric(4), "F3")],
)
def test_constructors_pass_axioms(group, field):
    A = group_algebra(group, field)
    assert check_hopf_axioms(A).passed
    assert check_hopf_axioms(dual_hopf(A)).passed


def test_double_dual():
    A = group_algebra(symmetric(3), Q)
    AA = dual_hopf(dual_hopf(A))
    for t in ("mult", "unit", "comult", "counit", "antipode"):
        assert Q.equal(getattr(AA, t), getattr(A, t))


def test_dual_z2_via_characters():
    A = group_algebra(cyclic(2), Q)
    P = Q.from_ints(np.array([[1, 1], [1, -1]]))
    # rows: the characters as elements of the dual, i.e. the idempotent basis transported
    T = transport(dual_hopf(A), P)
    assert Q.equal(T.mult, A.mult) and Q.equal(T.comult, A.comult)
    assert Q.equal(T.antipode, A.antipode)


def test_dual_s3_commutative_not_cocommutative():
    H = dual_hopf(group_algebra(symmetric(3), Q))
    assert H.is_commutative and not H.is_cocommutative


def test_bad_antipode_witness():
    A = group_algebra(cyclic(3), F4)
    bad = A.replace(antipode=F4.eye(3))
    rep = check_hopf_axioms(bad)
    assert not rep["antipode"].passed
    assert rep["antipode"].witness


def test_bad_comult():
    A = group_algebra(cyclic(2), Q)
    c = Q.zeros((2, 2, 2))
    c[0, 0, 0] = Q.scalar(1)
    c[1, 1, 0] = Q.scalar(1)  # g -> g (x) 1
    rep = check_hopf_axioms(A.replace(comult=c))
    assert not rep.passed
    assert {f.name for f in rep.failures} & {"coassociativity", "counit"}


def test_morphism_checks():
    Z4, Z2 = group_algebra(cyclic(4), Q), group_algebra(cyclic(2), Q)
    assert morphism_check(Q.eye(4), Z4, Z4).passed
    assert group_morphism(Z4, Z2, [0, 1, 0, 1]).check().passed
    rep = group_morphism(Z2, Z4, [0, 1]).check()
    assert not rep["multiplicative"].passed and rep["multiplicative"].witness


def test_cocentral():
    S3 = group_algebra(symmetric(3), Q)
    Z2 = group_algebra(cyclic(2), Q)
    assert cocentral_check(group_morphism(S3, Z2, sign(S3.group))).passed
    assert cocentral_check(counit_morphism(S3)).passed
    # restriction k^S3 -> k^<(12)>, the dual of the inclusion
    G = S3.group
    incl = subgroup_inclusion(S3, [G.identity, G.index("(12)")])
    dual = HopfMorphism(dual_hopf(S3), dual_hopf(incl.source), np.ascontiguousarray(np.swapaxes(incl.matrix, 0, 1)))
    assert dual.check().passed
    rep = cocentral_check(dual)
    assert not rep.passed and rep.checks[0].witness


def test_exact_z2_z4():
    A = group_algebra(cyclic(4), Q)
    w = verify_exact_sequence(subgroup_inclusion(A, [0, 2]), group_morphism(A, group_algebra(cyclic(2), Q), [0, 1, 0, 1]))
    assert w.exact and w.flags["p i = eps 1"]
    assert w.report().passed


def test_exact_a3_s3():
    A = group_algebra(symmetric(3), F3)
    s = sign(A.group)
    incl = subgroup_inclusion(A, [g for g in range(6) if s[g] == 0])
    w = verify_exact_sequence(incl, group_morphism(A, group_algebra(cyclic(2), F3), s))
    assert w.exact


def test_non_normal_fails_condition_2():
    A = group_algebra(symmetric(3), Q)
    G = A.group
    incl = subgroup_inclusion(A, [G.identity, G.index("(12)")])
    q = quotient_by_subalgebra(incl)
    assert q.hopf is None
    w = verify_exact_sequence(incl, q)
    assert not w.flags["condition 2"]
    assert not w.exact


@pytest.mark.parametrize("n,sub,field", [(4, [0, 2], "Q"), (6, [0, 3], "F4"), (6, [0, 2, 4], "F2")])
def test_normal_quotients_exact(n, sub, field):
    A = group_algebra(cyclic(n), field)
    incl = subgroup_inclusion(A, sub)
    q = quotient_by_subalgebra(incl)
    assert q.hopf is not None and check_hopf_axioms(q.hopf).passed
    w = verify_exact_sequence(incl, q)
    assert w.exact and w.flags["p i = eps 1"]


@pytest.mark.parametrize("A", [group_algebra(cyclic(3), Q), group_algebra(symmetric(3), F3), dual_hopf(group_algebra(symmetric(3), Q))])
def test_double_is_algebra(A):
    D, tr = drinfeld_double(A)
    assert D.dim == A.dim**2
    assert D.check_axioms().passed
    assert tr.split(tr.index(2, 1)) == (2, 1)


def test_double_abelian_factorises():
    A = group_algebra(cyclic(3), Q)
    D, _ = drinfeld_double(A)
    Ad = dual_hopf(A)
    # k^G (x) kG with componentwise products
    prod = Q.einsum("ikm,jln->ijklmn", Ad.mult, A.mult).reshape(9, 9, 9, 1)
    assert Q.equal(D.mult, prod)


def test_singular_antipode_rejected():
    A = group_algebra(cyclic(2), Q)
    with pytest.raises(ValueError):
        drinfeld_double(A.replace(antipode=Q.zeros((2, 2))))


def _yd_pool(A):
    G = A.group
    mods = [trivial_yd(A)]
    r3 = subgroup_inclusion(A, G.subgroup_generated([G.index("(123)")]))
    r2 = subgroup_inclusion(A, [G.identity, G.index("(12)")])
    mods += [coadjoint_quotient(r3), induce(trivial_yd(r2.source), r2)]
    mods += [dual_yd(m) for m in mods]
    n = A.dim
    F = A.field
    R = F.zeros((n, n, n))
    for v in range(n):
        for a in range(n):
            R[v, a, G.mul(G.mul(G.inverses[a], v), a)] = F.scalar(1)
    mods.append(YDModule(A, R, A.comult.copy(), "conjugation"))
    return mods


def _conj(F, P, T, axes):
    Pi = inverse(F, P)
    if axes == "action":
        return F.einsum("xv,vaw,wy->xay", Pi, T, P)
    return F.einsum("xv,vwa,wy->xya", Pi, T, P)


def test_yd_condition_iff_double_module():
    """200 seeded (action, coaction) pairs: YD axioms hold iff the D-action is a module."""
    A = group_algebra(symmetric(3), F3)
    D = double_of(A)
    F = A.field
    pool = _yd_pool(A)
    by_dim = {}
    for m in pool:
        by_dim.setdefault(m.dim, []).append(m)
    dims = sorted(by_dim)
    rng = np.random.default_rng(2024)
    seen = {True: 0, False: 0}
    for _ in range(200):
        d = dims[rng.integers(len(dims))]
        M1 = by_dim[d][rng.integers(len(by_dim[d]))]
        M2 = by_dim[d][rng.integers(len(by_dim[d]))]
        R, C = M1.action, M2.coaction
        while True:
            P = F.random((d, d), rng)
            if rank(F, P) == d:
                break
        mode = rng.integers(4)
        if mode == 1:
            C = _conj(F, P, C, "coaction")
        elif mode == 2:
            R = _conj(F, P, R, "action")
        V = YDModule(A, R, C)
        yd = yd_check(V).passed
        assert yd == yd_to_double_module(V, D).check_axioms().passed
        seen[yd] += 1
    assert seen[True] >= 20 and seen[False] >= 20


def test_double_translation_roundtrip():
    A = group_algebra(symmetric(3), F3)
    for M in _yd_pool(A) + [tensor_yd(_yd_pool(A)[1], _yd_pool(A)[1])]:
        X = yd_to_double_module(M)
        assert X.check_axioms().passed
        back = double_module_to_yd(X, A)
        assert F3.equal(back.action, M.action) and F3.equal(back.coaction, M.coaction)
