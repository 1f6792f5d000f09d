import numpy as np
import pytest

from hopfcohom.exactla import FieldSpec, inverse, nth_roots_of_unity, same_space
from hopfcohom.hopfcore import (
    HopfMorphism,
    counit_morphism,
    dual_hopf,
    group_algebra,
    group_morphism,
    subgroup_inclusion,
    trivial_hopf,
)
from hopfcohom.hopfcore.groups import cyclic, symmetric, sign
from hopfcohom.homology import hom_dim
from hopfcohom.ydmod import (
    Character,
    YDError,
    YDModule,
    coadjoint_on_image,
    coadjoint_quotient,
    coevaluation,
    cotensor_subspace,
    direct_sum,
    dual_yd,
    evaluation,
    fourier_transform,
    grading_components,
    grading_report,
    group_characters,
    hom_space,
    induce,
    k_psi,
    restrict,
    restriction_subspace,
    tensor_yd,
    trivial_yd,
    yd_check,
    yd_iso_search,
    yd_morphism_check,
    yd_to_double_module,
)

Q = FieldSpec.parse("Q")
F2 = FieldSpec.parse("F2")
F3 = FieldSpec.parse("F3")
F4 = FieldSpec.parse("F4")
QI = FieldSpec.parse("Q[x]/(x^2+1)")


@pytest.fixture(scope="module")
def z4():
    A = group_algebra(cyclic(4), Q)
    return A, subgroup_inclusion(A, [0, 2])


@pytest.fixture(scope="module")
def s3():
    A = group_algebra(symmetric(3), Q)
    G = A.group
    return A, subgroup_inclusion(A, G.subgroup_generated([G.index("(123)")]))


def graded_regular(A):
    """kZ4 with coaction Delta and trivial action."""
    F = A.field
    R = F.einsum("vw,a->vaw", F.eye(A.dim), A.counit)
    return YDModule(A, R, A.comult.copy(), "kZ4")


def test_trivial_and_graded(z4):
    A, _ = z4
    assert yd_check(trivial_yd(A)).passed
    assert yd_check(graded_regular(A)).passed


def test_twisted_action_fails_yd(z4):
    A, _ = z4
    F = A.field
    # regular action twisted by h -> h^3 on the grading
    R = F.zeros((4, 4, 4))
    for v in range(4):
        for a in range(4):
            R[v, a, (v + 3 * a) % 4] = F.scalar(1)
    rep = yd_check(YDModule(A, R, A.comult.copy()))
    assert not rep["YD condition"].passed
    assert rep["YD condition"].witness is not None


def test_k_psi_examples():
    A = group_algebra(cyclic(3), F4)
    assert yd_check(k_psi(A, Character(A, A.counit))).passed
    x = [r for r in nth_roots_of_unity(F4, 3) if r != F4.element(F4.scalar(1))][0]
    vals = np.stack([(x**k).vector() for k in range(3)])
    assert yd_check(k_psi(A, Character(A, vals, "chi"))).passed
    S3 = group_algebra(symmetric(3), Q)
    H = dual_hopf(S3)
    ev = Q.eye(6)[S3.group.index("(123)")]
    with pytest.raises(YDError, match="central type"):
        k_psi(H, Character(H, ev))
    with pytest.raises(YDError, match="algebra map"):
        k_psi(S3, Character(S3, Q.from_ints(np.arange(6))))


def test_coadjoint_quotients(z4, s3):
    A, incl = z4
    L = coadjoint_quotient(incl)
    assert L.dim == 2 and yd_check(L).passed
    # trivial coaction: rho(v) = v (x) 1
    expect = Q.einsum("vw,a->vwa", Q.eye(2), A.unit)
    assert Q.equal(L.coaction, expect)
    B, incl3 = s3
    L3 = coadjoint_quotient(incl3)
    assert L3.dim == 2 and yd_check(L3).passed
    # B = k: L = A with right multiplication
    Ltriv = coadjoint_quotient(subgroup_inclusion(B, [B.group.identity]))
    assert Ltriv.dim == 6 and yd_check(Ltriv).passed


def test_tensor(z4):
    A, incl = z4
    L = coadjoint_quotient(incl)
    V = graded_regular(A)
    T = tensor_yd(V, trivial_yd(A))
    assert Q.equal(T.action, V.action) and Q.equal(T.coaction, V.coaction)
    LL = tensor_yd(L, L)
    assert LL.dim == 4 and yd_check(LL).passed


def test_tensor_of_characters():
    A = group_algebra(cyclic(4), QI)
    chars = [Character(A, c, f"c{j}") for j, c in enumerate(group_characters(A.group, QI))]
    for a in chars:
        for b in chars:
            T = tensor_yd(k_psi(A, a), k_psi(A, b))
            P = k_psi(A, a * b)
            assert QI.equal(T.action, P.action) and QI.equal(T.coaction, P.coaction)


def test_tensor_base_mismatch():
    with pytest.raises(YDError):
        tensor_yd(trivial_yd(group_algebra(cyclic(2), Q)), trivial_yd(group_algebra(cyclic(3), Q)))


def test_dual_examples(z4):
    A, incl = z4
    k = trivial_yd(A)
    assert yd_iso_search(dual_yd(k), k) is not None
    L = coadjoint_quotient(incl)
    assert yd_iso_search(dual_yd(L), L) is not None
    B = group_algebra(cyclic(4), QI)
    psi = Character(B, group_characters(B.group, QI)[1], "psi")
    dual = dual_yd(k_psi(B, psi))
    assert QI.equal(dual.action, k_psi(B, psi.compose(B.antipode)).action)


def _dual_fixtures():
    A = group_algebra(symmetric(3), Q)
    G = A.group
    r3 = subgroup_inclusion(A, G.subgroup_generated([G.index("(123)")]))
    r2 = subgroup_inclusion(A, [G.identity, G.index("(12)")])
    H = dual_hopf(group_algebra(symmetric(3), F3))
    unit = HopfMorphism(trivial_hopf(F3), H, H.unit.reshape(1, H.dim, F3.degree).copy())
    return [coadjoint_quotient(r3), induce(trivial_yd(r2.source), r2), coadjoint_quotient(unit)]


@pytest.mark.parametrize("V", _dual_fixtures(), ids=lambda V: V.name)
def test_dual_convention(V):
    D = dual_yd(V)
    k = trivial_yd(V.base)
    assert yd_check(D).passed
    assert yd_morphism_check(evaluation(V), tensor_yd(D, V), k).passed
    assert yd_morphism_check(coevaluation(V), k, tensor_yd(V, D)).passed


def test_adjunction_degree_zero(s3):
    """dim Hom(k, X (x) L*) = dim Hom(L, X) on fixtures."""
    A, incl = s3
    L = coadjoint_quotient(incl)
    G = A.group
    r2 = subgroup_inclusion(A, [G.identity, G.index("(12)")])
    for X in (trivial_yd(A), L, induce(trivial_yd(r2.source), r2), tensor_yd(L, L)):
        lhs = hom_space(trivial_yd(A), tensor_yd(X, dual_yd(L))).shape[0]
        assert lhs == hom_space(L, X).shape[0]
        assert lhs == hom_dim(yd_to_double_module(trivial_yd(A)), yd_to_double_module(tensor_yd(X, dual_yd(L))))


def test_restriction(z4):
    A, incl = z4
    V = graded_regular(A)
    sub = restriction_subspace(V, incl)
    assert same_space(Q, sub, Q.eye(4)[[0, 2]])
    assert same_space(Q, sub, cotensor_subspace(V, incl))
    r = restrict(V, incl)
    assert r.dim == 2 and yd_check(r).passed
    L = coadjoint_quotient(incl)
    assert restrict(L, incl).dim == 2
    assert restrict(trivial_yd(A), incl).dim == 1


def test_restriction_matches_cotensor_nonabelian(s3):
    A, incl = s3
    n = A.dim
    R = Q.zeros((n, n, n))
    G = A.group
    for v in range(n):
        for a in range(n):
            R[v, a, G.mul(G.mul(G.inverses[a], v), a)] = Q.scalar(1)
    conj = YDModule(A, R, A.comult.copy(), "conj")
    assert yd_check(conj).passed
    sub = restriction_subspace(conj, incl)
    assert sub.shape[0] == 3 and same_space(Q, sub, cotensor_subspace(conj, incl))
    assert yd_check(restrict(conj, incl)).passed


def test_induction(z4, s3):
    for A, incl in (z4, s3):
        I = induce(trivial_yd(incl.source), incl)
        assert I.dim == A.dim // incl.source.dim
        assert yd_check(I).passed
        f = yd_iso_search(I, coadjoint_quotient(incl))
        assert f is not None and f.is_isomorphism and f.check().passed
    A, _ = s3
    K = subgroup_inclusion(A, [A.group.identity])
    I = induce(trivial_yd(K.source), K)
    assert yd_iso_search(I, coadjoint_quotient(K)) is not None


def test_grading_z4():
    A = group_algebra(cyclic(4), Q)
    p = group_morphism(A, group_algebra(cyclic(2), Q), [0, 1, 0, 1])
    comps = dict(grading_components(p))
    labels = p.target.group.labels
    assert same_space(Q, comps[labels[0]], Q.eye(4)[[0, 2]])
    assert same_space(Q, comps[labels[1]], Q.eye(4)[[1, 3]])
    assert grading_report(p, grading_components(p)).passed


def test_grading_counit_and_sign():
    A = group_algebra(symmetric(3), F3)
    assert counit_morphism(A).check().passed
    eps = group_morphism(A, group_algebra(cyclic(1), F3), [0] * 6)
    comps = grading_components(eps)
    assert len(comps) == 1 and comps[0][1].shape[0] == 6
    p = group_morphism(A, group_algebra(cyclic(2), F3), sign(A.group))
    comps = grading_components(p)
    assert [b.shape[0] for _, b in comps] == [3, 3]
    assert grading_report(p, comps).passed


def test_fourier_z2_q():
    A = group_algebra(cyclic(2), Q)
    f = fourier_transform(group_morphism(A, A, [0, 1]))
    assert Q.equal(f.matrix, Q.from_ints(np.array([[1, 1], [1, -1]])))
    assert f.check().passed and f.is_isomorphism
    Mi = inverse(Q, f.matrix)
    assert Q.equal(Q.matmul(f.matrix, Mi), Q.eye(2))


@pytest.mark.parametrize("n,field", [(2, "Q"), (3, "F4"), (4, "Q[x]/(x^2+1)"), (6, "F7")])
def test_fourier_certified(n, field):
    A = group_algebra(cyclic(n), field)
    f = fourier_transform(group_morphism(A, A, list(range(n))))
    assert f.source.dim == f.target.dim == n
    assert f.is_isomorphism and f.check().passed
    assert yd_check(f.source).passed and yd_check(f.target).passed


def test_fourier_through_quotient():
    A = group_algebra(cyclic(6), F4)
    p = group_morphism(A, group_algebra(cyclic(3), F4), [k % 3 for k in range(6)])
    f = fourier_transform(p)
    assert f.check().passed and f.is_isomorphism
    assert coadjoint_on_image(p).dim == 3


def test_fourier_errors():
    A = group_algebra(cyclic(2), F2)
    with pytest.raises(YDError, match=r"\|Γ\| = 0 in k"):
        fourier_transform(group_morphism(A, A, [0, 1]))
    B = group_algebra(cyclic(3), Q)
    with pytest.raises(YDError, match="insufficient roots of unity"):
        fourier_transform(group_morphism(B, B, [0, 1, 2]))


def test_character_order_trivial_first():
    for n, field in ((4, QI), (3, F4), (2, Q)):
        chars = group_characters(cyclic(n), field)
        assert len(chars) == n
        assert field.equal(chars[0], field.from_ints(np.ones(n, dtype=np.int64)))


def test_morphism_checks(z4):
    A, incl = z4
    V = graded_regular(A)
    assert yd_morphism_check(Q.eye(4), V, V).passed
    zero = yd_morphism_check(Q.zeros((4, 4)), V, V)
    assert zero.passed
    assert yd_iso_search(V, direct_sum(*[trivial_yd(A)] * 4)) is None


def test_direct_sum_checks(s3):
    A, incl = s3
    S = direct_sum(trivial_yd(A), coadjoint_quotient(incl))
    assert S.dim == 3 and yd_check(S).passed
