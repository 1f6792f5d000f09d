"""H(F), B(E), free and crossed products, and the checks relating them."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..checks import CheckReport
from ..exactla import FieldSpec, inverse, rank
from .hopf import DEFAULT_CAP, GenMap, PresentedHopf, hopf_axiom_check_to_cap
from .ncpoly import QQ, Alphabet, NCPolynomial, PresentationError, Scalars, Tensor2

# -- exact matrices -----------------------------------------------------------


def _field(K: Scalars) -> FieldSpec:
    return FieldSpec.parse("Q" if K.p is None else f"Fp({K.p})")


def matrix(M, K: Scalars = QQ) -> list:
    """Square matrix of field elements (ints, Fractions or strings like "1/2")."""
    rows = [[K(Fraction(x) if isinstance(x, str) else x) for x in row] for row in M]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise PresentationError("expected a nonempty square matrix")
    return rows


def _to_array(M, K):
    F = _field(K)
    if K.p is None:
        return np.array([[Fraction(x) for x in row] for row in M], dtype=object)[..., None]
    return F.from_ints(np.array([[int(x) for x in row] for row in M], dtype=np.int64))


def mat_inv(M, K: Scalars = QQ) -> list:
    F = _field(K)
    A = _to_array(M, K)
    if rank(F, A) != len(M):
        raise PresentationError("singular matrix")
    Ai = inverse(F, A)
    return [[K(Ai[i, j, 0]) for j in range(len(M))] for i in range(len(M))]


def mat_mul(A, B, K: Scalars = QQ) -> list:
    n = len(A)
    return [[K(sum(A[i][k] * B[k][j] for k in range(n))) for j in range(n)] for i in range(n)]


def transpose(A) -> list:
    return [list(r) for r in zip(*A)]


def trace(A, K: Scalars = QQ):
    return K(sum(A[i][i] for i in range(len(A))))


def asymmetry_from(E, K: Scalars = QQ) -> list:
    """F = E^t E^-1."""
    E = matrix(E, K)
    return mat_mul(transpose(E), mat_inv(E, K), K)


def q_matrix(q, K: Scalars = QQ) -> list:
    """The 2x2 matrix E_q = [[0, 1], [-1/q, 0]]."""
    q = K(q)
    return [[K(0), K(1)], [K(-K.inv(q)), K(0)]]


# -- helpers -----------------------------------------------------------------


def _names(prefix: str, n: int) -> list:
    sep = "" if n < 10 else "_"
    return [f"{prefix}{i + 1}{sep}{j + 1}" for i in range(n) for j in range(n)]


def _mat_gens(alpha: Alphabet, prefix: str, n: int, K):
    names = _names(prefix, n)
    return [[NCPolynomial.gen(alpha, names[i * n + j], K) for j in range(n)] for i in range(n)]


def _pmul(A, B):
    """Product of matrices whose entries are polynomials or scalars."""
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = None
            for k in range(n):
                a, b = A[i][k], B[k][j]
                if not isinstance(a, NCPolynomial) and not isinstance(b, NCPolynomial):
                    raise PresentationError("scalar-only product")
                t = a * b if isinstance(a, NCPolynomial) else b * a
                acc = t if acc is None else acc + t
            row.append(acc)
        out.append(row)
    return out


def _matrix_coproduct(alpha, X, K):
    """Delta(x_ij) = sum_k x_ik (x) x_kj."""
    n = len(X)
    out = {}
    names = alpha.names
    for i in range(n):
        for j in range(n):
            t = Tensor2({}, K)
            for k in range(n):
                t = t + Tensor2.simple(X[i][k], X[k][j])
            (w,) = X[i][j].terms
            out[names[w[0]]] = t
    return out


def _delta_counit(alpha, X, K):
    out = {}
    n = len(X)
    for i in range(n):
        for j in range(n):
            (w,) = X[i][j].terms
            out[alpha.names[w[0]]] = K(1 if i == j else 0)
    return out


def _identity_relations(P, K):
    n = len(P)
    return [P[i][j] - (1 if i == j else 0) for i in range(n) for j in range(n)]


# -- H(F) and B(E) -----------------------------------------------------------


def universal_cosovereign(F, K: Scalars = QQ, cap: int = DEFAULT_CAP) -> PresentedHopf:
    """H(F): u v^t = v^t u = I, v F u^t F^-1 = F u^t F^-1 v = I."""
    F = matrix(F, K)
    n = len(F)
    if n < 2:
        raise PresentationError("H(F) needs n >= 2")
    Fi = mat_inv(F, K)
    alpha = Alphabet(tuple(_names("u", n) + _names("v", n)))
    u, v = _mat_gens(alpha, "u", n, K), _mat_gens(alpha, "v", n, K)
    ut, vt = transpose(u), transpose(v)
    FutFi = _pmul(_pmul(F, ut), Fi)
    rels = []
    rels += _identity_relations(_pmul(u, vt), K)
    rels += _identity_relations(_pmul(vt, u), K)
    rels += _identity_relations(_pmul(v, FutFi), K)
    rels += _identity_relations(_pmul(FutFi, v), K)
    delta = {**_matrix_coproduct(alpha, u, K), **_matrix_coproduct(alpha, v, K)}
    counit = {**_delta_counit(alpha, u, K), **_delta_counit(alpha, v, K)}
    anti = {}
    for i in range(n):
        for j in range(n):
            anti[alpha.names[i * n + j]] = v[j][i]
            anti[alpha.names[n * n + i * n + j]] = FutFi[i][j]
    return PresentedHopf(alpha, rels, delta, counit, anti, K, f"H(F), n={n}", cap)


def bilinear_form_hopf(E, K: Scalars = QQ, cap: int = DEFAULT_CAP) -> PresentedHopf:
    """B(E): E^-1 a^t E a = I = a E^-1 a^t E, S(a) = E^-1 a^t E."""
    E = matrix(E, K)
    n = len(E)
    if n < 2:
        raise PresentationError("B(E) needs n >= 2")
    Ei = mat_inv(E, K)
    alpha = Alphabet(tuple(_names("a", n)))
    a = _mat_gens(alpha, "a", n, K)
    S = _pmul(_pmul(Ei, transpose(a)), E)
    rels = _identity_relations(_pmul(S, a), K) + _identity_relations(_pmul(a, S), K)
    delta = _matrix_coproduct(alpha, a, K)
    counit = _delta_counit(alpha, a, K)
    anti = {alpha.names[i * n + j]: S[i][j] for i in range(n) for j in range(n)}
    return PresentedHopf(alpha, rels, delta, counit, anti, K, f"B(E), n={n}", cap)


def group_z2(K: Scalars = QQ, cap: int = DEFAULT_CAP, name: str = "g") -> PresentedHopf:
    alpha = Alphabet((name,))
    g = NCPolynomial.gen(alpha, name, K)
    return PresentedHopf(alpha, [g * g - 1], {name: Tensor2.simple(g, g)}, {name: K(1)}, {name: g}, K, "kZ2", cap)


def trivial_presented(K: Scalars = QQ, cap: int = DEFAULT_CAP) -> PresentedHopf:
    return PresentedHopf(Alphabet(()), [], {}, {}, {}, K, "k", cap)


# -- free and crossed products ---------------------------------------------------


def _remap_poly(p: NCPolynomial, alpha: Alphabet, shift: int) -> NCPolynomial:
    return NCPolynomial({tuple(i + shift for i in w): c for w, c in p.terms.items()}, alpha, p.K)


def _remap_tensor(t: Tensor2, shift: int) -> Tensor2:
    return Tensor2({(tuple(i + shift for i in a), tuple(i + shift for i in b)): c for (a, b), c in t.terms.items()}, t.K)


def _fresh(name: str, taken) -> str:
    while name in taken:
        name += "'"
    return name


def free_product(H1: PresentedHopf, H2: PresentedHopf, cap: int | None = None) -> PresentedHopf:
    """H1 * H2: generators of both (H2's renamed on clashes), no cross relations."""
    if H1.K != H2.K:
        raise PresentationError("free product over different fields")
    K = H1.K
    taken = set(H1.alphabet.names)
    new2 = []
    for x in H2.alphabet.names:
        y = _fresh(x, taken)
        taken.add(y)
        new2.append(y)
    alpha = Alphabet(tuple(H1.alphabet.names) + tuple(new2))
    s = len(H1.alphabet)
    rels = [_remap_poly(r, alpha, 0) for r in H1.relations] + [_remap_poly(r, alpha, s) for r in H2.relations]
    delta, counit, anti = {}, {}, {}
    for x in H1.alphabet.names:
        delta[x] = H1.delta[x]
        counit[x] = H1.counit[x]
        anti[x] = _remap_poly(H1.antipode[x], alpha, 0)
    for x, y in zip(H2.alphabet.names, new2):
        delta[y] = _remap_tensor(H2.delta[x], s)
        counit[y] = H2.counit[x]
        anti[y] = _remap_poly(H2.antipode[x], alpha, s)
    name = f"{H1.name} * {H2.name}"
    return PresentedHopf(alpha, rels, delta, counit, anti, K, name, cap or max(H1.cap, H2.cap))


def tau_automorphism(E, K: Scalars = QQ, cap: int = DEFAULT_CAP) -> GenMap:
    """tau on H(E^t E^-1): u |-> (E^t)^-1 v E^t, v |-> E^t u (E^t)^-1."""
    E = matrix(E, K)
    n = len(E)
    H = universal_cosovereign(asymmetry_from(E, K), K, cap)
    Et = transpose(E)
    Eti = mat_inv(Et, K)
    u, v = _mat_gens(H.alphabet, "u", n, K), _mat_gens(H.alphabet, "v", n, K)
    tu = _pmul(_pmul(Eti, v), Et)
    tv = _pmul(_pmul(Et, u), Eti)
    images = {}
    for i in range(n):
        for j in range(n):
            images[H.alphabet.names[i * n + j]] = tu[i][j]
            images[H.alphabet.names[n * n + i * n + j]] = tv[i][j]
    return GenMap(H, H, images, "tau")


def tau_report(tau: GenMap) -> CheckReport:
    rep = CheckReport("tau is an order 2 Hopf automorphism")
    rep.extend(tau.well_defined(), "well-defined: ")
    rep.extend(tau.compose(tau).fixes_generators(), "tau^2 = id: ")
    rep.extend(tau.coalgebra_compatible(), "coalgebra: ")
    return rep


def crossed_product_z2(H: PresentedHopf, tau: GenMap, cap: int | None = None) -> PresentedHopf:
    """H x| kZ2: g^2 = 1, g x = tau(x) g, g group-like."""
    if tau.source is not H or tau.target is not H:
        raise PresentationError("tau must be an endomorphism of H")
    if not tau.compose(tau).fixes_generators().passed:
        raise PresentationError("tau does not have order 2")
    K = H.K
    gname = _fresh("g", set(H.alphabet.names))
    alpha = Alphabet(tuple(H.alphabet.names) + (gname,))
    g = NCPolynomial.gen(alpha, gname, K)
    rels = [_remap_poly(r, alpha, 0) for r in H.relations] + [g * g - 1]
    for x in H.alphabet.names:
        rels.append(g * NCPolynomial.gen(alpha, x, K) - _remap_poly(tau.images[x], alpha, 0) * g)
    delta = {x: H.delta[x] for x in H.alphabet.names}
    delta[gname] = Tensor2.simple(g, g)
    counit = {**H.counit, gname: K(1)}
    anti = {x: _remap_poly(H.antipode[x], alpha, 0) for x in H.alphabet.names}
    anti[gname] = g
    return PresentedHopf(alpha, rels, delta, counit, anti, K, f"{H.name} x| kZ2", cap or H.cap)


# -- the smash product isomorphism ---------------------------------------------------


def smash_maps(E, K: Scalars = QQ, cap: int = 4):
    """(X, Y, phi, psi, tau): X = H(F) x| kZ2, Y = B(E) * kZ2 with F = E^t E^-1."""
    E = matrix(E, K)
    n = len(E)
    tau = tau_automorphism(E, K, cap)
    X = crossed_product_z2(tau.source, tau, cap)
    Y = free_product(bilinear_form_hopf(E, K, cap), group_z2(K, cap), cap)
    Et = transpose(E)
    Eti = mat_inv(Et, K)
    a = _mat_gens(Y.alphabet, "a", n, K)
    gY = NCPolynomial.gen(Y.alphabet, "g", K)
    ga = [[gY * a[i][j] for j in range(n)] for i in range(n)]
    v_img = _pmul(_pmul(Et, ga), Eti)
    phi = {"g": gY}
    psi = {"g": NCPolynomial.gen(X.alphabet, "g", K)}
    gX = psi["g"]
    u = _mat_gens(X.alphabet, "u", n, K)
    for i in range(n):
        for j in range(n):
            phi[X.alphabet.names[i * n + j]] = a[i][j] * gY
            phi[X.alphabet.names[n * n + i * n + j]] = v_img[i][j]
            psi[Y.alphabet.names[i * n + j]] = u[i][j] * gX
    return X, Y, GenMap(X, Y, phi, "phi"), GenMap(Y, X, psi, "psi"), tau


def verify_smash_iso(E, cap: int = 4, K: Scalars = QQ, maps=None) -> CheckReport:
    """Both maps well-defined and coalgebra maps; both composites fix generators."""
    if cap < 4:
        raise PresentationError("relation images reach degree 4; use cap >= 4")
    X, Y, phi, psi, tau = maps or smash_maps(E, K, cap)
    rep = CheckReport(f"H(F) x| kZ2 = B(E) * kZ2 to degree {cap}")
    rep.extend(tau.compose(tau).fixes_generators(), "tau^2 = id: ")
    rep.extend(phi.well_defined(), "phi: ")
    rep.extend(psi.well_defined(), "psi: ")
    rep.extend(phi.coalgebra_compatible(), "phi: ")
    rep.extend(psi.coalgebra_compatible(), "psi: ")
    rep.extend(psi.compose(phi).fixes_generators(), "psi.phi: ")
    rep.extend(phi.compose(psi).fixes_generators(), "phi.psi: ")
    return rep


# -- the B_+(E) sequence ---------------------------------------------------------


def bplus_sequence_check(E, cap: int = DEFAULT_CAP, K: Scalars = QQ) -> CheckReport:
    """p : B(E) -> kZ2, a_ij |-> delta_ij g: Hopf map, cocentral, grading, surjective."""
    B = bilinear_form_hopf(E, K, cap)
    Z = group_z2(K, cap)
    n = len(matrix(E, K))
    g = Z.gen("g")
    zero = NCPolynomial({}, Z.alphabet, K)
    images = {B.alphabet.names[i * n + j]: (g if i == j else zero) for i in range(n) for j in range(n)}
    p = GenMap(B, Z, images, "p")
    rep = CheckReport(f"k -> B+(E) -> B(E) -> kZ2 -> k to degree {cap}")
    rep.extend(p.well_defined(), "p: ")
    rep.extend(p.coalgebra_compatible(), "p: ")
    ok_S = all(
        Z.normal_form(p(B.antipode[x]) - Z.antipode_poly(p(B.gen(x)))).is_zero() for x in B.alphabet.names
    )
    rep.add("p commutes with S on generators", ok_S)
    # cocentrality: p(x_(1)) (x) x_(2) = p(x_(2)) (x) x_(1), in kZ2 (x) B(E)
    bad = []
    for x in B.alphabet.names:
        lhs, rhs = Tensor2({}, K), Tensor2({}, K)
        for (a, b), c in B.delta[x].terms.items():
            pa, pb = p(B.poly({a: 1})), p(B.poly({b: 1}))
            lhs = lhs + Tensor2({k: c * v for k, v in Tensor2.simple(pa, B.poly({b: 1})).terms.items()}, K)
            rhs = rhs + Tensor2({k: c * v for k, v in Tensor2.simple(pb, B.poly({a: 1})).terms.items()}, K)
        if not Z.reduce_tensor(lhs - rhs, B).is_zero():
            bad.append(x)
    rep.add("p cocentral on generators", not bad, witness=bad[:1] or None)
    odd = [repr(r) for r in B.relations if len({len(w) % 2 for w in r.terms}) > 1]
    rep.add("relations even (Z2-graded)", not odd, witness=odd[:1] or None)
    rep.add("p surjective (g attained)", Z.normal_form(p(B.gen(B.alphabet.names[0])) - g).is_zero())
    # p on even normal words is eps . 1
    bad_even = []
    for w in B.rewriting.normal_words(cap):
        if len(w) % 2:
            continue
        word = B.poly({w: 1})
        diff = Z.normal_form(p(word) - NCPolynomial.const(Z.alphabet, B.counit_poly(word), K))
        if not diff.is_zero():
            bad_even.append(B.alphabet.show(w))
    rep.add("p = eps 1 on even normal words", not bad_even, witness=bad_even[:1] or None)
    rep.notes.append("exactness of the infinite-dimensional sequence (kernels, coinvariants) is not decided")
    return rep


def check_all(H: PresentedHopf) -> CheckReport:
    return hopf_axiom_check_to_cap(H)
