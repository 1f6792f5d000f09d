"""Hopf algebras given by generators and relations, checked up to a cap."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..checks import CheckReport
from .ncpoly import Alphabet, NCPolynomial, PresentationError, Scalars, Tensor2, add_into
from .rewriting import RewriteSystem, complete_to_cap

DEFAULT_CAP = 3


@dataclass(eq=False)
class PresentedHopf:
    """Generators, relations and structure maps on generators.

    ``delta[x]`` is a :class:`Tensor2`, ``counit[x]`` a scalar and
    ``antipode[x]`` a polynomial; all three are extended multiplicatively
    (the antipode anti-multiplicatively).
    """

    alphabet: Alphabet
    relations: list
    delta: dict
    counit: dict
    antipode: dict
    K: Scalars
    name: str = ""
    cap: int = DEFAULT_CAP
    _rs: RewriteSystem | None = field(default=None, repr=False)

    def __post_init__(self):
        missing = [x for x in self.alphabet.names if x not in self.delta or x not in self.counit or x not in self.antipode]
        if missing:
            raise PresentationError(f"structure maps missing on {missing}")

    def gen(self, name: str) -> NCPolynomial:
        return NCPolynomial.gen(self.alphabet, name, self.K)

    def poly(self, terms) -> NCPolynomial:
        return NCPolynomial(terms, self.alphabet, self.K)

    def with_cap(self, cap: int) -> "PresentedHopf":
        return PresentedHopf(self.alphabet, self.relations, self.delta, self.counit, self.antipode, self.K, self.name, cap)

    @property
    def rewriting(self) -> RewriteSystem:
        if self._rs is None or self._rs.cap != self.cap:
            self._rs = complete_to_cap(self.alphabet, self.K, self.relations, self.cap)
        return self._rs

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        return self.rewriting.normal_form(p)

    def reduce_tensor(self, t: Tensor2, other: "PresentedHopf | None" = None) -> Tensor2:
        """Normal form in H (x) other (both legs reduced independently)."""
        right = (other or self).rewriting
        left = self.rewriting
        out: dict = {}
        for (a, b), c in t.terms.items():
            la, rb = left.nf_word(a), right.nf_word(b)
            for x, cx in la.items():
                for y, cy in rb.items():
                    k = (x, y)
                    out[k] = self.K(out.get(k, 0) + c * cx * cy)
        return Tensor2(out, self.K)

    # -- structure maps on words and polynomials ------------------------------

    def _one_tensor(self):
        return Tensor2({((), ()): self.K(1)}, self.K)

    def delta_word(self, w) -> Tensor2:
        t = self._one_tensor()
        for i in w:
            t = t * self.delta[self.alphabet.names[i]]
        return t

    def delta_poly(self, p: NCPolynomial) -> Tensor2:
        out = Tensor2({}, self.K)
        for w, c in p.terms.items():
            out = out + Tensor2({k: c * v for k, v in self.delta_word(w).terms.items()}, self.K)
        return out

    def counit_poly(self, p: NCPolynomial):
        total = self.K(0)
        for w, c in p.terms.items():
            v = c
            for i in w:
                v = v * self.counit[self.alphabet.names[i]]
            total = self.K(total + v)
        return total

    def antipode_poly(self, p: NCPolynomial) -> NCPolynomial:
        out: dict = {}
        for w, c in p.terms.items():
            img = NCPolynomial.const(self.alphabet, 1, self.K)
            for i in reversed(w):
                img = img * self.antipode[self.alphabet.names[i]]
            add_into(out, img.terms, c, self.K)
        return self.poly(out)

    def multiply_tensor(self, t: Tensor2, left_map=None, right_map=None) -> NCPolynomial:
        """m((f (x) g) t) for polynomial maps f, g (identity by default)."""
        out: dict = {}
        for (a, b), c in t.terms.items():
            pa = self.poly({a: 1}) if left_map is None else left_map(self.poly({a: 1}))
            pb = self.poly({b: 1}) if right_map is None else right_map(self.poly({b: 1}))
            add_into(out, (pa * pb).terms, c, self.K)
        return self.poly(out)


@dataclass(eq=False)
class GenMap:
    """Algebra map given on generators; ``anti`` for anti-homomorphisms."""

    source: PresentedHopf
    target: PresentedHopf
    images: dict
    name: str = ""

    def __call__(self, p: NCPolynomial) -> NCPolynomial:
        T = self.target
        out: dict = {}
        for w, c in p.terms.items():
            img = NCPolynomial.const(T.alphabet, 1, T.K)
            for i in w:
                img = img * self.images[self.source.alphabet.names[i]]
            add_into(out, img.terms, c, T.K)
        return T.poly(out)

    def on_tensor(self, t: Tensor2) -> Tensor2:
        out = Tensor2({}, self.target.K)
        S = self.source
        for (a, b), c in t.terms.items():
            pa, pb = self(S.poly({a: 1})), self(S.poly({b: 1}))
            out = out + Tensor2({k: c * v for k, v in Tensor2.simple(pa, pb).terms.items()}, S.K)
        return out

    def well_defined(self) -> CheckReport:
        """Every source relation maps to zero in the target."""
        rep = CheckReport(f"{self.name or 'map'} well-defined")
        T = self.target
        for k, r in enumerate(self.source.relations):
            res = T.normal_form(self(r))
            rep.add(f"relation {k}: {r!r}", res.is_zero(), witness=None if res.is_zero() else repr(res))
        return rep

    def coalgebra_compatible(self) -> CheckReport:
        rep = CheckReport(f"{self.name or 'map'} coalgebra map on generators")
        S, T = self.source, self.target
        for x in S.alphabet.names:
            img = self.images[x]
            lhs = T.reduce_tensor(T.delta_poly(img))
            rhs = T.reduce_tensor(self.on_tensor(S.delta[x]))
            diff = lhs - rhs
            rep.add(f"Delta({x})", diff.is_zero(), witness=None if diff.is_zero() else diff.show(T.alphabet))
            ok = T.K.is_zero(T.counit_poly(img) - S.counit[x])
            rep.add(f"eps({x})", ok)
        return rep

    def compose(self, other: "GenMap") -> "GenMap":
        """self after other."""
        return GenMap(other.source, self.target, {x: self(other.images[x]) for x in other.source.alphabet.names},
                      f"{self.name}.{other.name}")

    def fixes_generators(self) -> CheckReport:
        """For an endomorphism (or a composite back to the source): x |-> x."""
        rep = CheckReport(f"{self.name or 'map'} is the identity on generators")
        T = self.target
        for x in self.source.alphabet.names:
            diff = T.normal_form(self.images[x] - T.gen(x))
            rep.add(x, diff.is_zero(), witness=None if diff.is_zero() else repr(diff))
        return rep


def hopf_axiom_check_to_cap(H: PresentedHopf) -> CheckReport:
    """Structure maps well-defined on relations; coalgebra and antipode laws on generators."""
    rep = CheckReport(f"Hopf axioms to degree {H.cap}{': ' + H.name if H.name else ''}")
    K = H.K
    bad_delta, bad_eps, bad_S = [], [], []
    for r in H.relations:
        if not H.reduce_tensor(H.delta_poly(r)).is_zero():
            bad_delta.append(repr(r))
        if not K.is_zero(H.counit_poly(r)):
            bad_eps.append(repr(r))
        if not H.normal_form(H.antipode_poly(r)).is_zero():
            bad_S.append(repr(r))
    rep.add("Delta well-defined", not bad_delta, witness=bad_delta[:1] or None)
    rep.add("eps well-defined", not bad_eps, witness=bad_eps[:1] or None)
    rep.add("S well-defined (anti-multiplicative)", not bad_S, witness=bad_S[:1] or None)

    bad_coassoc, bad_counit, bad_anti = [], [], []
    one = NCPolynomial.const(H.alphabet, 1, K)
    for x in H.alphabet.names:
        d = H.delta[x]
        # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta, as triple tensors
        left, right = {}, {}
        for (a, b), c in d.terms.items():
            for (p, q), e in H.delta_word(a).terms.items():
                k = (p, q, b)
                left[k] = K(left.get(k, 0) + c * e)
            for (p, q), e in H.delta_word(b).terms.items():
                k = (a, p, q)
                right[k] = K(right.get(k, 0) + c * e)
        left = {k: v for k, v in left.items() if not K.is_zero(v)}
        right = {k: v for k, v in right.items() if not K.is_zero(v)}
        if _reduce3(H, left) != _reduce3(H, right):
            bad_coassoc.append(x)
        # counit: (eps (x) id) Delta(x) = x = (id (x) eps) Delta(x)
        l_terms, r_terms = {}, {}
        for (a, b), c in d.terms.items():
            add_into(l_terms, {b: 1}, c * H.counit_poly(H.poly({a: 1})), K)
            add_into(r_terms, {a: 1}, c * H.counit_poly(H.poly({b: 1})), K)
        if not (H.normal_form(H.poly(l_terms) - H.gen(x)).is_zero() and H.normal_form(H.poly(r_terms) - H.gen(x)).is_zero()):
            bad_counit.append(x)
        target = one * H.counit[x]
        l = H.normal_form(H.multiply_tensor(d, left_map=H.antipode_poly) - target)
        r = H.normal_form(H.multiply_tensor(d, right_map=H.antipode_poly) - target)
        if not (l.is_zero() and r.is_zero()):
            bad_anti.append(x)
    rep.add("coassociative on generators", not bad_coassoc, witness=bad_coassoc[:1] or None)
    rep.add("counit on generators", not bad_counit, witness=bad_counit[:1] or None)
    rep.add("antipode identity on generators", not bad_anti, witness=bad_anti[:1] or None)
    return rep


def _reduce3(H: PresentedHopf, terms: dict) -> dict:
    rs, K = H.rewriting, H.K
    out: dict = {}
    for (a, b, c), v in terms.items():
        for x, cx in rs.nf_word(a).items():
            for y, cy in rs.nf_word(b).items():
                for z, cz in rs.nf_word(c).items():
                    k = (x, y, z)
                    out[k] = K(out.get(k, 0) + v * cx * cy * cz)
    return {k: v for k, v in out.items() if not K.is_zero(v)}
