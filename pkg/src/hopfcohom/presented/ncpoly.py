"""Noncommutative polynomials over Q or F_p, words ordered deglex."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Scalars:
    """Coefficient field: the rationals (``p=None``) or F_p."""

    p: int | None = None

    def __call__(self, x):
        if self.p is None:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError(f"{x} is not defined mod {self.p}")
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def is_zero(self, x) -> bool:
        return x == 0 if self.p is None else x % self.p == 0

    def __str__(self):
        return "Q" if self.p is None else f"Fp({self.p})"

    def fmt(self, c) -> str:
        return str(c)


QQ = Scalars()


@dataclass(frozen=True)
class Alphabet:
    """Generator names; list order is the letter order."""

    names: tuple

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise PresentationError("duplicate generator names")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def word(self, *names) -> tuple:
        return tuple(self.index(n) for n in names)

    def show(self, w) -> str:
        return "*".join(self.names[i] for i in w) if w else "1"


def deglex_key(w: tuple):
    return (len(w), w)


def add_into(acc: dict, terms, scale, K: Scalars):
    """acc += scale * terms, dropping zeros."""
    for w, c in terms.items():
        v = K(acc.get(w, 0) + scale * c)
        if K.is_zero(v):
            acc.pop(w, None)
        else:
            acc[w] = v
    return acc


class NCPolynomial:
    """Finite sum of coefficient * word; canonical: merged, nonzero terms."""

    __slots__ = ("terms", "alphabet", "K")

    def __init__(self, terms, alphabet: Alphabet, K: Scalars = QQ):
        self.alphabet, self.K = alphabet, K
        self.terms = add_into({}, dict(terms), 1, K)

    @classmethod
    def gen(cls, alphabet, name, K=QQ):
        return cls({alphabet.word(name): 1}, alphabet, K)

    @classmethod
    def const(cls, alphabet, c, K=QQ):
        return cls({(): c}, alphabet, K)

    def _lift(self, other):
        if isinstance(other, NCPolynomial):
            if other.alphabet != self.alphabet:
                raise PresentationError("polynomials over different alphabets")
            return other
        return NCPolynomial({(): other}, self.alphabet, self.K)

    def __add__(self, other):
        other = self._lift(other)
        return NCPolynomial(add_into(dict(self.terms), other.terms, 1, self.K), self.alphabet, self.K)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self.terms.items()}, self.alphabet, self.K)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPolynomial):
            return NCPolynomial({w: c * other for w, c in self.terms.items()}, self.alphabet, self.K)
        other = self._lift(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            add_into(out, {w1 + w2: c2 for w2, c2 in other.terms.items()}, c1, self.K)
        return NCPolynomial(out, self.alphabet, self.K)

    def __rmul__(self, c):
        return self * c

    def __pow__(self, k: int):
        out = NCPolynomial.const(self.alphabet, 1, self.K)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            other = self._lift(other)
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def leading(self):
        """(word, coefficient) of the deglex-largest term."""
        w = max(self.terms, key=deglex_key)
        return w, self.terms[w]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: deglex_key(t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = self.alphabet.show(w)
            if w and c == 1:
                parts.append(word)
            elif w and c == -1 and self.K.p is None:
                parts.append(f"-{word}")
            else:
                parts.append(f"{c}" if not w else f"{c}*{word}")
        return " + ".join(parts).replace("+ -", "- ")


def gens(alphabet: Alphabet, K: Scalars = QQ) -> dict:
    return {n: NCPolynomial.gen(alphabet, n, K) for n in alphabet.names}


class Tensor2:
    """Element of T(X) (x) T(X) as {(left word, right word): coeff}."""

    __slots__ = ("terms", "K")

    def __init__(self, terms, K: Scalars = QQ):
        self.K = K
        self.terms = {k: v for k, v in terms.items() if not K.is_zero(v)}

    @classmethod
    def simple(cls, left: NCPolynomial, right: NCPolynomial):
        K = left.K
        out: dict = {}
        for w1, c1 in left.terms.items():
            for w2, c2 in right.terms.items():
                out[(w1, w2)] = K(out.get((w1, w2), 0) + c1 * c2)
        return cls(out, K)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = self.K(out.get(k, 0) + v)
        return Tensor2(out, self.K)

    def __sub__(self, other):
        return self + Tensor2({k: -v for k, v in other.terms.items()}, self.K)

    def __mul__(self, other):
        K = self.K
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (x, y), d in other.terms.items():
                k = (a + x, b + y)
                out[k] = K(out.get(k, 0) + c * d)
        return Tensor2(out, K)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.terms == other.terms

    def show(self, left: Alphabet, right: Alphabet | None = None) -> str:
        right = right or left
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (deglex_key(t[0][0]), deglex_key(t[0][1])), reverse=True)
        return " + ".join(f"{c}*{left.show(a)}(x){right.show(b)}" for (a, b), c in items)
