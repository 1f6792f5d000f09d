"""Exact scalar fields: Q, F_p and simple extensions K[x]/(f).

Arrays of field elements are plain numpy arrays with one trailing axis of
length ``d`` (the extension degree) holding the coordinates in the power
basis 1, x, ..., x^(d-1).  Characteristic-p arrays are ``int64`` reduced
mod p; characteristic-0 arrays are ``object`` arrays of ``Fraction``.
All vectorised arithmetic goes through the :class:`FieldSpec` methods.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


_INT_LIMIT = 2**62


def _scaled_int(a):
    """Fraction array -> (int64 array, common denominator), or None."""
    flat = a.ravel()
    den = 1
    for x in flat:
        q = x.denominator
        if den % q:
            den = den * q // np.gcd(den, q)
    ints = np.fromiter((int(x * den) if den != 1 else int(x) for x in flat), dtype=object, count=flat.size)
    top = max((abs(v) for v in ints), default=0)
    if top >= 2**31:
        return None
    return ints.astype(np.int64).reshape(a.shape), den, top


def _scaled_int_einsum(subscripts, *ops):
    """Exact rational einsum through int64 when no overflow is possible."""
    if any(o.size == 0 for o in ops):
        return None
    scaled = [_scaled_int(o) for o in ops]
    if any(x is None for x in scaled):
        return None
    lhs, out = subscripts.split("->")
    subs = lhs.split(",")
    sizes = {c: o.shape[k] for s_, o in zip(subs, ops) for k, c in enumerate(s_)}
    bound = 1
    for c in set(sizes) - set(out):
        bound *= sizes[c]
    den = 1
    for _, d_, top in scaled:
        bound *= max(top, 1)
        den *= d_
    if bound >= _INT_LIMIT:
        return None
    r = np.asarray(np.einsum(subscripts, *(x[0] for x in scaled), optimize=True))
    if den == 1:
        # python ints are valid rational entries (Fraction-compatible)
        return r.astype(object)
    return np.vectorize(lambda v: Fraction(int(v), den), otypes=[object])(r) if r.size else r.astype(object)


class FieldError(ValueError):
    """Malformed field description or mismatched operands."""


# ----------------------------------------------------------------------
# base-ring helpers (Q or F_p), scalars are Fraction or int
# ----------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class _Base:
    def __init__(self, p: int | None):
        self.p = p

    def norm(self, c):
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % self.p == 0:
                raise ZeroDivisionError(f"{c} has denominator divisible by {self.p}")
            return (c.numerator * pow(c.denominator, -1, self.p)) % self.p
        return int(c) % self.p

    def inv(self, c):
        if c == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(c)
        return pow(int(c), -1, self.p)

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    # dense polynomials, low -> high, trailing zeros stripped

    def ptrim(self, a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return a

    def psub(self, a, b):
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        b = list(b) + [0] * (n - len(b))
        return self.ptrim([self.add(x, self.neg(y)) for x, y in zip(a, b)])

    def pmul(self, a, b):
        if not a or not b:
            return []
        out = [self.norm(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = self.add(out[i + j], self.mul(x, y))
        return self.ptrim(out)

    def pdivmod(self, a, b):
        a = self.ptrim(a)
        b = self.ptrim(b)
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        q = [self.norm(0)] * max(len(a) - len(b) + 1, 1)
        lead_inv = self.inv(b[-1])
        while len(a) >= len(b) and a:
            c = self.mul(a[-1], lead_inv)
            shift = len(a) - len(b)
            q[shift] = c
            a = self.psub(a, [self.norm(0)] * shift + [self.mul(c, y) for y in b])
        return self.ptrim(q), a

    def pgcd(self, a, b):
        a, b = self.ptrim(a), self.ptrim(b)
        while b:
            a, b = b, self.pdivmod(a, b)[1]
        if a:
            c = self.inv(a[-1])
            a = [self.mul(c, x) for x in a]
        return a

    def pderiv(self, a):
        return self.ptrim([self.mul(self.norm(i), x) for i, x in enumerate(a)][1:])

    def peval(self, a, x):
        acc = self.norm(0)
        for c in reversed(a):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def pinvmod(self, a, m):
        """Inverse of a modulo m via the extended Euclidean algorithm."""
        r0, r1 = self.ptrim(m), self.ptrim(a)
        s0, s1 = [], [self.norm(1)]
        while r1:
            q, r = self.pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.psub(s0, self.pmul(q, s1))
        if len(r0) != 1:
            raise ZeroDivisionError("element is not invertible modulo the given polynomial")
        c = self.inv(r0[0])
        return self.pdivmod([self.mul(c, x) for x in s0], m)[1]


# ----------------------------------------------------------------------
# polynomial text parsing shared by field and element syntax
# ----------------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*([^+-]+)")


def _parse_poly(text: str, var: str) -> dict[int, Fraction]:
    """Parse ``2*x^2 - 1/3*x + 1/2`` into {degree: Fraction}."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise FieldError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out: dict[int, Fraction] = {}
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise FieldError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        coef = Fraction(1)
        deg = 0
        for factor in body.split("*"):
            factor = factor.strip("()")
            if factor == var:
                deg += 1
            elif factor.startswith(var + "^") and factor[len(var) + 1:].isdigit():
                deg += int(factor[len(var) + 1:])
            else:
                try:
                    coef *= Fraction(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise FieldError(f"cannot parse {factor!r} in {text!r}") from exc
        out[deg] = out.get(deg, Fraction(0)) + sign * coef
    if pos != len(s):
        raise FieldError(f"cannot parse {text!r}")
    return out


_ALIASES = {
    "F2": "Fp(2)",
    "F3": "Fp(3)",
    "F5": "Fp(5)",
    "F7": "Fp(7)",
    "F4": "Fp(2)[x]/(x^2+x+1)",
    "F9": "Fp(3)[x]/(x^2+1)",
    "Q[i]": "Q[i]/(i^2+1)",
    "QQ": "Q",
}

_SPEC_RE = re.compile(r"^(Q|Fp\((\d+)\))(?:\[([A-Za-z]\w*)\]/\((.+)\))?$")


# ----------------------------------------------------------------------
# FieldSpec
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: ``Q``, ``F_p`` or ``base[var]/(modulus)``.

    ``modulus`` holds the monic defining polynomial low -> high, as base
    scalars.  Irreducibility is verified for degree <= 3; higher degrees
    are accepted with ``irreducibility_checked = False``.
    """

    p: int | None = None
    modulus: tuple | None = None
    var: str = "x"

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.modulus is not None:
            base = _Base(self.p)
            mod = tuple(base.norm(c) for c in self.modulus)
            mod = tuple(base.ptrim(mod))
            if len(mod) < 3:
                raise FieldError("extension modulus must have degree >= 2")
            if mod[-1] != 1:
                raise FieldError("extension modulus must be monic")
            object.__setattr__(self, "modulus", mod)
            if not self._squarefree_and_rootless(mod):
                raise FieldError(f"modulus {self._poly_str(mod)} is reducible")

    # -- construction ---------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p=p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``Q``, ``Fp(5)``, ``Fp(2)[x]/(x^2+x+1)``, ``Q[x]/(x^2+1)``.

        Short aliases ``F2``, ``F3``, ``F4``, ``Q[i]`` ... are accepted too.
        """
        s = text.strip().replace(" ", "")
        s = _ALIASES.get(s, s)
        m = _SPEC_RE.match(s)
        if m is None:
            raise FieldError(f"unrecognised field {text!r}")
        p = int(m.group(2)) if m.group(2) else None
        if m.group(3) is None:
            return cls(p=p)
        var = m.group(3)
        terms = _parse_poly(m.group(4), var)
        deg = max(terms)
        coeffs = [Fraction(0)] * (deg + 1)
        for k, c in terms.items():
            coeffs[k] += c
        return cls(p=p, modulus=tuple(coeffs), var=var)

    # -- basic invariants ------------------------------------------------

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else len(self.modulus) - 1

    d = degree

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def size(self) -> int | None:
        return None if self.p is None else self.p ** self.degree

    @property
    def dtype(self):
        return object if self.p is None else np.int64

    @cached_property
    def base(self) -> _Base:
        return _Base(self.p)

    @cached_property
    def irreducibility_checked(self) -> bool:
        return self.modulus is None or self.degree <= 3

    def _squarefree_and_rootless(self, mod) -> bool:
        base = _Base(self.p)
        deriv = base.pderiv(mod)
        if deriv and len(base.pgcd(mod, deriv)) > 1:
            return False
        n = len(mod) - 1
        if n > 3:
            return True
        # degree 2 and 3: irreducible iff no root in the base field
        if self.p is not None:
            return all(base.peval(mod, x) != 0 for x in range(self.p))
        return not _rational_roots(mod)

    def __str__(self) -> str:
        if self.p is None:
            head = "Q"
        else:
            head = f"Fp({self.p})"
        if self.modulus is None:
            return head
        return f"{head}[{self.var}]/({self._poly_str(self.modulus)})"

    def _poly_str(self, coeffs) -> str:
        terms = []
        for k in range(len(coeffs) - 1, -1, -1):
            c = coeffs[k]
            if c == 0:
                continue
            neg = self.p is None and c < 0
            c = -c if neg else c
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and c == 1:
                t = mono
            elif mono:
                t = f"{c}*{mono}"
            else:
                t = str(c)
            terms.append(("-" if neg else "+") + t)
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out

    # -- multiplication table of the power basis -------------------------

    @cached_property
    def mult_table(self) -> np.ndarray:
        """T[i, j, k] with x^i * x^j = sum_k T[i, j, k] x^k."""
        d = self.degree
        T = np.zeros((d, d, d), dtype=self.dtype)
        if self.p is None:
            T[...] = Fraction(0)
        base = self.base
        for i in range(d):
            for j in range(d):
                mono = [base.norm(0)] * (i + j) + [base.norm(1)]
                r = base.pdivmod(mono, list(self.modulus))[1] if self.modulus else mono
                for k, c in enumerate(r):
                    T[i, j, k] = c
        return T

    # -- scalar elements -------------------------------------------------

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self._coerce(value))

    def _coerce(self, value) -> tuple:
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldError(f"element of {value.spec} used in {self}")
            return value.coeffs
        if isinstance(value, str):
            return self.parse_coeffs(value)
        if isinstance(value, np.ndarray):
            if value.shape != (self.degree,):
                raise FieldError(f"bad coordinate vector shape {value.shape}")
            return tuple(self.base.norm(c) for c in value)
        if isinstance(value, (tuple, list)):
            if len(value) != self.degree:
                raise FieldError(f"expected {self.degree} coordinates")
            return tuple(self.base.norm(c) for c in value)
        if isinstance(value, (int, Fraction, np.integer)):
            return (self.base.norm(int(value) if isinstance(value, np.integer) else value),) + (
                self.base.norm(0),
            ) * (self.degree - 1)
        raise FieldError(f"cannot convert {value!r} to an element of {self}")

    def parse_coeffs(self, text: str) -> tuple:
        terms = _parse_poly(text, self.var)
        base = self.base
        poly = [base.norm(0)] * (max(terms) + 1)
        for k, c in terms.items():
            poly[k] = base.add(poly[k], base.norm(c))
        poly = base.ptrim(poly)
        if self.modulus is not None:
            poly = base.pdivmod(poly, list(self.modulus))[1]
        elif len(poly) > 1:
            raise FieldError(f"{text!r} is not an element of {self}")
        poly = list(poly) + [base.norm(0)] * (self.degree - len(poly))
        return tuple(poly)

    def format_coeffs(self, coeffs) -> str:
        return self._poly_str(tuple(coeffs))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def gen(self) -> "FieldElement":
        """The class of ``var`` (only for proper extensions)."""
        if self.modulus is None:
            raise FieldError(f"{self} has no adjoined generator")
        return self(self.var)

    def elements(self) -> list["FieldElement"]:
        """All elements of a finite field, in code order."""
        if not self.is_finite:
            raise FieldError("cannot enumerate an infinite field")
        return [self.from_code(c) for c in range(self.size)]

    # scalar arithmetic on coefficient tuples

    def _smul(self, a: tuple, b: tuple) -> tuple:
        base = self.base
        prod = base.pmul(list(a), list(b))
        if self.modulus is not None and prod:
            prod = base.pdivmod(prod, list(self.modulus))[1]
        prod = list(prod) + [base.norm(0)] * (self.degree - len(prod))
        return tuple(prod)

    def _sinv(self, a: tuple) -> tuple:
        base = self.base
        if all(c == 0 for c in a):
            raise ZeroDivisionError(f"division by zero in {self}")
        if self.modulus is None:
            return (base.inv(a[0]),)
        r = base.pinvmod(base.ptrim(list(a)), list(self.modulus))
        return tuple(list(r) + [base.norm(0)] * (self.degree - len(r)))

    # codes for finite fields: sum c_i p^i

    def to_code(self, coeffs) -> int:
        return int(sum(int(c) * self.p ** i for i, c in enumerate(coeffs)))

    def from_code(self, code: int) -> "FieldElement":
        cs = []
        for _ in range(self.degree):
            code, r = divmod(code, self.p)
            cs.append(r)
        return FieldElement(self, tuple(cs))

    # ------------------------------------------------------------------
    # array API
    # ------------------------------------------------------------------

    def zeros(self, shape) -> np.ndarray:
        if isinstance(shape, int):
            shape = (shape,)
        a = np.zeros(tuple(shape) + (self.degree,), dtype=self.dtype)
        if self.p is None:
            a[...] = Fraction(0)
        return a

    def scalar(self, value) -> np.ndarray:
        """Coordinate vector (shape (d,)) of a scalar."""
        return np.array(self._coerce(value), dtype=self.dtype)

    def from_ints(self, ints) -> np.ndarray:
        """Embed an integer (or Fraction) array."""
        ints = np.asarray(ints, dtype=object)
        out = self.zeros(ints.shape)
        if self.p is None:
            out[..., 0] = np.vectorize(Fraction, otypes=[object])(ints) if ints.size else ints
        else:
            out[..., 0] = np.vectorize(self.base.norm, otypes=[object])(ints).astype(np.int64) if ints.size else 0
        return out

    def eye(self, n: int) -> np.ndarray:
        return self.from_ints(np.eye(n, dtype=np.int64).astype(object))

    def asarray(self, nested) -> np.ndarray:
        """Array from nested lists of anything ``self(.)`` accepts."""
        raw = np.asarray(nested, dtype=object)
        out = self.zeros(raw.shape)
        for idx in np.ndindex(raw.shape):
            out[idx] = self._coerce(raw[idx])
        return out

    def to_strings(self, arr) -> list:
        """Nested lists of element strings (for JSON)."""
        arr = np.asarray(arr)
        lead = arr.shape[:-1]
        flat = [self.format_coeffs(arr[idx]) for idx in np.ndindex(lead)]
        if not lead:
            return flat[0]
        return np.array(flat, dtype=object).reshape(lead).tolist()

    def element(self, vec) -> "FieldElement":
        return FieldElement(self, tuple(self.base.norm(c) for c in vec))

    def check(self, arr) -> np.ndarray:
        if arr.shape[-1:] != (self.degree,):
            raise FieldError(f"array trailing axis {arr.shape[-1:]} does not match degree {self.degree}")
        return arr

    def _red(self, a):
        return a if self.p is None else a % self.p

    def add(self, a, b):
        return self._red(a + b)

    def sub(self, a, b):
        return self._red(a - b)

    def neg(self, a):
        return self._red(-a)

    def mul(self, a, b):
        """Elementwise product with numpy broadcasting over leading axes."""
        if self.degree == 1:
            return self._red(a * b)
        return self._red(np.einsum("...i,...j,ijk->...k", a, b, self.mult_table))

    def smul(self, c, a):
        """Scalar (shape (d,)) times array."""
        c = np.asarray(c, dtype=self.dtype)
        return self.mul(c, a)

    def iszero(self, a) -> np.ndarray:
        return np.all(a == 0, axis=-1)

    def is_zero_array(self, a) -> bool:
        return bool(np.all(a == 0))

    def equal(self, a, b) -> bool:
        return a.shape == b.shape and bool(np.all(a == b))

    def inv(self, c) -> np.ndarray:
        return np.array(self._sinv(tuple(c)), dtype=self.dtype)

    def _safe_int_dot(self, n_terms: int) -> bool:
        return self.p is not None and n_terms * (self.p - 1) ** 2 < 2**62

    def matmul(self, a, b):
        """(m, n, d) @ (n, l, d) -> (m, l, d)."""
        if self.degree == 1:
            x, y = a[..., 0], b[..., 0]
            if self.p is not None and not self._safe_int_dot(a.shape[-2]):
                out = (x.astype(object) @ y.astype(object)) % self.p
                return out.astype(np.int64)[..., None]
            return self._red(x @ y)[..., None]
        d = self.degree
        out = None
        T = self.mult_table
        for i in range(d):
            for j in range(d):
                prod = self._red(a[..., i] @ b[..., j])
                for k in range(d):
                    if T[i, j, k] == 0:
                        continue
                    term = T[i, j, k] * prod
                    if out is None:
                        out = self.zeros(prod.shape)
                    out[..., k] = self._red(out[..., k] + term)
        return out

    def einsum(self, subscripts: str, *operands) -> np.ndarray:
        """Einstein summation over field arrays (trailing axis implicit).

        Operands are contracted pairwise from the left; lowercase letters
        only, the letters ``XYZ`` are reserved.
        """
        lhs, out = subscripts.replace(" ", "").split("->")
        ins = lhs.split(",")
        if len(ins) != len(operands):
            raise FieldError("subscript/operand count mismatch")
        cur, cur_s = operands[0], ins[0]
        if len(operands) == 1:
            return self._red(np.einsum(f"{cur_s}X->{out}X", cur))
        for k in range(1, len(operands)):
            nxt, nxt_s = operands[k], ins[k]
            later = set(out).union(*ins[k + 1:]) if k + 1 < len(ins) else set(out)
            keep = "".join(dict.fromkeys(c for c in cur_s + nxt_s if c in later))
            cur = self._pair(cur_s, nxt_s, keep, cur, nxt)
            cur_s = keep
        if cur_s != out:
            cur = np.einsum(f"{cur_s}X->{out}X", cur)
        return cur

    def _pair(self, s1, s2, s3, a, b):
        if self.p is None:
            if self.degree > 1:
                r = _scaled_int_einsum(f"{s1}X,{s2}Y,XYZ->{s3}Z", a, b, self.mult_table)
            else:
                r = _scaled_int_einsum(f"{s1}X,{s2}X->{s3}X", a, b)
            if r is not None:
                return r
        if self.degree > 1:
            # fold the multiplication table into b first: one plain contraction
            b = self._red(np.einsum(f"{s2}Y,XYZ->{s2}XZ", b, self.mult_table))
            a_, s1, s2 = a, s1 + "X", s2 + "XZ"
        else:
            a_, b = a[..., 0], b[..., 0]
        out = f"{s3}Z" if self.degree > 1 else s3
        if self.p is not None:
            shared = set(s1) & set(s2) - set(out)
            n_terms = int(np.prod([a_.shape[s1.index(c)] for c in shared])) if shared else 1
            if not self._safe_int_dot(n_terms):
                r = np.einsum(f"{s1},{s2}->{out}", a_.astype(object), b.astype(object), optimize=True) % self.p
                r = np.asarray(r).astype(np.int64)
                return r if self.degree > 1 else r[..., None]
        r = self._red(np.asarray(np.einsum(f"{s1},{s2}->{out}", a_, b, optimize=True)))
        return r if self.degree > 1 else r[..., None]

    def random(self, shape, rng: np.random.Generator, density: float = 1.0, bound: int = 3) -> np.ndarray:
        """Random array; char-0 entries have small integer coordinates."""
        if isinstance(shape, int):
            shape = (shape,)
        full = tuple(shape) + (self.degree,)
        if self.p is not None:
            a = rng.integers(0, self.p, size=full).astype(np.int64)
        else:
            a = rng.integers(-bound, bound + 1, size=full).astype(object)
            a = np.vectorize(Fraction, otypes=[object])(a) if a.size else a
        if density < 1.0:
            mask = rng.random(tuple(shape)) >= density
            a[mask] = 0
        return a

    # -- codes (finite fields only) -------------------------------------

    @cached_property
    def _code_weights(self) -> np.ndarray:
        return np.array([self.p ** i for i in range(self.degree)], dtype=np.int64)

    def encode(self, a) -> np.ndarray:
        return (np.asarray(a, dtype=np.int64) * self._code_weights).sum(axis=-1)

    def decode(self, codes) -> np.ndarray:
        codes = np.asarray(codes, dtype=np.int64)
        out = np.empty(codes.shape + (self.degree,), dtype=np.int64)
        c = codes.copy()
        for i in range(self.degree):
            out[..., i] = c % self.p
            c //= self.p
        return out

    @cached_property
    def code_tables(self):
        """(add, mul, neg, inv) lookup tables over codes 0..q-1."""
        q = self.size
        allv = self.decode(np.arange(q))
        add = self.encode(self.add(allv[:, None, :], allv[None, :, :]))
        mul = self.encode(self.mul(allv[:, None, :], allv[None, :, :]))
        neg = self.encode(self.neg(allv))
        inv = np.zeros(q, dtype=np.int64)
        for c in range(1, q):
            inv[c] = self.encode(self.inv(allv[c]))
        return add, mul, neg, inv


def _rational_roots(mod) -> list[Fraction]:
    """Rational roots of a rational polynomial (rational root theorem)."""
    coeffs = [Fraction(c) for c in mod]
    den = 1
    for c in coeffs:
        den = den * c.denominator // np.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)
        return [Fraction(0)] + _rational_roots(ints)
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        return [k for k in range(1, n + 1) if n % k == 0]

    base = _Base(None)
    roots = []
    for r in divisors(a0):
        for s in divisors(an):
            for sign in (1, -1):
                x = Fraction(sign * r, s)
                if x not in roots and base.peval([Fraction(c) for c in ints], x) == 0:
                    roots.append(x)
    return roots


# ----------------------------------------------------------------------
# FieldElement
# ----------------------------------------------------------------------


class FieldElement:
    """Immutable scalar in canonical form (power-basis coordinates)."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other) -> tuple:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError(f"field mismatch: {self.spec} vs {other.spec}")
            return other.coeffs
        return self.spec._coerce(other)

    def __add__(self, other):
        b = self.spec.base
        return FieldElement(self.spec, tuple(b.add(x, y) for x, y in zip(self.coeffs, self._other(other))))

    __radd__ = __add__

    def __neg__(self):
        b = self.spec.base
        return FieldElement(self.spec, tuple(b.neg(x) for x in self.coeffs))

    def __sub__(self, other):
        return self + (-FieldElement(self.spec, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self._other(other)) - self

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec._smul(self.coeffs, self._other(other)))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._sinv(self.coeffs))

    def __truediv__(self, other):
        return self * FieldElement(self.spec, self._other(other)).inv()

    def __rtruediv__(self, other):
        return FieldElement(self.spec, self._other(other)) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        acc, base = self.spec.one(), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.coeffs == other.coeffs
        try:
            return self.coeffs == self.spec._coerce(other)
        except (FieldError, ZeroDivisionError, TypeError):
            return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __str__(self):
        return self.spec.format_coeffs(self.coeffs)

    def __repr__(self):
        return f"FieldElement({self}, {self.spec})"

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=self.spec.dtype)


# ----------------------------------------------------------------------
# operations named in the contract
# ----------------------------------------------------------------------


def field_arith(op: str, x: FieldElement, y: FieldElement | None = None) -> FieldElement:
    """``op`` in {add, mul, inv, neg, sub, div}."""
    if y is not None and isinstance(y, FieldElement) and y.spec != x.spec:
        raise FieldError(f"field mismatch: {x.spec} vs {y.spec}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    raise FieldError(f"unknown operation {op!r}")


def _candidate_set(spec: FieldSpec) -> Iterable[FieldElement]:
    if spec.is_finite:
        return spec.elements()
    if spec.degree == 1:
        return [spec(1), spec(-1)]
    vals = sorted({Fraction(n, 2) for n in range(-4, 5)})
    return [spec(c) for c in itertools.product(vals, repeat=spec.degree)]


def nth_roots_of_unity(spec: FieldSpec, n: int) -> list[FieldElement]:
    """All z with z^n = 1 found in ``spec``.

    Finite fields are searched exhaustively.  For Q only +-1 exist.  For
    Q[x]/(f) the search runs over coordinates in {k/2 : |k| <= 4} and the
    result is closed under multiplication, which recovers every root of
    unity of the shipped quadratic fields.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    found = [z for z in _candidate_set(spec) if not z.is_zero() and z ** n == spec.one()]
    if not spec.is_finite and spec.degree > 1:
        changed = True
        while changed:
            changed = False
            for a, b in itertools.product(list(found), repeat=2):
                c = a * b
                if c not in found:
                    found.append(c)
                    changed = True
    uniq = list(dict.fromkeys(found))
    if spec.is_finite:
        uniq.sort(key=lambda z: spec.to_code(z.coeffs))
    else:
        uniq.sort(key=lambda z: tuple(z.coeffs))
    return uniq


def multiplicative_order(z: FieldElement, limit: int = 10_000) -> int:
    one = z.spec.one()
    acc = z
    for k in range(1, limit + 1):
        if acc == one:
            return k
        acc = acc * z
    raise ValueError(f"{z} has no finite order <= {limit}")
