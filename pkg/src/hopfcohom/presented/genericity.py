"""Genericity of an asymmetry F, decided from t = tr F . tr F^-1.

F is generic when no root of q^2 - sqrt(t) q + 1 is a root of unity of
order >= 3.  A primitive m-th root q gives sqrt(t) = q + 1/q = 2 cos(2 pi k/m).
For rational t, sqrt(t) has degree <= 2 over Q, so q has degree <= 4 and
phi(m) <= 4.  The finitely many excluded values are tabulated below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constructions import mat_inv, matrix, trace
from .ncpoly import QQ, PresentationError


def _euler_phi(m: int) -> int:
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def excluded_table(max_order: int = 12) -> dict:
    """{t: sorted orders m >= 3} for rational t = (q + 1/q)^2, q a primitive m-th root."""
    table: dict = {}
    for m in range(3, max_order + 1):
        for k in range(1, m):
            if math.gcd(k, m) != 1:
                continue
            t = (2 * math.cos(2 * math.pi * k / m)) ** 2
            # t is an algebraic integer: rational means integer
            r = round(t)
            if abs(t - r) < 1e-9:
                table.setdefault(r, set()).add(m)
    return {t: sorted(ms) for t, ms in sorted(table.items())}


def _rational_orders() -> dict:
    # phi(m) >= sqrt(m / 2), so m <= 32 covers every phi(m) <= 4
    top = max(m for m in range(1, 33) if _euler_phi(m) <= 4)
    return excluded_table(top)


EXCLUDED = _rational_orders()


GENERIC = "generic"
NOT_GENERIC = "normalizable-not-generic"
NOT_NORMALIZABLE = "not-normalizable"


@dataclass
class GenericityVerdict:
    t: Fraction | None
    verdict: str
    explanation: str
    orders: list

    @property
    def generic(self) -> bool:
        return self.verdict == GENERIC

    @property
    def normalizable(self) -> bool:
        return self.verdict != NOT_NORMALIZABLE

    def to_dict(self) -> dict:
        return {
            "t": None if self.t is None else str(self.t),
            "verdict": self.verdict,
            "explanation": self.explanation,
            "orders": list(self.orders),
        }


def _describe(orders) -> str:
    return " or ".join(str(m) for m in orders)


def genericity_check(t=None, F=None) -> GenericityVerdict:
    """Verdict from a rational t, or from an invertible matrix F."""
    if (t is None) == (F is None):
        raise PresentationError("give exactly one of t and F")
    if F is not None:
        F = matrix(F, QQ)
        a, b = trace(F, QQ), trace(mat_inv(F, QQ), QQ)
        if (a == 0) != (b == 0):
            return GenericityVerdict(None, NOT_NORMALIZABLE, "not normalizable (exactly one of tr F, tr F^-1 vanishes)", [])
        t = a * b
    if isinstance(t, float):
        raise PresentationError("t must be given exactly (int, Fraction or 'p/q' string)")
    try:
        t = Fraction(t)
    except (TypeError, ValueError):
        raise PresentationError(f"unsupported value for t: {t!r}") from None
    orders = EXCLUDED.get(t, []) if t.denominator == 1 else []
    if orders:
        return GenericityVerdict(t, NOT_GENERIC, f"not generic (order {_describe(orders)} root of unity)", orders)
    if t < 0:
        return GenericityVerdict(t, GENERIC, "generic (sqrt(t) is not real, so |q| != 1)", [])
    return GenericityVerdict(t, GENERIC, "generic", [])
