"""Finite groups by Cayley table, with the builtin families used as fixtures."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

MAX_ORDER = 24


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class Group:
    """Cayley table ``table[a][b] = index of a*b``; element 0 need not be e."""

    table: tuple
    labels: tuple
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in row) for row in self.table))
        if len(self.labels) != n or any(len(row) != n for row in self.table):
            raise GroupError("Cayley table must be square and match the labels")
        if any(not 0 <= x < n for row in self.table for x in row):
            raise GroupError("Cayley table entries out of range")
        t = self.table
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"not associative at {self.labels[a]}, {self.labels[b]}, {self.labels[c]}")
        ids = [e for e in range(n) if all(t[e][a] == a and t[a][e] == a for a in range(n))]
        if not ids:
            raise GroupError("no identity element")
        e = ids[0]
        for a in range(n):
            if not any(t[a][b] == e and t[b][a] == e for b in range(n)):
                raise GroupError(f"{self.labels[a]} has no inverse")

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return self.order

    @cached_property
    def identity(self) -> int:
        t = self.table
        return next(e for e in range(self.order) if all(t[e][a] == a for a in range(self.order)))

    @cached_property
    def inverses(self) -> tuple:
        t, e = self.table, self.identity
        return tuple(next(b for b in range(self.order) if t[a][b] == e) for a in range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def power(self, a: int, k: int) -> int:
        acc = self.identity
        for _ in range(k % self.element_order(a)):
            acc = self.mul(acc, a)
        return acc

    def element_order(self, a: int) -> int:
        acc, k = a, 1
        while acc != self.identity:
            acc = self.mul(acc, a)
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order))

    @cached_property
    def exponent(self) -> int:
        from math import lcm

        out = 1
        for a in range(self.order):
            out = lcm(out, self.element_order(a))
        return out

    def subgroup_generated(self, gens) -> list[int]:
        elems = {self.identity}
        frontier = [self.identity]
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = self.mul(a, g)
                if b not in elems:
                    elems.add(b)
                    frontier.append(b)
        return sorted(elems)

    def is_normal(self, sub) -> bool:
        sub = set(sub)
        inv = self.inverses
        return all(self.mul(self.mul(g, h), inv[g]) in sub for g in range(self.order) for h in sub)

    def is_homomorphism(self, other: "Group", images) -> bool:
        return all(
            images[self.mul(a, b)] == other.mul(images[a], images[b])
            for a in range(self.order)
            for b in range(self.order)
        )


def _from_elements(elems, mul, label, name) -> Group:
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return Group(tuple(table), tuple(label(x) for x in elems), name)


def cyclic(n: int, gen: str = "h") -> Group:
    """Z_n = <gen>; element k is gen^k, element 0 is the identity."""
    if not 1 <= n <= MAX_ORDER:
        raise GroupError(f"cyclic group order must be in 1..{MAX_ORDER}")

    def label(k):
        return "e" if k == 0 else (gen if k == 1 else f"{gen}^{k}")

    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, label, f"Z{n}")


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n: r^k s^f with s r s = r^-1."""
    if not 1 <= 2 * n <= MAX_ORDER:
        raise GroupError(f"dihedral group order must be <= {MAX_ORDER}")
    elems = [(k, f) for f in range(2) for k in range(n)]

    def mul(a, b):
        k1, f1 = a
        k2, f2 = b
        return ((k1 + (-k2 if f1 else k2)) % n, (f1 + f2) % 2)

    def label(x):
        k, f = x
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if f else ""
        return (r + s) or "e"

    return _from_elements(elems, mul, label, f"D{n}")


def _cycle_label(perm) -> str:
    n = len(perm)
    seen = set()
    parts = []
    for i in range(n):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + "".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> Group:
    """S_n, n <= 4, product (s*t)(x) = s(t(x)); identity first."""
    if not 1 <= n <= 4:
        raise GroupError("symmetric groups are builtin only for n <= 4")
    elems = list(itertools.permutations(range(n)))

    def mul(s, t):
        return tuple(s[t[x]] for x in range(n))

    return _from_elements(elems, mul, _cycle_label, f"S{n}")


def from_table(table, labels=None, name="G") -> Group:
    n = len(table)
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds {MAX_ORDER}")
    return Group(tuple(tuple(r) for r in table), tuple(labels or [f"g{i}" for i in range(n)]), name)


def builtin(kind: str, n: int) -> Group:
    kinds = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
    if kind not in kinds:
        raise GroupError(f"unknown builtin group {kind!r}")
    return kinds[kind](n)


def sign(perm_group: Group) -> list[int]:
    """Images (0 = even, 1 = odd) of the sign character of S_n as built above."""
    out = []
    for lab in perm_group.labels:
        if lab == "e":
            out.append(0)
            continue
        cycles = lab[1:-1].split(")(")
        out.append(sum(len(c) - 1 for c in cycles) % 2)
    return out
