"""Degree-capped completion of noncommutative rewriting systems.

Rules ``lead -> tail`` have tail < lead in deglex, so reductions never
raise length.  Overlaps whose superword is longer than the cap are
skipped; every overlap of length <= cap is resolved, and the final pass
over all of them is recorded as the certificate.  Below the cap normal
forms are therefore unique.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .ncpoly import Alphabet, NCPolynomial, PresentationError, Scalars, add_into, deglex_key

MAX_RULES = 20000
CACHE_ENV = "HOPFCOHOM_CACHE_DIR"


class CompletionError(RuntimeError):
    pass


@dataclass
class Certificate:
    cap: int
    rules: int
    overlaps_checked: int
    overlaps_skipped: int
    passes: int
    checksum: str = ""

    def to_dict(self):
        return dict(self.__dict__)


@dataclass(eq=False)
class RewriteSystem:
    alphabet: Alphabet
    K: Scalars
    cap: int
    rules: dict = field(default_factory=dict)  # lead word -> tail terms
    certificate: Certificate | None = None

    def __post_init__(self):
        self._memo: dict = {}
        self._lens: list = []

    def _changed(self):
        self._memo.clear()
        self._lens = sorted({len(w) for w in self.rules})

    def _match(self, w):
        for i in range(len(w)):
            for L in self._lens:
                if i + L > len(w):
                    break
                if w[i:i + L] in self.rules:
                    return i, L
        return None

    def nf_word(self, w) -> dict:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        m = self._match(w)
        if m is None:
            out = {w: self.K(1)}
        else:
            i, L = m
            pre, post = w[:i], w[i + L:]
            out = {}
            for t, c in self.rules[w[i:i + L]].items():
                add_into(out, self.nf_word(pre + t + post), c, self.K)
        self._memo[w] = out
        return out

    def nf_terms(self, terms) -> dict:
        out: dict = {}
        for w, c in terms.items():
            if len(w) > self.cap:
                raise PresentationError(f"degree {len(w)} above the cap {self.cap}")
            add_into(out, self.nf_word(w), c, self.K)
        return out

    def normal_form(self, p: NCPolynomial) -> NCPolynomial:
        if p.alphabet != self.alphabet:
            raise PresentationError("polynomial over a different alphabet")
        return NCPolynomial(self.nf_terms(p.terms), self.alphabet, self.K)

    def is_normal(self, w) -> bool:
        return self._match(w) is None

    def normal_words(self, max_len: int | None = None) -> list:
        """Irreducible words of length <= max_len, deglex ascending."""
        top = self.cap if max_len is None else max_len
        layer, out = [()], [()]
        for _ in range(top):
            nxt = []
            for w in layer:
                for a in range(len(self.alphabet)):
                    v = w + (a,)
                    # only suffixes can contain a new match
                    if not any(v[len(v) - L:] in self.rules for L in self._lens if L <= len(v)):
                        nxt.append(v)
            out += nxt
            layer = nxt
        return out

    def filtration_dims(self, max_len: int | None = None) -> list[int]:
        """dim of the image of words of length <= d, for d = 0 .. max_len."""
        top = self.cap if max_len is None else max_len
        words = self.normal_words(top)
        return [sum(1 for w in words if len(w) <= d) for d in range(top + 1)]

    # -- completion ---------------------------------------------------------

    def _insert(self, terms) -> bool:
        """Reduce ``terms`` and add it as a rule; True if a rule was added."""
        K = self.K
        pending = [terms]
        added = False
        while pending:
            t = self.nf_terms(pending.pop())
            if not t:
                continue
            lead = max(t, key=deglex_key)
            inv = K.inv(t[lead])
            tail = {w: K(-c * inv) for w, c in t.items() if w != lead}
            # rules whose lead contains the new lead are re-queued
            for old in [L for L in self.rules if len(L) >= len(lead) and _contains(L, lead)]:
                old_tail = self.rules.pop(old)
                requeue = {old: K(1)}
                add_into(requeue, old_tail, -1, K)
                pending.append(requeue)
            self.rules[lead] = tail
            self._changed()
            added = True
            if len(self.rules) > MAX_RULES:
                raise CompletionError(f"rule explosion: {len(self.rules)} rules (limit {MAX_RULES}), {len(pending)} pending")
        return added

    def _overlaps(self):
        leads = sorted(self.rules, key=deglex_key)
        checked = skipped = 0
        for l1 in leads:
            for l2 in leads:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k]:
                        continue
                    w = l1 + l2[k:]
                    if len(w) > self.cap:
                        skipped += 1
                        continue
                    checked += 1
                    yield l1, l2, k, w
        self._stats = (checked, skipped)

    def _overlap_residue(self, l1, l2, k):
        K = self.K
        if l1 not in self.rules or l2 not in self.rules:
            return {}
        left = {t + l2[k:]: c for t, c in self.rules[l1].items()}
        right = {l1[:len(l1) - k] + t: c for t, c in self.rules[l2].items()}
        diff = self.nf_terms(left)
        add_into(diff, self.nf_terms(right), -1, K)
        return diff

    def complete(self, relations) -> "RewriteSystem":
        for r in relations:
            if r.degree > self.cap:
                raise PresentationError(f"relation of degree {r.degree} above the cap {self.cap}")
            self._insert(dict(r.terms))
        passes = 0
        while True:
            passes += 1
            new = False
            for l1, l2, k, _ in list(self._overlaps()):
                res = self._overlap_residue(l1, l2, k)
                if res:
                    new |= self._insert(res)
            if not new:
                break
        # final interreduction: tails in normal form
        for lead in list(self.rules):
            self.rules[lead] = self.nf_terms(self.rules[lead])
        self._changed()
        checked = skipped = 0
        for l1, l2, k, _ in list(self._overlaps()):
            if self._overlap_residue(l1, l2, k):
                raise CompletionError("overlap left unresolved after completion")
        checked, skipped = self._stats
        self.certificate = Certificate(self.cap, len(self.rules), checked, skipped, passes)
        self.certificate.checksum = rules_checksum(self)
        return self


def _contains(big, small) -> bool:
    n = len(small)
    return any(big[i:i + n] == small for i in range(len(big) - n + 1))


# -- serialization and the disk cache -------------------------------------------


def _fmt(c) -> str:
    return str(c)


def _rules_payload(rs: RewriteSystem):
    out = []
    for lead in sorted(rs.rules, key=deglex_key):
        tail = sorted(rs.rules[lead].items(), key=lambda t: deglex_key(t[0]))
        out.append([list(lead), [[list(w), _fmt(c)] for w, c in tail]])
    return out


def rules_checksum(rs: RewriteSystem) -> str:
    blob = json.dumps(_rules_payload(rs), separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def presentation_hash(alphabet: Alphabet, K: Scalars, relations, cap: int) -> str:
    rels = [[[list(w), _fmt(c)] for w, c in sorted(r.terms.items(), key=lambda t: deglex_key(t[0]))] for r in relations]
    blob = json.dumps({"alphabet": list(alphabet.names), "field": str(K), "relations": rels, "cap": cap}, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_dir() -> Path | None:
    v = os.environ.get(CACHE_ENV)
    if v is not None and v.strip().lower() in ("", "none", "off"):
        return None
    return Path(v) if v else Path.home() / ".cache" / "hopfcohom"


def _load(path: Path, alphabet, K, cap):
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    rs = RewriteSystem(alphabet, K, cap)
    parse = Fraction if K.p is None else int
    for lead, tail in data["rules"]:
        rs.rules[tuple(lead)] = {tuple(w): K(parse(c)) for w, c in tail}
    rs._changed()
    cert = Certificate(**data["certificate"])
    if rules_checksum(rs) != cert.checksum:
        return None
    rs.certificate = cert
    return rs


def complete_to_cap(alphabet: Alphabet, K: Scalars, relations, cap: int, use_cache: bool = True) -> RewriteSystem:
    key = presentation_hash(alphabet, K, relations, cap)
    root = cache_dir() if use_cache else None
    path = root / f"rules-{key[:32]}.json" if root else None
    if path is not None and path.exists():
        rs = _load(path, alphabet, K, cap)
        if rs is not None:
            return rs
    rs = RewriteSystem(alphabet, K, cap).complete(relations)
    if path is not None:
        try:
            root.mkdir(parents=True, exist_ok=True)
            payload = {"hash": key, "cap": cap, "rules": _rules_payload(rs), "certificate": rs.certificate.to_dict()}
            with tempfile.NamedTemporaryFile("w", dir=root, delete=False, suffix=".tmp") as fh:
                json.dump(payload, fh)
            os.replace(fh.name, path)
        except OSError:
            pass
    return rs
