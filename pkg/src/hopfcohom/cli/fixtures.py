"""The shipped fixture library and resolution of fixture or inline specs."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..hopfcore import dual_hopf, group_algebra, group_morphism, quotient_by_subalgebra, subgroup_inclusion
from ..hopfcore.groups import GroupError, builtin, from_table
from ..presented import QQ, Scalars, matrix


class ConfigError(ValueError):
    """Bad user input: unknown fixture, malformed spec, missing file."""


@lru_cache(maxsize=1)
def library() -> dict:
    text = resources.files("hopfcohom.cli").joinpath("fixtures/library.json").read_text()
    return json.loads(text)


def fixture_spec(name_or_spec) -> dict:
    """A fixture name, a path to a JSON spec, or an inline dict."""
    if isinstance(name_or_spec, dict):
        return name_or_spec
    lib = library()
    if name_or_spec in lib:
        return lib[name_or_spec]
    path = Path(name_or_spec)
    if path.suffix == ".json":
        if not path.exists():
            raise ConfigError(f"fixture file {path} does not exist")
        try:
            return json.loads(path.read_text())
        except ValueError as e:
            raise ConfigError(f"{path}: {e}") from None
    raise ConfigError(f"unknown fixture {name_or_spec!r} (see `fixtures list`)")


def _group(spec):
    try:
        if "builtin" in spec:
            return builtin(spec["builtin"], int(spec["n"]))
        return from_table(spec["table"], spec.get("labels"), spec.get("name", "G"))
    except (KeyError, TypeError) as e:
        raise ConfigError(f"bad group spec {spec!r}") from e


def _label_index(G, label):
    if isinstance(label, int):
        return label
    try:
        return G.labels.index(label)
    except ValueError:
        raise ConfigError(f"{label!r} is not an element of {G.name or 'the group'}") from None


def build_hopf(spec: dict):
    if spec.get("kind") not in ("hopf", "tower"):
        raise ConfigError("expected a Hopf algebra fixture")
    A = group_algebra(_group(spec["group"]), spec["field"])
    return dual_hopf(A) if spec.get("dual") else A


@dataclass
class Tower:
    A: object
    incl: object
    p: object  # HopfMorphism, or QuotientMap when no quotient group is given


def build_tower(spec: dict) -> Tower:
    if spec.get("kind") != "tower":
        raise ConfigError("expected a tower fixture (subgroup and quotient)")
    A = build_hopf(spec)
    G = A.group
    elems = [_label_index(G, x) for x in spec["subgroup"]]
    if sorted(G.subgroup_generated(elems)) != sorted(set(elems)):
        raise ConfigError("subgroup elements are not closed under multiplication")
    incl = subgroup_inclusion(A, elems)
    q = spec.get("quotient")
    if q is None:
        return Tower(A, incl, quotient_by_subalgebra(incl))
    L = group_algebra(_group(q["group"]), A.field)
    images = [_label_index(L.group, x) for x in q["images"]]
    if len(images) != G.order:
        raise ConfigError("quotient images must list one element per group element")
    try:
        p = group_morphism(A, L, images)
    except (GroupError, ValueError) as e:
        raise ConfigError(f"quotient map: {e}") from None
    return Tower(A, incl, p)


def scalars(field: str) -> Scalars:
    f = field.strip()
    if f == "Q":
        return QQ
    for prefix in ("Fp(", "F"):
        if f.startswith(prefix):
            body = f[len(prefix):].rstrip(")")
            if body.isdigit():
                return Scalars(int(body))
    raise ConfigError(f"presented algebras need Q or a prime field, got {field!r}")


def build_matrix(spec: dict):
    if spec.get("kind") != "matrix":
        raise ConfigError("expected a matrix fixture")
    K = scalars(spec.get("field", "Q"))
    return matrix(spec["entries"], K), K


def describe(name: str, spec: dict) -> str:
    kind = spec.get("kind")
    if kind == "matrix":
        body = f"matrix {spec['entries']}"
    elif kind == "tower":
        q = spec.get("quotient")
        body = f"tower {spec['subgroup']} in {spec['group']}" + ("" if q else " (no quotient group)")
    else:
        body = ("dual of " if spec.get("dual") else "") + f"group algebra of {spec['group']}"
    task = spec.get("designated", {}).get("task", "")
    return f"{name:16} {spec.get('field', ''):4} {kind:7} {task:20} {body}"
