"""hopfcohom: batch verifications from fixtures or a JSON task config.

Exit codes: 0 all checks pass, 1 a mathematical check failed or a
hypothesis was rejected, 2 bad input or config, 3 a resource ceiling was hit.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
import time
from pathlib import Path

from .. import __version__
from ..checks import CheckReport
from ..exactla import FieldError
from ..homology import ResolutionError, gs_cohomology, verify_corollary, verify_theorem_restriction
from ..homology import resolution as _resolution
from ..hopfcore import HopfError, check_hopf_axioms
from ..hopfcore.groups import GroupError
from ..hopfcore.sequences import QuotientMap
from ..presented import (
    CompletionError,
    PresentationError,
    asymmetry_from,
    bilinear_form_hopf,
    bplus_sequence_check,
    genericity_check,
    hopf_axiom_check_to_cap,
    universal_cosovereign,
    verify_smash_iso,
)
from ..presented import rewriting as _rewriting
from ..ydmod import (
    Character,
    YDError,
    coadjoint_on_image,
    coadjoint_quotient,
    dual_yd,
    group_characters,
    k_psi,
    trivial_yd,
    yd_check,
)
from .fixtures import ConfigError, build_hopf, build_matrix, build_tower, describe, fixture_spec, library
from .report import Report, TaskResult, emit_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
INPUT_ERRORS = (ConfigError, FieldError, GroupError, HopfError, YDError, PresentationError, KeyError, TypeError, ValueError)
RESOURCE_ERRORS = (ResolutionError, CompletionError, MemoryError)


# -- tasks --------------------------------------------------------------------


def _result(task, inputs, rep: CheckReport, tables=(), **kw) -> TaskResult:
    return TaskResult(task, inputs, rep.passed and not kw.get("rejected"), [c.to_dict() for c in rep.checks],
                      list(tables), list(rep.notes), **kw)


def _table(side, coefficient, dims):
    return {"side": side, "coefficient": coefficient, "dims": list(dims)}


def _morphism(p):
    if isinstance(p, QuotientMap):
        return p.as_morphism() if p.hopf is not None else None
    return p


def _setup(spec: dict):
    if spec.get("kind") == "tower":
        tw = build_tower(spec)
        return tw.A, tw
    return build_hopf(spec), None


def _coefficient(name: str, A, tw):
    """The YD module named trivial, char:<j>, coadjoint or coadjoint*."""
    if name == "trivial":
        return trivial_yd(A)
    if name.startswith("char:"):
        if A.group is None:
            raise ConfigError("characters need a group algebra")
        chars = group_characters(A.group, A.field)
        j = int(name[5:])
        if not 0 <= j < len(chars):
            raise ConfigError(f"character index {j} out of range (0..{len(chars) - 1})")
        return k_psi(A, Character(A, chars[j], f"chi{j}"))
    if name in ("coadjoint", "coadjoint*"):
        if tw is None:
            raise ConfigError("the coadjoint module needs a tower fixture")
        X = coadjoint_quotient(tw.incl) if isinstance(tw.p, QuotientMap) else coadjoint_on_image(tw.p)
        return dual_yd(X) if name.endswith("*") else X
    raise ConfigError(f"unknown coefficient {name!r} (trivial, char:<j>, coadjoint, coadjoint*)")


def task_hopf_check(o):
    spec = fixture_spec(o["fixture"])
    if spec.get("kind") == "matrix":
        E, K = build_matrix(spec)
        cap = int(o.get("cap", 3))
        rep = CheckReport("presented Hopf axioms")
        rep.extend(hopf_axiom_check_to_cap(bilinear_form_hopf(E, K, cap)), "B(E): ")
        rep.extend(hopf_axiom_check_to_cap(universal_cosovereign(asymmetry_from(E, K), K, cap)), "H(F): ")
        return _result("hopf-check", o, rep)
    return _result("hopf-check", o, check_hopf_axioms(build_hopf(spec)))


def task_yd_check(o):
    spec = fixture_spec(o["fixture"])
    which = o.get("module", "trivial")
    rep = CheckReport("YD axioms")
    A, tw = _setup(spec)
    if which == "characters":
        if A.group is None:
            raise ConfigError("characters need a group algebra")
        mods = [_coefficient(f"char:{j}", A, tw) for j in range(len(group_characters(A.group, A.field)))]
    else:
        mods = [_coefficient(which, A, tw)]
    for V in mods:
        rep.extend(yd_check(V), f"{V.name or which}: ")
    return _result("yd-check", o, rep)


def task_gs_compute(o):
    spec = fixture_spec(o["fixture"])
    coeff = o.get("coeff", "trivial")
    A, tw = _setup(spec)
    V = _coefficient(coeff, A, tw)
    t = gs_cohomology(A, V, int(o.get("max_degree", 4)))
    rep = CheckReport("GS cohomology")
    expect = o.get("expect_dims")
    if expect is not None:
        rep.add("matches expected dims", list(expect) == t.dims, f"expected {expect}, got {t.dims}")
    res = _result("gs-compute", o, rep, [_table("", coeff, t.dims)])
    res.notes.append(f"algebra {t.algebra} over {t.field}, hash {t.algebra_hash}")
    return res


def _verification(task, o, v):
    rep = v.report()
    tables = [] if v.rejected else [_table("lhs", "", v.lhs), _table("rhs", "", v.rhs)]
    res = _result(task, o, rep, tables, rejected=v.rejected or None)
    if "per_character" in v.details:
        for j, dims in enumerate(v.details["per_character"]):
            res.tables.append(_table(f"psi{j}", f"k_psi{j}", dims))
    return res


def task_verify_corollary(o):
    tw = build_tower(fixture_spec(o["fixture"]))
    p = _morphism(tw.p)
    if p is None:
        rep = CheckReport("corollary")
        rep.add("quotient is a Hopf algebra", False)
        return _result("verify-corollary", o, rep, rejected="quotient is not a Hopf algebra")
    return _verification("verify-corollary", o, verify_corollary(tw.A, tw.incl, p, int(o.get("max_degree", 4))))


def task_verify_restriction(o):
    tw = build_tower(fixture_spec(o["fixture"]))
    coeff = o.get("coeff", "trivial")
    if isinstance(tw.p, QuotientMap) and tw.p.hopf is None:
        X = trivial_yd(tw.A)  # the verifier rejects before using X
    else:
        X = _coefficient(coeff, tw.A, tw)
    v = verify_theorem_restriction(tw.A, tw.incl, tw.p, X, int(o.get("max_degree", 3)))
    return _verification("verify-restriction", o, v)


def task_verify_smash_iso(o):
    E, K = build_matrix(fixture_spec(o["fixture"]))
    return _result("verify-smash-iso", o, verify_smash_iso(E, int(o.get("cap", 4)), K))


def task_bplus_check(o):
    E, K = build_matrix(fixture_spec(o["fixture"]))
    return _result("bplus-check", o, bplus_sequence_check(E, int(o.get("cap", 3)), K))


def task_genericity(o):
    if ("t" in o) == ("fixture" in o):
        raise ConfigError("genericity needs exactly one of --t and --fixture")
    if "t" in o:
        v = genericity_check(str(o["t"]))
    else:
        E, _ = build_matrix(fixture_spec(o["fixture"]))
        v = genericity_check(F=E)
    rep = CheckReport("genericity")
    rep.add("generic", v.generic, v.explanation)
    res = _result("genericity", o, rep, message=v.explanation)
    res.notes.append(f"verdict {v.verdict}" + ("" if v.t is None else f", t = {v.t}"))
    return res


TASKS = {
    "hopf-check": task_hopf_check,
    "yd-check": task_yd_check,
    "gs-compute": task_gs_compute,
    "verify-corollary": task_verify_corollary,
    "verify-restriction": task_verify_restriction,
    "verify-smash-iso": task_verify_smash_iso,
    "bplus-check": task_bplus_check,
    "genericity": task_genericity,
}
TASK_KEYS = {"task", "fixture", "coeff", "module", "max_degree", "cap", "t", "expect_dims", "expect_exit", "expect_rejected"}


def run_task(o: dict, timing: bool = False) -> TaskResult:
    o = dict(o)
    kind = o.pop("task", None)
    if kind not in TASKS:
        raise ConfigError(f"unknown task {kind!r}; choose from {', '.join(TASKS)}")
    unknown = set(o) - TASK_KEYS
    if unknown:
        raise ConfigError(f"unknown task field(s): {', '.join(sorted(unknown))}")
    for k in ("expect_exit", "expect_rejected"):
        o.pop(k, None)
    start = time.perf_counter()
    res = TASKS[kind](o)
    if timing:
        res.seconds = round(time.perf_counter() - start, 3)
    return res


@contextlib.contextmanager
def ceilings(max_rank=None, max_rules=None, cache_dir=None):
    saved = (_resolution.MAX_RANK, _rewriting.MAX_RULES, os.environ.get(_rewriting.CACHE_ENV))
    try:
        if max_rank is not None:
            _resolution.MAX_RANK = int(max_rank)
        if max_rules is not None:
            _rewriting.MAX_RULES = int(max_rules)
        if cache_dir is not None:
            os.environ[_rewriting.CACHE_ENV] = str(cache_dir)
        yield
    finally:
        _resolution.MAX_RANK, _rewriting.MAX_RULES = saved[0], saved[1]
        if saved[2] is None:
            os.environ.pop(_rewriting.CACHE_ENV, None)
        else:
            os.environ[_rewriting.CACHE_ENV] = saved[2]


def load_config(path) -> dict:
    p = Path(path)
    if not p.exists():
        raise ConfigError(f"config file {p} does not exist")
    try:
        cfg = json.loads(p.read_text())
    except ValueError as e:
        raise ConfigError(f"{p}: {e}") from None
    if not isinstance(cfg, dict) or not isinstance(cfg.get("tasks", []), list):
        raise ConfigError("config must be an object with a list under 'tasks'")
    unknown = set(cfg) - {"tasks", "format", "output", "max_rank", "max_rules", "cache_dir", "timing"}
    if unknown:
        raise ConfigError(f"unknown config field(s): {', '.join(sorted(unknown))}")
    return cfg


# -- argument parsing -------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default=None)
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds (not byte-stable)")
    common.add_argument("--max-rank", type=int, help="ceiling on free-module rank in resolutions")
    common.add_argument("--max-rules", type=int, help="ceiling on rewriting rules")
    common.add_argument("--cache-dir", help="rewriting cache directory ('off' disables)")

    ap = argparse.ArgumentParser(prog="hopfcohom", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"hopfcohom {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help_, *, fixture=True, **extra):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if fixture:
            sp.add_argument("--fixture", required=True, help="fixture name or path to a JSON spec")
        for flag, kw in extra.items():
            sp.add_argument(f"--{flag.replace('_', '-')}", **kw)
        return sp

    add("hopf-check", "Hopf axioms of a fixture", cap=dict(type=int))
    add("yd-check", "YD axioms of coefficient modules", module=dict(default="trivial"))
    add("gs-compute", "GS cohomology table", coeff=dict(default="trivial"), max_degree=dict(type=int, default=4))
    add("verify-corollary", "bialgebra cohomology against a sum over characters", max_degree=dict(type=int, default=4))
    add("verify-restriction", "restriction/induction identity", coeff=dict(default="trivial"),
        max_degree=dict(type=int, default=3))
    add("verify-smash-iso", "H(F) x| kZ2 = B(E) * kZ2 up to a cap", cap=dict(type=int, default=4))
    add("bplus-check", "the B+(E) cocentral sequence up to a cap", cap=dict(type=int, default=3))
    g = sub.add_parser("genericity", parents=[common], help="genericity of t = tr F tr F^-1")
    g.add_argument("--t")
    g.add_argument("--fixture")
    r = sub.add_parser("run", parents=[common], help="run the tasks in a JSON config")
    r.add_argument("--config", required=True)
    f = sub.add_parser("fixtures", help="the fixture library")
    f.add_argument("action", choices=("list", "show"))
    f.add_argument("name", nargs="?")
    return ap


def _write(data: bytes, output):
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _fixtures(args) -> int:
    lib = library()
    if args.action == "list":
        _write(("\n".join(describe(n, s) for n, s in lib.items()) + "\n").encode(), None)
        return EXIT_OK
    if args.name not in lib:
        print(f"error: unknown fixture {args.name!r}", file=sys.stderr)
        return EXIT_INPUT
    _write((json.dumps(lib[args.name], indent=2, sort_keys=True) + "\n").encode(), None)
    return EXIT_OK


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    if args.command == "fixtures":
        return _fixtures(args)
    try:
        if args.command == "run":
            cfg = load_config(args.config)
            tasks = cfg["tasks"] if "tasks" in cfg else []
            settings = {k: cfg.get(k) for k in ("format", "output", "max_rank", "max_rules", "cache_dir", "timing")}
        else:
            o = {k: v for k, v in vars(args).items() if v is not None and k in TASK_KEYS}
            o["task"] = args.command
            tasks, settings = [o], {}
        fmt = args.format or settings.get("format") or ("text" if args.command != "run" else "json")
        output = args.output or settings.get("output")
        timing = args.timing or bool(settings.get("timing"))
        limits = [getattr(args, k) if getattr(args, k) is not None else settings.get(k)
                  for k in ("max_rank", "max_rules", "cache_dir")]
        with ceilings(*limits):
            report = Report([run_task(t, timing) for t in tasks])
    except RESOURCE_ERRORS as e:
        print(f"resource ceiling hit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except INPUT_ERRORS as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    _write(emit_report(report, fmt), output)
    return EXIT_OK if report.passed else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
