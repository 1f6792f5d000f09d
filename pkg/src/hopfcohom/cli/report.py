"""Reports: per-task verdicts and tables, emitted as JSON, text or CSV."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass, field

from .. import __version__


def input_hash(inputs: dict) -> str:
    blob = json.dumps(inputs, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


@dataclass
class TaskResult:
    task: str
    inputs: dict
    passed: bool
    checks: list = field(default_factory=list)  # Check.to_dict() entries
    tables: list = field(default_factory=list)  # {"side", "coefficient", "dims", ...}
    notes: list = field(default_factory=list)
    rejected: str | None = None
    message: str = ""
    input_hash: str = ""
    seconds: float | None = None

    def __post_init__(self):
        if not self.input_hash:
            self.input_hash = input_hash(self.inputs)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class Report:
    tasks: list = field(default_factory=list)
    tool: str = "hopfcohom"
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.tasks)

    def to_dict(self) -> dict:
        tasks = []
        for t in self.tasks:
            d = asdict(t)
            if d["seconds"] is None:
                del d["seconds"]
            d["verdict"] = t.verdict
            tasks.append(d)
        return {"tool": self.tool, "version": self.version, "verdict": "pass" if self.passed else "fail", "tasks": tasks}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        tasks = []
        for t in d.get("tasks", []):
            t = {k: v for k, v in t.items() if k != "verdict"}
            tasks.append(TaskResult(**t))
        return cls(tasks, d.get("tool", "hopfcohom"), d.get("version", __version__))


def _text(r: Report) -> str:
    lines = [f"{r.tool} {r.version}: {'PASS' if r.passed else 'FAIL'} ({len(r.tasks)} task(s))"]
    for t in r.tasks:
        args = ", ".join(f"{k}={v}" for k, v in sorted(t.inputs.items()))
        lines.append(f"[{t.verdict.upper()}] {t.task} ({args})")
        if t.message:
            lines.append(f"  {t.message}")
        if t.rejected:
            lines.append(f"  rejected: {t.rejected}")
        for c in t.checks:
            mark = "ok  " if c["passed"] else "FAIL"
            extra = f" ({c['detail']})" if c.get("detail") else ""
            lines.append(f"  [{mark}] {c['name']}{extra}")
        for tab in t.tables:
            dims = " ".join(str(x) for x in tab["dims"])
            side = f"{tab['side']}: " if tab.get("side") else ""
            lines.append(f"  {side}{tab.get('coefficient', '')} dims by degree: {dims}")
        lines.extend(f"  note: {n}" for n in t.notes)
    return "\n".join(lines) + "\n"


def _csv(r: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["task", "side", "degree", "dim"])
    for t in r.tasks:
        for tab in t.tables:
            for p, d in enumerate(tab["dims"]):
                w.writerow([t.task, tab.get("side", ""), p, d])
    return buf.getvalue()


def emit_report(r: Report, fmt: str = "json") -> bytes:
    if fmt == "json":
        out = json.dumps(r.to_dict(), indent=2, sort_keys=True) + "\n"
    elif fmt == "text":
        out = _text(r)
    elif fmt == "csv":
        out = _csv(r)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    return out.encode()


def parse_report(data: bytes | str) -> Report:
    return Report.from_dict(json.loads(data))
