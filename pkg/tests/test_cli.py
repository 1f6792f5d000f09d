import json

import pytest

from hopfcohom.cli.fixtures import library
from hopfcohom.cli.main import run
from hopfcohom.cli.report import Report, TaskResult, emit_report, parse_report


@pytest.fixture(autouse=True)
def _no_cache(monkeypatch):
    monkeypatch.setenv("HOPFCOHOM_CACHE_DIR", "off")


def run_json(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = run([*argv, "--format", "json", "--output", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_gs_compute_kz2(tmp_path):
    code, rep = run_json(tmp_path, "gs-compute", "--fixture", "kZ2@F2", "--coeff", "trivial", "--max-degree", "4")
    assert code == 0
    (task,) = rep["tasks"]
    assert task["tables"][0]["dims"] == [1, 1, 1, 1, 1]
    assert rep["verdict"] == "pass"


def test_verify_corollary_z6_over_z2(tmp_path):
    code, rep = run_json(tmp_path, "verify-corollary", "--fixture", "Z6-over-Z2@F4", "--max-degree", "4")
    assert code == 0
    lhs, rhs = rep["tasks"][0]["tables"][:2]
    assert lhs["side"] == "lhs" and rhs["side"] == "rhs"
    assert lhs["dims"] == rhs["dims"] == [1, 1, 1, 1, 1]


def test_genericity_t1(capsysbinary):
    assert run(["genericity", "--t", "1"]) == 1
    assert b"not generic (order 3 or 6 root of unity)" in capsysbinary.readouterr().out


def test_genericity_generic_exit_zero(capsysbinary):
    assert run(["genericity", "--t", "9/2"]) == 0
    assert run(["genericity", "--fixture", "I2@Q"]) == 0


def test_empty_config_is_valid(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tasks": []}))
    out = tmp_path / "r.json"
    assert run(["run", "--config", str(cfg), "--output", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["tasks"] == [] and rep["verdict"] == "pass"


def test_config_runs_tasks_in_order(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tasks": [
        {"task": "genericity", "t": "4"},
        {"task": "gs-compute", "fixture": "kZ4@Q", "max_degree": 2},
    ], "format": "csv"}))
    out = tmp_path / "r.csv"
    assert run(["run", "--config", str(cfg), "--output", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines == ["task,side,degree,dim", "gs-compute,,0,1", "gs-compute,,1,0", "gs-compute,,2,0"]


def test_reports_are_byte_stable(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["gs-compute", "--fixture", "kZ3@F3", "--max-degree", "3", "--format", "json"]
    assert run([*argv, "--output", str(a)]) == 0
    assert run([*argv, "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_json_round_trip(tmp_path):
    _, rep = run_json(tmp_path, "verify-corollary", "--fixture", "Z4-over-Z2@Q", "--max-degree", "3")
    r = Report.from_dict(rep)
    assert parse_report(emit_report(r, "json")) == r
    assert emit_report(parse_report(emit_report(r)), "json") == emit_report(r, "json")


def test_empty_report_round_trip():
    r = Report()
    assert parse_report(emit_report(r)) == r
    assert emit_report(r, "csv") == b"task,side,degree,dim\n"
    assert b"PASS" in emit_report(r, "text")


def test_csv_five_rows_per_side():
    t = TaskResult("verify-corollary", {}, True, tables=[
        {"side": "lhs", "coefficient": "", "dims": [1, 1, 1, 1, 1]},
        {"side": "rhs", "coefficient": "", "dims": [1, 1, 1, 1, 1]},
    ])
    rows = emit_report(Report([t]), "csv").decode().splitlines()[1:]
    assert sum(r.split(",")[1] == "lhs" for r in rows) == 5
    assert sum(r.split(",")[1] == "rhs" for r in rows) == 5


def test_timing_is_opt_in(tmp_path):
    _, rep = run_json(tmp_path, "genericity", "--t", "5")
    assert "seconds" not in rep["tasks"][0]
    _, rep = run_json(tmp_path, "genericity", "--t", "5", "--timing")
    assert rep["tasks"][0]["seconds"] >= 0


def test_input_hash_tracks_inputs(tmp_path):
    _, a = run_json(tmp_path, "genericity", "--t", "5")
    _, b = run_json(tmp_path, "genericity", "--t", "6")
    assert a["tasks"][0]["input_hash"] != b["tasks"][0]["input_hash"]


# -- exit codes ---------------------------------------------------------------


def test_unknown_fixture_is_input_error(capsys):
    assert run(["gs-compute", "--fixture", "nope"]) == 2
    assert "unknown fixture" in capsys.readouterr().err


@pytest.mark.parametrize("cfg", [
    "not json",
    json.dumps({"tasks": [{"task": "frobnicate"}]}),
    json.dumps({"tasks": [{"task": "genericity", "t": "1", "colour": "red"}]}),
    json.dumps({"tasks": [], "extra": 1}),
    json.dumps({"tasks": [{"task": "gs-compute", "fixture": "kZ2@F2", "coeff": "char:9"}]}),
    json.dumps({"tasks": [{"task": "verify-smash-iso", "fixture": "kZ2@F2"}]}),
    json.dumps({"tasks": [{"task": "genericity", "t": "sqrt(2)"}]}),
])
def test_bad_config_is_input_error(tmp_path, cfg):
    p = tmp_path / "cfg.json"
    p.write_text(cfg)
    assert run(["run", "--config", str(p)]) == 2


def test_missing_config_file(tmp_path):
    assert run(["run", "--config", str(tmp_path / "absent.json")]) == 2


def test_bad_arguments_are_input_errors():
    assert run(["no-such-command"]) == 2
    assert run(["gs-compute"]) == 2


def test_resource_ceilings(tmp_path):
    assert run(["gs-compute", "--fixture", "kZ3@F3", "--max-rank", "0"]) == 3
    assert run(["verify-smash-iso", "--fixture", "diag12@Q", "--max-rules", "5"]) == 3


def test_ceiling_is_restored():
    from hopfcohom.homology import resolution

    before = resolution.MAX_RANK
    run(["gs-compute", "--fixture", "kZ3@F3", "--max-rank", "0"])
    assert resolution.MAX_RANK == before


def test_rejected_hypothesis_exits_one(tmp_path):
    code, rep = run_json(tmp_path, "verify-corollary", "--fixture", "Z6-over-Z2@F2")
    assert code == 1
    assert rep["tasks"][0]["rejected"] == "insufficient roots of unity"


# -- fixtures -------------------------------------------------------------------


def test_fixtures_list(capsysbinary):
    assert run(["fixtures", "list"]) == 0
    out = capsysbinary.readouterr().out.decode()
    for name in library():
        assert name in out


def test_fixtures_show(capsysbinary):
    assert run(["fixtures", "show", "Eq2@Q"]) == 0
    assert json.loads(capsysbinary.readouterr().out)["entries"] == [["0", "1"], ["-1/2", "0"]]
    assert run(["fixtures", "show", "nope"]) == 2


def test_library_covers_required_fixtures():
    names = set(library())
    for n in ["kZ2@F2", "kZ3@F3", "kZ4@Q", "kZ6@F4", "kS3@Q", "kS3@F3", "k^S3@Q", "Z4-over-Z2@Q",
              "Z6-over-Z2@F4", "S3-over-Z3@F3", "S3-over-Z2@Q", "I2@Q", "diag12@Q", "Eq2@Q"]:
        assert n in names


@pytest.mark.parametrize("name", sorted(library()))
def test_fixture_passes_designated_task(tmp_path, name):
    d = dict(library()[name]["designated"])
    expect_exit = d.pop("expect_exit", 0)
    expect_rejected = d.pop("expect_rejected", None)
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tasks": [{"fixture": name, **d}]}))
    out = tmp_path / "r.json"
    assert run(["run", "--config", str(cfg), "--output", str(out)]) == expect_exit
    task = json.loads(out.read_text())["tasks"][0]
    assert task["rejected"] == expect_rejected


def test_inline_fixture_file(tmp_path):
    spec = tmp_path / "z5.json"
    spec.write_text(json.dumps({"kind": "hopf", "group": {"builtin": "cyclic", "n": 5}, "field": "F5"}))
    code, rep = run_json(tmp_path, "gs-compute", "--fixture", str(spec), "--max-degree", "2")
    assert code == 0 and rep["tasks"][0]["tables"][0]["dims"] == [1, 1, 1]


def test_warm_cache_report_equals_cold(tmp_path):
    cache = tmp_path / "cache"
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["bplus-check", "--fixture", "Eq2@Q", "--cache-dir", str(cache), "--format", "json"]
    assert run([*argv, "--output", str(a)]) == 0
    assert list(cache.glob("rules-*.json"))
    assert run([*argv, "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
