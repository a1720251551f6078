import io
import json
import sys

import pytest

from gctkit import __version__, cli
from gctkit.circuits import dumps, ryser_permanent
from gctkit.kronecker import kron


def run(argv, capsys=None):
    out = io.StringIO()
    code = cli.run(argv, out=out)
    return code, out.getvalue()


def doc_of(argv):
    code, text = run(argv)
    assert code == 0, text
    return json.loads(text)


def test_kron_point_query():
    d = doc_of(["kron", "[2,1]", "[2,1]", "[2,1]"])
    assert d["value"] == 1 and d["routes_agree"] is True
    assert d["manifest"]["command"] == "kron"
    assert d["manifest"]["tool_version"] == __version__
    assert d["manifest"]["parameters"] == {"pi": [2, 1], "mu": [2, 1], "nu": [2, 1]}


def test_kron_rect_query():
    d = doc_of(["kron", "rect", "2", "2", "[3,1]"])
    assert d["value"] == 0 and d["routes_agree"]
    assert d["route"] == "sylvester"


def test_kron_sweep_35_lines():
    code, text = run(["kron", "sweep", "--n", "4"])
    assert code == 0
    lines = [json.loads(x) for x in text.splitlines()]
    assert len(lines) == 35
    for line in lines:
        t = [tuple(p) for p in line["triple"]]
        assert t == sorted(t, reverse=True)  # canonical order
        assert line["routes_agree"]
        # symmetric closure: every permutation of the triple has the same value
        assert line["value"] == kron(t[1], t[2], t[0]) == kron(t[2], t[0], t[1])
        assert set(line) >= {"triple", "value", "route", "certificates"}


def test_kron_sweep_jobs_identical():
    a = run(["kron", "sweep", "--n", "4"])[1]
    b = run(["--jobs", "2", "kron", "sweep", "--n", "4"])[1]
    c = run(["kron", "sweep", "--n", "4", "--jobs", "2"])[1]
    assert a == b == c


def test_lr_and_chartable_and_plethysm():
    assert doc_of(["lr", "[2,2]", "[2]", "[2]"])["value"] == 1
    t = doc_of(["chartable", "3"])
    assert t["rows"]["[2,1]"] == [-1, 0, 2]
    p = doc_of(["plethysm", "2", "2"])
    assert p["decomposition"] == [{"pi": [4], "multiplicity": 1}, {"pi": [2, 2], "multiplicity": 1}]
    assert p["dimension_check"] is True
    assert doc_of(["plethysm", "2", "2", "--pi", "[3,1]"])["multiplicity"] == 0


def test_stanley_audit_command():
    d = doc_of(["stanley-audit", "--max-size", "3"])
    assert d["mismatches"] > 0


def test_gct_commands(tmp_path):
    d = doc_of(["gct", "sigma-perm", "2", "1"])
    assert d["entries"][0]["pi"] == [2]
    assert doc_of(["gct", "det-modules", "2", "1"])["modules"] == [{"pi": [2], "k": 1}]
    csv_path = tmp_path / "t.csv"
    rep = doc_of(["gct", "obstruct", "--m", "2", "--n", "3", "--delta-max", "1", "--csv", str(csv_path)])
    cand = next(c for c in rep["candidates"] if c["lambda"] == [2, 0, 0])
    assert cand["verdict"] == "blocked"
    assert cand["blocked_by"][0]["pi"] == [3]
    assert "range-limited" in rep["caveat"]
    assert csv_path.read_text().startswith("lambda,")


def test_circuit_commands(tmp_path):
    path = tmp_path / "r2.json"
    d = doc_of(["circuit", "ryser", "2", "--output", str(path)])
    assert d["class"] == "weakly_skew" and d["size"] == 13
    assert doc_of(["circuit", "classify", str(path)])["class"] == "weakly_skew"
    ev = doc_of(["circuit", "eval", str(path)])
    assert len(ev["polynomial"]) == 2
    u = doc_of(["circuit", "universal", str(path)])
    assert u["verified"] is True and u["matrix_size"] == 14
    series = tmp_path / "s.json"
    series.write_text(json.dumps({
        "format": "gctkit-circuit", "version": 1, "output": 2,
        "gates": [{"op": "const", "series": ["0", "1"]}, {"op": "var", "name": "x"}, {"op": "mul", "args": [0, 1]}],
    }))
    ex = doc_of(["circuit", "extract", str(series), "--q", "1"])
    assert [c["polynomial"] for c in ex["coefficients"]] == ["0", "x"]


def test_circuit_general_is_domain_error(tmp_path):
    path = tmp_path / "r3.json"
    path.write_text(dumps(ryser_permanent(3)))
    code, _ = run(["circuit", "universal", str(path)])
    assert code == 1


def test_circuit_bad_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1,2")
    assert run(["circuit", "eval", str(path)])[0] == 1
    assert run(["circuit", "eval", str(tmp_path / "missing.json")])[0] == 1


def test_cache_commands(tmp_path, monkeypatch):
    monkeypatch.setenv("GCTKIT_CACHE_DIR", str(tmp_path / "c"))
    w = doc_of(["cache", "warm", "--n", "4"])
    assert w["warmed_tables"] == [1, 2, 3, 4]
    info = doc_of(["cache", "info"])
    assert info["files"]
    cleared = doc_of(["cache", "clear"])
    assert cleared["removed"] == len(info["files"])
    assert not list((tmp_path / "c").glob("*.json"))


def test_exit_codes(tmp_path, monkeypatch):
    assert run(["bogus"])[0] == 64
    assert run([])[0] == 64
    assert run(["kron", "[2,1]"])[0] == 64
    assert run(["kron", "[1,2]", "[3]", "[3]"])[0] == 1
    assert run(["kron", "[2,1]", "[2]", "[3]"])[0] == 1
    assert run(["--jobs", "0", "chartable", "3"])[0] == 64
    monkeypatch.setenv("GCTKIT_MAX_TABLE_N", "4")
    assert run(["chartable", "5"])[0] == 2


def test_byte_determinism_warm_cache():
    argv = ["gct", "obstruct", "--m", "2", "--n", "3", "--delta-max", "2"]
    run(argv)  # warm
    assert run(argv)[1] == run(argv)[1]


def test_report_values_reverify():
    from gctkit.lr import lr_coefficient
    from gctkit.kronecker import kron_char

    d = doc_of(["kron", "[3,1]", "[2,2]", "[2,1,1]"])
    assert d["value"] == kron_char((3, 1), (2, 2), (2, 1, 1))
    d = doc_of(["lr", "[3,2,1]", "[2,1]", "[2,1]"])
    assert d["value"] == lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2


# ---------------------------------------------------------------- sweeps

def write(tmp_path, name, cfg):
    p = tmp_path / name
    p.write_text(cfg if isinstance(cfg, str) else json.dumps(cfg))
    return str(p)


def test_sweep_matches_kron_sweep(tmp_path):
    cfg = write(tmp_path, "c.json", {"kind": "kron", "n": 4})
    code, text = run(["sweep", cfg])
    assert code == 0
    assert text == run(["kron", "sweep", "--n", "4"])[1]


def test_sweep_empty_range(tmp_path):
    cfg = write(tmp_path, "c.json", {"kind": "kron", "n": [3, 2]})
    assert run(["sweep", cfg]) == (0, "")


@pytest.mark.parametrize("cfg", [
    "not json",
    "[1,2]",
    {"kind": "nope"},
    {"kind": "kron"},
    {"kind": "kron", "n": "4"},
    {"kind": "kron", "n": 4, "bogus": 1},
    {"kind": "kron", "n": 4, "routes": ["magic"]},
    {"kind": "kron", "n": 4, "jobs": 0},
    {"kind": "rect_kron", "n": 2},
    {"kind": "gct_obstruct", "m": 2, "n": 3},
])
def test_sweep_malformed_config(tmp_path, cfg):
    assert run(["sweep", write(tmp_path, "c.json", cfg)])[0] == 65


def test_sweep_missing_config(tmp_path):
    assert run(["sweep", str(tmp_path / "none.json")])[0] == 65


@pytest.mark.parametrize("cfg,count", [
    ({"kind": "rect_kron", "n": 2, "delta": [1, 2]}, 2 + 5),
    ({"kind": "plethysm", "n": [2, 3], "delta": 2}, 3 + 7),
    ({"kind": "gct_obstruct", "m": 2, "n": [2, 3], "delta_max": 1}, 2),
])
def test_sweep_kinds(tmp_path, cfg, count):
    code, text = run(["sweep", write(tmp_path, "c.json", cfg)])
    assert code == 0
    assert len(text.splitlines()) == count


def test_sweep_resume_after_interrupt(tmp_path):
    cfg = write(tmp_path, "c.json", {"kind": "kron", "n": [3, 4]})
    full = tmp_path / "full.jsonl"
    assert run(["sweep", cfg, "--output", str(full)])[0] == 0
    data = full.read_bytes()
    manifest = (tmp_path / "full.jsonl.manifest.json").read_text()
    # simulate an interrupt partway through a line
    part = tmp_path / "part.jsonl"
    part.write_bytes(data[: len(data) // 2 + 7])
    (tmp_path / "part.jsonl.manifest.json").write_text(manifest)
    assert run(["sweep", cfg, "--output", str(part), "--resume"])[0] == 0
    assert part.read_bytes() == data


def test_sweep_resume_rejects_other_config(tmp_path):
    a = write(tmp_path, "a.json", {"kind": "kron", "n": 3})
    b = write(tmp_path, "b.json", {"kind": "kron", "n": 4})
    out = tmp_path / "o.jsonl"
    run(["sweep", a, "--output", str(out)])
    assert run(["sweep", b, "--output", str(out), "--resume"])[0] == 65


def test_acceptance_command_subset():
    code, text = run(["acceptance", "--criteria", "2,3"])
    assert code == 0
    lines = [json.loads(x) for x in text.splitlines()]
    assert [x["passed"] for x in lines] == [True, True]
    assert run(["acceptance", "--criteria", "12"])[0] == 64


def test_timing_goes_to_stderr(capsys):
    code, text = run(["--timing", "chartable", "2"])
    assert code == 0 and "wall_time" not in text
    assert "wall_time_seconds" in capsys.readouterr().err


def test_console_entry_point():
    import subprocess

    p = subprocess.run([sys.executable, "-m", "gctkit.cli", "kron", "[2,1]", "[2,1]", "[2,1]"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["value"] == 1
    p = subprocess.run([sys.executable, "-m", "gctkit.cli", "frobnicate"], capture_output=True, text=True)
    assert p.returncode == 64 and "usage" in p.stderr
