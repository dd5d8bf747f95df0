import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from stablelike import __version__
from stablelike.cli import (
    EXIT_CHECK,
    EXIT_INPUT,
    EXIT_MIXED,
    EXIT_OK,
    UsageError,
    canonical_json,
    config_hash,
    main,
    parse_grid,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def manifest_of(err):
    line = next(l for l in err.splitlines() if l.startswith("manifest "))
    return json.loads(line[len("manifest "):])


def write_cfg(tmp_path, cfg, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps(cfg))
    return str(p)


# ---- helpers


def test_canonical_json_sorted_and_exact():
    s = canonical_json({"b": 0.1, "a": [1, 2.5, None, True], "c": {"z": 1e-300, "y": "é"}})
    assert s.startswith('{"a":[1,2.5,null,true],"b":0.10000000000000001,"c":{"y":"é","z":')
    back = json.loads(s)
    assert back["b"] == 0.1 and back["c"]["z"] == 1e-300


def test_config_hash_order_free():
    a = {"family": "exact_stable", "alpha": "1.5", "skew": "0"}
    b = dict(reversed(list(a.items())))
    assert config_hash(a) == config_hash(b)
    assert config_hash(a) != config_hash({**a, "alpha": "1.6"})
    assert len(config_hash(a)) == 64


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("logspace:1e2:1e4:3", [1e2, 1e3, 1e4]),
        ("linspace:0:1:5", [0, 0.25, 0.5, 0.75, 1]),
        ("1,2.5, 4", [1, 2.5, 4]),
    ],
)
def test_parse_grid(spec, expected):
    assert np.allclose(parse_grid(spec), expected, rtol=1e-15)


@pytest.mark.parametrize("spec", ["logspace:0:1:3", "logspace:1:2", "linspace:0:1:0", "a,b", "", "logspace:1:x:3"])
def test_parse_grid_rejects(spec):
    with pytest.raises(UsageError):
        parse_grid(spec)


# ---- constants


def test_constants_recurrence(capsys):
    code, out, err = run(capsys, "constants", "--alpha", "1.5", "--format", "json")
    assert code == EXIT_OK
    d = json.loads(out)
    assert abs(d["R"] - 1.6852580098) < 1e-9
    m = manifest_of(err)
    assert m["tool_version"] == __version__
    assert m["command"] == "constants --alpha 1.5 --format json"
    assert set(m) == {"tool_version", "config_hash", "command", "seed", "timestamp"}


def test_constants_transience_text(capsys):
    code, out, _ = run(capsys, "constants", "--alpha", "0.5", "--beta", "0.25")
    assert code == EXIT_OK
    assert out.startswith("T(0.5, 0.25) = 0.3509271499")


def test_constants_csv(capsys):
    code, out, _ = run(capsys, "constants", "--alpha", "0.5", "--beta", "0.25", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 1
    assert abs(float(rows[0]["T"]) - 0.35092714994) < 1e-10


@pytest.mark.parametrize(
    "argv",
    [
        ["constants", "--alpha", "2.5"],
        ["constants", "--alpha", "0"],
        ["constants", "--alpha", "1.5", "--beta", "0.25"],
        ["constants", "--alpha", "0.5", "--beta", "0.5"],
        ["constants", "--alpha", "nan"],
        ["constants"],
        ["constants", "--alpha", "abc"],
        ["nosuchcommand"],
        [],
    ],
)
def test_constants_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_INPUT


# ---- pdf / sample


def test_pdf_cauchy(capsys):
    code, out, _ = run(capsys, "pdf", "--alpha", "1", "--y", "0,1", "--format", "json")
    vals = json.loads(out)["values"]
    assert code == EXIT_OK
    assert abs(vals[0]["pdf"] - 1 / np.pi) < 1e-14 and abs(vals[1]["pdf"] - 0.5 / np.pi) < 1e-14


def test_pdf_model(capsys):
    code, out, _ = run(capsys, "pdf", "--preset", "sas_const", "--param", "alpha=2", "--y", "0", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK
    assert abs(float(rows[0]["pdf"]) - 1 / (2 * np.sqrt(np.pi))) < 1e-14


@pytest.mark.parametrize(
    "argv",
    [
        ["pdf", "--alpha", "3", "--y", "1"],
        ["pdf", "--alpha", "1.5", "--skew", "2", "--y", "1"],
        ["pdf", "--alpha", "1.5", "--y", "x"],
        ["pdf", "--preset", "nope", "--y", "1"],
        ["pdf", "--preset", "sas_const", "--param", "alpha", "--y", "1"],
        ["pdf", "--preset", "sas_const", "--param", "beta=1", "--y", "1"],
        ["pdf", "--config", "/nonexistent/m.json", "--y", "1"],
    ],
)
def test_pdf_input_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INPUT


def test_sample_reproducible(capsys):
    a = run(capsys, "sample", "--n", "50", "--seed", "3", "--values", "--format", "json")
    b = run(capsys, "sample", "--n", "50", "--seed", "3", "--values", "--format", "json")
    c = run(capsys, "sample", "--n", "50", "--seed", "4", "--values", "--format", "json")
    assert a[0] == EXIT_OK and a[1] == b[1] != c[1]
    assert len(json.loads(a[1])["values"]) == 50
    assert manifest_of(a[2])["seed"] == 3


@pytest.mark.parametrize("n", ["0", "-3"])
def test_sample_bad_n(capsys, n):
    assert run(capsys, "sample", "--n", n)[0] == EXIT_INPUT


# ---- classify


def test_classify_transient_json(capsys, tmp_path):
    cfg = write_cfg(tmp_path, {"family": "exact_stable", "alpha": "0.5"})
    code, out, err = run(
        capsys, "classify", "--config", cfg, "--grid", "1e3,1e5", "--betas", "0.25", "--format", "json"
    )
    assert code == EXIT_OK
    d = json.loads(out)
    assert d["verdict"] == "TransientEvidence"
    assert {c["name"] for c in d["conditions"]} == {"condition_14", "condition_17"}
    assert manifest_of(err)["config_hash"] == config_hash({"family": "exact_stable", "alpha": "0.5"})


def test_classify_mixed_regime(capsys, tmp_path):
    cfg = write_cfg(tmp_path, {"family": "exact_stable", "alpha": "ite(x<0,0.8,1.5)"})
    code, _, err = run(capsys, "classify", "--config", cfg, "--grid", "1e3,1e5")
    assert code == EXIT_MIXED and "mixed" in err


@pytest.mark.parametrize(
    "cfg",
    [
        {"family": "exact_stable", "alpha": "2.5"},
        {"family": "exact_stable", "alpha": "1.5 +"},
        {"family": "exact_stable", "alpha": "foo(x)"},
        {"family": "nope", "alpha": "1.5"},
        {"family": "exact_stable"},
    ],
)
def test_classify_bad_configs(capsys, tmp_path, cfg):
    path = write_cfg(tmp_path, cfg)
    assert run(capsys, "classify", "--config", path, "--grid", "1e3")[0] == EXIT_INPUT


def test_classify_broken_json(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"family": ')
    code, _, err = run(capsys, "classify", "--config", str(p))
    assert code == EXIT_INPUT and "line" in err


def test_classify_needs_model(capsys):
    assert run(capsys, "classify")[0] == EXIT_INPUT


def test_classify_config_and_preset_conflict(capsys, tmp_path):
    path = write_cfg(tmp_path, {"family": "exact_stable", "alpha": "0.5"})
    assert run(capsys, "classify", "--config", path, "--preset", "sas_const")[0] == EXIT_INPUT


# ---- simulate


SIM = ["simulate", "--preset", "sas_const", "--steps", "400", "--paths", "12", "--seed", "9", "--burn-in", "10"]


def test_simulate_out_dir(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(capsys, *SIM, "--out", str(a), "--per-path")[0] == EXIT_OK
    assert run(capsys, *SIM, "--out", str(b), "--per-path", "--threads", "3")[0] == EXIT_OK
    assert (a / "summary.json").read_bytes() == (b / "summary.json").read_bytes()
    assert (a / "summary.csv").read_bytes() == (b / "summary.csv").read_bytes()
    ma = json.loads((a / "manifest.json").read_text())
    mb = json.loads((b / "manifest.json").read_text())
    assert ma["config_hash"] == mb["config_hash"] and ma["seed"] == 9
    rows = list(csv.DictReader(io.StringIO((a / "summary.csv").read_text())))
    assert len(rows) == 12
    assert list(rows[0]) == ["path_index", "visits", "last_return", "max_abs", "final_abs", "overflow_flag"]
    summary = json.loads((a / "summary.json").read_text())
    assert summary["n_paths"] == 12 and "note" in summary


def test_simulate_text_mentions_score(capsys):
    code, out, _ = run(capsys, *SIM)
    assert code == EXIT_OK and "recurrence_score:" in out


@pytest.mark.parametrize(
    "extra",
    [["--paths", "0"], ["--steps", "0"], ["--burn-in", "400"], ["--radius", "-1"], ["--seed", "-1"]],
)
def test_simulate_bad_options(capsys, extra):
    assert run(capsys, *SIM, *extra)[0] == EXIT_INPUT


# ---- check


def test_check_passes_for_stable(capsys):
    code, out, _ = run(capsys, "check", "--preset", "sas_const", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and d["passed"] and d["decreasing"]


def test_check_pareto_exact(capsys):
    code, out, _ = run(capsys, "check", "--preset", "pareto_sym", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["final"] == 0.0


def test_check_fails_with_exit_4(capsys, tmp_path):
    # scale growing with |x|: far states never reach their tail regime on the y-grid
    cfg = write_cfg(tmp_path, {"family": "exact_stable", "alpha": "1.5", "scale": "1 + abs(x)"})
    code, out, _ = run(capsys, "check", "--config", cfg, "--format", "json")
    d = json.loads(out)
    assert code == EXIT_CHECK and not d["passed"]
    assert d["final"] > 0.1


def test_check_range_violation(capsys, tmp_path):
    cfg = write_cfg(tmp_path, {"family": "exact_stable", "alpha": "2.5"})
    assert run(capsys, "check", "--config", cfg)[0] == EXIT_INPUT


def test_classify_short_grid(capsys):
    assert run(capsys, "classify", "--preset", "sas_const", "--grid", "1e3")[0] == EXIT_INPUT


def test_check_bad_grid(capsys):
    assert run(capsys, "check", "--preset", "sas_const", "--x-grid", "logspace:0:1:2")[0] == EXIT_INPUT


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "stablelike", "constants", "--alpha", "1.5", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert abs(json.loads(r.stdout)["R"] - 1.6852580098) < 1e-9
    r = subprocess.run([sys.executable, "-m", "stablelike", "constants", "--alpha", "5"], capture_output=True)
    assert r.returncode == EXIT_INPUT


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == EXIT_OK and __version__ in out
