import csv
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from genvirial.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_OK, RunConfig, main
from genvirial.errors import ConfigError

OSC_INI = """\
[potential]
kind = oscillator
[dimension]
N = 3
[states]
list = 0,0; 1,0; 0,1
[probes]
j = 0, 1, 2, 3, 2l+2, -2l, 3/2, exp, sin
[grid]
h = 0.002
[tolerance]
relative = 1e-6
"""

CLASSICAL_INI = """\
[potential]
kind = coulomb
strength = 1
[classical]
E = -0.5
l2 = 0.5
probes = 1, 2, 3
"""


def _write(tmp_path, text, name="run.ini"):
    p = tmp_path / name
    p.write_text(text)
    return p


def _run(tmp_path, command, text, *extra, name="run.ini"):
    cfg = _write(tmp_path, text, name)
    out = tmp_path / "out"
    return main([command, "--config", str(cfg), "--out", str(out), *extra]), out


def test_solve_writes_states(tmp_path, capsys):
    code, out = _run(tmp_path, "solve", OSC_INI)
    assert code == EXIT_OK
    names = sorted(p.name for p in (out / "states").iterdir())
    assert names == sorted(f"power_N3_n{n}_l{l}.{ext}" for n, l in [(0, 0), (1, 0), (0, 1)]
                           for ext in ("csv", "json"))
    meta = json.loads((out / "states" / "power_N3_n1_l0.json").read_text())
    assert meta["eps"] == pytest.approx(3.5, abs=1e-9)
    assert "power_N3_n0_l1" in capsys.readouterr().out


def test_verify_reports(tmp_path):
    code, out = _run(tmp_path, "verify", OSC_INI)
    assert code == EXIT_OK
    rows = json.loads((out / "reports" / "relations.json").read_text())
    assert all(abs(r["relative_residual"]) <= 1e-6 for r in rows)
    rel = {r["relation"] for r in rows}
    assert {"general[rho^0]", "general[exp]", "general[sin]", "general[rho^1.5]"} <= rel
    assert any(r.startswith("chain_v") for r in rel) and "J1_virial" in rel
    with (out / "reports" / "relations.csv").open() as fh:
        table = list(csv.reader(fh))
    assert len(table) == len(rows) + 1
    run = json.loads((out / "reports" / "run.json").read_text())
    assert run["command"] == "verify" and run["config"]["states"]["list"] == "0,0; 1,0; 0,1"


def test_verify_failure_exit(tmp_path, capsys):
    # a very coarse grid cannot meet a tight tolerance
    code, _ = _run(tmp_path, "verify", OSC_INI, "--tol", "1e-14", "--grid-h", "0.05")
    assert code == EXIT_FAIL
    assert "exceed" in capsys.readouterr().err


def test_ndim(tmp_path):
    text = OSC_INI.replace("N = 3", "N = 5").replace("list = 0,0; 1,0; 0,1", "list = 0,0; 0,1") \
        .replace("j = 0, 1, 2, 3, 2l+2, -2l, 3/2, exp, sin", "j = q0, 1, 2, 3")
    code, out = _run(tmp_path, "ndim", text)
    assert code == EXIT_OK
    rows = json.loads((out / "reports" / "relations.json").read_text())
    assert rows and all(r["relation"].startswith("ndim[") for r in rows)


def test_classical(tmp_path):
    code, out = _run(tmp_path, "classical", CLASSICAL_INI)
    assert code == EXIT_OK
    rep = json.loads((out / "reports" / "classical.json").read_text())
    assert rep["orbit"]["period"] == pytest.approx(6.283185307179586, rel=1e-9)
    assert rep["averages"]["T"] == pytest.approx(0.5, abs=1e-9)
    assert all(r["pass"] for r in rep["residuals"])


def test_classical_gap(tmp_path):
    text = "[potential]\nkind = oscillator\n[classical]\nE = 1.5\nl2 = 0\nprobes = 3\ngap_state = 0,0\n"
    code, out = _run(tmp_path, "classical", text)
    assert code == EXIT_OK
    rows = json.loads((out / "reports" / "classical.json").read_text())["gap"]["rows"]
    assert rows[0]["predicted_gap"] == pytest.approx(-1.5, abs=1e-9)


def test_classical_unbound_orbit(tmp_path):
    code, out = _run(tmp_path, "classical", CLASSICAL_INI.replace("E = -0.5", "E = 0.2"))
    assert code == EXIT_FAIL
    assert "error" in json.loads((out / "reports" / "classical.json").read_text())


def test_json_config(tmp_path):
    text = json.dumps({"potential": {"kind": "linear"}, "states": {"list": [[0, 0], [1, 0]]},
                       "grid": {"h": 0.002}})
    code, out = _run(tmp_path, "verify", text, name="run.json")
    assert code == EXIT_OK
    assert (out / "states" / "power_N3_n1_l0.csv").exists()


@pytest.mark.parametrize("text", [
    "[potential]\nkind = quartic\n",
    "[potential]\nkind = oscillator\ncolour = red\n",
    "[bogus]\nx = 1\n",
    "[grid]\nh = -1\n",
    "[states]\nlist = 0\n",
    "[probes]\nj = foo\n",
    "[relations]\nselect = everything\n",
    "[dimension]\nN = 1\n[states]\nlist = 0,1\n",
    "[tolerance]\nrelative = nan\n",
    "not an ini file",
])
def test_config_errors(tmp_path, text):
    code, _ = _run(tmp_path, "verify", text)
    assert code == EXIT_CONFIG


def test_argument_errors(tmp_path):
    cfg = _write(tmp_path, OSC_INI)
    out = str(tmp_path / "o")
    assert main(["explode", "--config", str(cfg), "--out", out]) == EXIT_CONFIG
    assert main(["solve", "--out", out]) == EXIT_CONFIG
    assert main(["solve", "--config", str(tmp_path / "missing.ini"), "--out", out]) == EXIT_CONFIG
    assert main(["solve", "--config", str(cfg), "--out", out, "--tol", "0"]) == EXIT_CONFIG
    assert main(["classical", "--config", str(cfg), "--out", out]) == EXIT_CONFIG


def test_module_entry_point(tmp_path):
    cfg = _write(tmp_path, CLASSICAL_INI)
    proc = subprocess.run([sys.executable, "-m", "genvirial", "classical", "--config", str(cfg),
                           "--out", str(tmp_path / "o")], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "period" in proc.stdout


_pair = st.tuples(st.integers(0, 4), st.integers(0, 3))


@settings(max_examples=60, deadline=None)
@given(kind=st.sampled_from(["oscillator", "linear", "power", "coulomb"]),
       N=st.integers(2, 6), states=st.lists(_pair, min_size=1, max_size=4),
       probes=st.lists(st.sampled_from(["0", "1", "2l+2", "-2l", "q0", "3/2", "exp"]), min_size=1),
       h=st.floats(1e-4, 1e-2), tol=st.floats(1e-12, 1e-2),
       classical=st.booleans())
def test_config_round_trip(kind, N, states, probes, h, tol, classical):
    cfg = RunConfig(kind=kind, N=N, states=states, probes=probes, h=h, tol=tol)
    if kind == "power":
        cfg.A, cfg.m = 2.0, 1.5
    if classical:
        cfg.E, cfg.l2, cfg.gap_state = -0.25, 0.5, states[0]
    back = RunConfig.from_ini(cfg.to_ini())
    assert back.to_dict() == cfg.to_dict()
    assert RunConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))).to_dict() == cfg.to_dict()


def test_unknown_keys_rejected():
    with pytest.raises(ConfigError, match="unknown key"):
        RunConfig.from_dict({"grid": {"h": 0.01, "step": 2}})
    with pytest.raises(ConfigError, match="unknown section"):
        RunConfig.from_dict({"grids": {}})
