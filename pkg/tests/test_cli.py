"""CLI surface: exit codes, formats, determinism."""

import json
import subprocess
import sys

import numpy as np
import pytest

from zigfast.cli import main
from zigfast.uniform import SEED_ENV_VAR


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_tables_stdout(capsys):
    code, out, _ = run(capsys, "tables", "--dist", "exp")
    assert code == 0
    lines = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert lines["L_max"] == "252"
    assert float(lines["overhang_mass"]) == pytest.approx(4.0 / 256.0, rel=1e-12)
    assert float(lines["epsilon_max"]) == pytest.approx(0.0926, abs=1e-3)


def test_tables_write_and_check(capsys, tmp_path):
    p = tmp_path / "exp.json"
    code, out, _ = run(capsys, "tables", "--dist", "exp", "--out", str(p))
    assert code == 0 and p.exists()
    code, out, _ = run(capsys, "tables", "--check", str(p))
    assert code == 0
    assert "ok" in out


def test_tables_binary_check(capsys, tmp_path):
    p = tmp_path / "n.bin"
    code, _, _ = run(capsys, "tables", "--dist", "normal", "--out", str(p),
                     "--format", "binary")
    assert code == 0
    code, out, _ = run(capsys, "tables", "--check", str(p))
    assert code == 0


def test_tables_check_corrupt(capsys, tmp_path):
    p = tmp_path / "exp.json"
    run(capsys, "tables", "--dist", "exp", "--out", str(p))
    blob = p.read_bytes().replace(b"0x1.", b"0x2.", 1)
    p.write_bytes(blob)
    code, _, err = run(capsys, "tables", "--check", str(p))
    assert code == 2


def test_tables_check_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "tables", "--check", str(tmp_path / "nope.json"))
    assert code == 2
    assert "error:" in err


def test_gen_seeded_text_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "gen", "--dist", "exp", "-n", "500", "--seed", "7",
               "--out", str(a))[0] == 0
    assert run(capsys, "gen", "--dist", "exp", "-n", "500", "--seed", "7",
               "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_text_and_binary_agree(capsys, tmp_path):
    t, b = tmp_path / "v.txt", tmp_path / "v.bin"
    run(capsys, "gen", "--dist", "normal", "-n", "300", "--seed", "9",
        "--out", str(t))
    run(capsys, "gen", "--dist", "normal", "-n", "300", "--seed", "9",
        "--format", "f64le", "--out", str(b))
    # 17 significant digits round-trip doubles exactly
    text_vals = np.array([float(l) for l in t.read_text().split()])
    bin_vals = np.frombuffer(b.read_bytes(), dtype="<f8")
    np.testing.assert_array_equal(text_vals, bin_vals)


def test_gen_zero(capsys, tmp_path):
    p = tmp_path / "z.txt"
    assert run(capsys, "gen", "-n", "0", "--seed", "1", "--out", str(p))[0] == 0
    assert p.read_bytes() == b""


def test_gen_negative_n(capsys):
    code, _, err = run(capsys, "gen", "-n", "-5", "--seed", "1")
    assert code == 2


def test_gen_env_seed(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(SEED_ENV_VAR, "424242")
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "-n", "100", "--out", str(a))
    run(capsys, "gen", "-n", "100", "--out", str(b))
    run(capsys, "gen", "-n", "100", "--seed", "424242",
        "--out", str(tmp_path / "c.txt"))
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() == (tmp_path / "c.txt").read_bytes()


def test_quality_text(capsys):
    code, out, _ = run(capsys, "quality", "--dist", "exp", "-n", "200000",
                       "--seed", "1")
    assert code == 0
    assert out.startswith("Created 200000 exp")
    assert out.strip().endswith("PASS")


def test_quality_json(capsys):
    code, out, _ = run(capsys, "quality", "--dist", "normal", "-n", "200000",
                       "--seed", "1", "--format", "json", "--jobs", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True
    assert len(doc["moments"]) == 5


def test_bench_text_and_json(capsys):
    code, out, _ = run(capsys, "bench", "-n", "100000", "--seed", "1")
    assert code == 0
    assert "modified" in out and "traditional" in out and "speedup=" in out
    code, out, _ = run(capsys, "bench", "-n", "100000", "--seed", "1",
                       "--format", "json", "--algorithms", "traditional")
    assert code == 0
    (doc,) = json.loads(out)
    assert doc["algorithm"] == "traditional"


def test_bench_unknown_algorithm(capsys):
    code, _, err = run(capsys, "bench", "--algorithms", "quantum", "-n", "1000")
    assert code == 2


def test_pathstats_modified(capsys):
    code, out, _ = run(capsys, "pathstats", "--dist", "exp", "-n", "300000",
                       "--seed", "1")
    assert code == 0
    got = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert 0.98 < float(got["common_fraction"]) < 0.99
    assert float(got["tail_fraction"]) == pytest.approx(
        float(got["expected_tail_fraction"]), abs=2e-4)


def test_pathstats_traditional(capsys):
    code, out, _ = run(capsys, "pathstats", "--dist", "normal", "-n", "300000",
                       "--seed", "1", "--traditional")
    assert code == 0
    got = dict(l.split(" ", 1) for l in out.strip().splitlines())
    assert 0.97 < float(got["fast_accept_fraction"]) < 0.99


def test_console_script_installed():
    out = subprocess.run(
        [sys.executable, "-m", "zigfast.cli", "gen", "-n", "3", "--seed", "7"],
        capture_output=True, text=True)
    assert out.returncode == 0
    vals = [float(v) for v in out.stdout.split()]
    assert vals[0] == pytest.approx(0.15069938164952687, abs=0)
