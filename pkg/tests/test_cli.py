"""Command line behaviors: output shapes, exit codes, determinism."""

import json
import shutil
import subprocess
from importlib import resources

import pytest

from ia3 import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_witt_prints_the_rank(capsys):
    code, out, _ = run(capsys, "witt", "-n", "9", "-k", "3")
    assert code == 0 and out.strip() == "240"


def test_bracket_rank(capsys):
    code, out, _ = run(capsys, "bracket", "--rank")
    assert code == 0 and out.strip() == "162"


def test_hall_counts_and_emits(tmp_path, capsys):
    path = tmp_path / "trees.txt"
    code, out, _ = run(capsys, "hall", "-n", "9", "-k", "3", "--emit", str(path))
    assert code == 0
    assert out.splitlines()[0] == "240"
    lines = path.read_text().splitlines()
    assert len(lines) == 240
    assert lines[0] == "[K13,K12,K12]"


def test_relators_single(capsys):
    code, out, _ = run(capsys, "relators", "--id", "R1-1")
    record = json.loads(out)
    assert code == 0 and record["verified"] is True
    assert record["word"] == "K32*K12*K32^-1*K12^-1"


def test_relators_lists_all_18(capsys):
    code, out, _ = run(capsys, "relators")
    records = json.loads(out)
    assert code == 0 and len(records) == 18
    assert all(r["verified"] for r in records)


def test_relators_unknown_id(capsys):
    assert run(capsys, "relators", "--id", "R9-9")[0] == 2


def test_decompose_module(capsys):
    code, out, _ = run(capsys, "decompose", "--module", "lie3")
    payload = json.loads(out)
    assert code == 0 and payload["dimension"] == 240


def test_decompose_usage_errors(capsys):
    assert run(capsys, "decompose", "--tensor", "1,0", "1,0,0")[0] == 2
    assert run(capsys, "decompose", "--ext", "0,1,2", "1")[0] == 2
    assert run(capsys, "decompose", "--ext", "1,0,0", "x")[0] == 2


def test_johnson_vector(capsys):
    code, out, _ = run(capsys, "johnson", "--vector", "v4")
    record = json.loads(out)
    assert code == 0 and record["status"] == "pass"
    assert record["details"]["tau2_vanishes"] is True


def test_johnson_v3_is_informational(capsys):
    code, out, _ = run(capsys, "johnson", "--vector", "v3")
    record = json.loads(out)
    assert code == 0 and record["status"] == "finding"


def test_deep_relator_command(capsys):
    code, out, _ = run(capsys, "deep-relator")
    assert code == 0 and json.loads(out)["ok"] is True


def test_table1_failure_gives_exit_1(tmp_path, capsys):
    text = resources.files("ia3.data").joinpath("table1.csv").read_text()
    lines = text.strip().splitlines()
    assert lines[1].endswith(",(4)")
    lines[1] = lines[1][:-len("(4)")]  # unmark one tree: counts go 161/79
    bad = tmp_path / "marks.csv"
    bad.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "table1", "--data", str(bad))
    assert code == 1
    assert json.loads(out)["ok"] is False


def test_verify_all_passes_and_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--all")
    code2, out2, _ = run(capsys, "verify", "--all")
    assert code1 == code2 == 0
    first, second = json.loads(out1), json.loads(out2)
    assert len(first["records"]) == 10
    assert all(rec["status"] == "pass" for rec in first["records"])
    assert {"timestamp", "wall_clock_seconds"} <= set(first["metadata"])
    first.pop("metadata")
    second.pop("metadata")
    assert first == second


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert lines[-1].startswith("10 passed, 0 failed")


def test_emit_writes_identical_artifacts(tmp_path, capsys):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "emit", "--dir", str(d1))[0] == 0
    assert run(capsys, "emit", "--dir", str(d2))[0] == 0
    names = sorted(p.name for p in d1.iterdir())
    assert names == sorted(p.name for p in d2.iterdir())
    assert "bracket_matrix.png" in names and "table1_grid.png" in names
    for name in names:
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes(), name

    matrix_rows = (d1 / "bracket_matrix.csv").read_text().strip().splitlines()
    assert len(matrix_rows) == 240
    labels = json.loads((d1 / "bracket_matrix.labels.json").read_text())
    assert len(labels["rows"]) == 240 and len(labels["columns"]) == 162
    status = (d1 / "table1_status.csv").read_text().strip().splitlines()
    assert len(status) == 241
    assert sum(1 for line in status if line.endswith(",cokernel-basis")) == 78
    report = json.loads((d1 / "report.json").read_text())
    assert all(rec["status"] == "pass" for rec in report["records"])
    for name in ("W", "lie3"):
        payload = json.loads((d1 / f"decomposition_{name}.json").read_text())
        assert payload["module"] == name


def test_output_dir_env_var(tmp_path, capsys, monkeypatch):
    target = tmp_path / "fromenv"
    monkeypatch.setenv(cli.OUTPUT_DIR_VAR, str(target))
    monkeypatch.setattr(cli.checks, "run_all", lambda: [])
    code, _, _ = run(capsys, "emit")
    assert code == 0 and target.is_dir()
    assert (target / "bracket_matrix.csv").exists()


def test_console_script():
    exe = shutil.which("ia3")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "witt"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "240"
