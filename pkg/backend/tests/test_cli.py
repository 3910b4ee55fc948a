from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest
from helpers import const, unit, x_of

from cli import EXIT_INVALID, EXIT_NO_SOLUTION, EXIT_OK, CliConfig, main
from documents import poly_from_json, poly_to_json, write_document
from operations import registry

SRC_DIR = Path(__file__).resolve().parent.parent / "src"


def _write(tmp_path: Path, name: str, doc) -> str:
    path = tmp_path / name
    write_document(doc, path)
    return str(path)


def test_parse_argv():
    config = CliConfig.parse_argv(registry, ["diff", "--var", "2", "-i", "p.json", "-v"])
    assert config.operation == "diff"
    assert config.raw_inputs == {"input": "p.json", "var": 2}
    assert config.verbose
    assert config.output_format == "json"


def test_parse_grouped_command():
    config = CliConfig.parse_argv(
        registry, ["haar", "verify", "--k", "1", "--N", "8", "--seed", "3", "--output", "table"]
    )
    assert config.operation == "haar verify"
    assert config.raw_inputs["k"] == 1
    assert config.raw_inputs["N"] == 8
    assert config.raw_inputs["raw"] is None
    assert config.output_format == "table"


def test_unknown_command_exits():
    with pytest.raises(SystemExit) as info:
        CliConfig.parse_argv(registry, ["integrate"])
    assert info.value.code == EXIT_INVALID


def test_malformed_flag_is_invalid_input(tmp_path, capsys, scalars):
    src = _write(tmp_path, "x.json", poly_to_json(x_of(scalars)))
    with pytest.raises(SystemExit) as info:
        main(["diff", "-i", src, "--var", "abc"])
    assert info.value.code == EXIT_INVALID
    assert "invalid int value" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["haar", "verify", "--k", "2", "--output", "xml"])
    assert info.value.code == EXIT_INVALID
    capsys.readouterr()


def test_antiderivative_to_file(tmp_path, scalars):
    x = x_of(scalars)
    src = _write(tmp_path, "q.json", poly_to_json(x.scale(2)))
    out = tmp_path / "p.json"
    assert main(["antiderivative-cyclic", "-i", src, "-o", str(out)]) == EXIT_OK
    assert poly_from_json(json.loads(out.read_text(encoding="utf-8"))) == x * x


def test_kernel_check_prints_json(tmp_path, capsys, m2):
    src = _write(tmp_path, "b.json", poly_to_json(const(m2, unit(2, 2, 1))))
    assert main(["kernel-check", "-i", src]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"type": "verdict", "check": "in kernel", "value": True}


def test_no_solution_exit_code(tmp_path, capsys, m2):
    b = const(m2, unit(2, 1, 1))
    src = _write(tmp_path, "q.json", poly_to_json(b * x_of(m2)))
    assert main(["antiderivative-cyclic", "-i", src]) == EXIT_NO_SOLUTION
    assert "ncfree: error:" in capsys.readouterr().err


def test_invalid_input_exit_code(tmp_path, capsys, scalars):
    broken = tmp_path / "broken.json"
    broken.write_text("[", encoding="utf-8")
    assert main(["diff", "-i", str(broken)]) == EXIT_INVALID
    assert main(["diff"]) == EXIT_INVALID
    assert main(["diff", "-i", str(tmp_path / "missing.json")]) == EXIT_INVALID
    src = _write(tmp_path, "x.json", poly_to_json(x_of(scalars)))
    assert main(["diff", "-i", src, "--var", "3"]) == EXIT_INVALID
    assert main(["audit", "--samples", "1"]) == EXIT_INVALID
    capsys.readouterr()


def test_table_output(tmp_path, capsys):
    assert main(["haar", "verify", "--k", "1", "--N", "8", "--samples", "40", "--seed", "1", "--output", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "passed: yes" in out
    assert "word_i" in out


def test_haar_verify_scalar_targets(tmp_path):
    out = tmp_path / "verify.json"
    assert main(["haar", "verify", "--k", "1", "--N", "8", "--samples", "40", "--seed", "9", "-o", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text(encoding="utf-8"))
    diagonal = [row for row in doc["rows"] if row["word_i"] == row["word_j"]]
    assert diagonal
    assert all(row["target"] == 1.0 for row in diagonal)


def test_several_polynomials(tmp_path, capsys, scalars):
    x1, x2 = x_of(scalars, 2, 1), x_of(scalars, 2, 2)
    first = _write(tmp_path, "q1.json", poly_to_json(x2))
    second = _write(tmp_path, "q2.json", poly_to_json(x1))
    assert main(["check-cyclic-exact", "-i", first, "-i", second]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] is True


def test_module_entry_point_with_real_streams(tmp_path, scalars):
    x = x_of(scalars)
    src = _write(tmp_path, "q.json", poly_to_json(x.scale(2)))
    completed = subprocess.run(
        [sys.executable, "-m", "cli", "antiderivative-cyclic", "-i", src, "-v"],
        cwd=SRC_DIR,
        capture_output=True,
        text=True,
        check=False,
    )
    assert completed.returncode == EXIT_OK, completed.stderr
    assert poly_from_json(json.loads(completed.stdout)) == x * x


def test_logs_stay_off_stdout(tmp_path, capsys, scalars):
    src = _write(tmp_path, "x.json", poly_to_json(x_of(scalars)))
    assert main(["diff", "-i", src, "-v"]) == EXIT_OK
    captured = capsys.readouterr()
    assert json.loads(captured.out)["type"] == "tensor"
    assert "Ran diff" in captured.err
