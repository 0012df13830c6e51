import csv
import io
import json
from fractions import Fraction

import pytest

from sizeramsey import cli
from sizeramsey.cli import format_spec_text, main, parse_spec_text
from sizeramsey.ramsey_core import ProblemSpec

F = Fraction

FRS_SPEC = "2 2\n2 1\n2 1\n"


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_spec_text():
    spec = parse_spec_text(FRS_SPEC)
    assert spec == ProblemSpec(((2, F(1)), (2, F(1))))
    spec = parse_spec_text("1 2\n1 1\n2\n")
    assert spec == ProblemSpec(((1, F(1)),), (2,))
    spec = parse_spec_text("# a comment\n1 1  # inline\n2 3/2\n")
    assert spec == ProblemSpec(((2, F(3, 2)),))
    # whitespace-token grammar: line breaks are cosmetic
    assert parse_spec_text("2 2 2 1 2 1") == parse_spec_text(FRS_SPEC)


def test_parse_spec_errors():
    for bad in ("", "2", "0 1", "1 0", "1 1 2", "1 1 2 1 9", "1 1 2 1.5", "2 1 2 1"):
        with pytest.raises(cli.SpecParseError):
            parse_spec_text(bad)


def test_spec_round_trip():
    for text in (FRS_SPEC, "1 2\n1 1\n2\n", "2 3\n1 3/2\n2 7\n3\n"):
        spec = parse_spec_text(text)
        assert parse_spec_text(format_spec_text(spec)) == spec


def test_compute_text_output(capsys, tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text(FRS_SPEC)
    code, out, _ = run_cli(capsys, ["compute", "--spec", str(path)])
    assert code == 0
    assert out == "18\n"


def test_compute_json_output(capsys, tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text(FRS_SPEC)
    code, out, _ = run_cli(capsys, ["compute", "--spec", str(path), "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "18"
    assert payload["argmin_s"] == 3
    assert payload["t_prime"] == "6"
    assert payload["terminated_at"] == 9
    assert [row["s"] for row in payload["table"]] == [3, 4, 5, 6, 7, 8]


def test_compute_output_is_stable(capsys, tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text("2 3\n2 1\n2 3/2\n2\n")
    outputs = set()
    for _ in range(2):
        for fmt in ("text", "json", "csv"):
            code, out, _ = run_cli(capsys, ["compute", "--spec", str(path), "--format", fmt])
            assert code == 0
            outputs.add((fmt, out))
    assert len(outputs) == 3  # byte-identical across runs


def test_compute_flag_based_spec(capsys):
    code, out, _ = run_cli(
        capsys, ["compute", "--dilating", "1,1", "--fixed", "5,2"]
    )
    assert code == 0
    assert out == "4\n"  # fixed pair reduced via min(5, 2) = 2


def test_compute_verbose_table(capsys, tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text(FRS_SPEC)
    code, out, _ = run_cli(capsys, ["compute", "--spec", str(path), "--verbose"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s=3 t_prime=6 candidate=18"
    assert lines[-1] == "18"
    assert any(line.startswith("witness s=3") for line in lines)


def test_compute_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("not a spec\n")
    code, out, err = run_cli(capsys, ["compute", "--spec", str(path)])
    assert code == 2
    assert out == ""
    assert "error" in err


def test_compute_missing_file_exit_code(capsys):
    code, _, err = run_cli(capsys, ["compute", "--spec", "/no/such/file"])
    assert code == 2


def test_compute_instance_too_large_exit_code(capsys, tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text(FRS_SPEC)
    code, _, err = run_cli(
        capsys, ["compute", "--spec", str(path), "--max-columns", "2"]
    )
    assert code == 3
    assert "too large" in err


def test_closed_form_outputs(capsys):
    code, out, _ = run_cli(capsys, ["closed-form", "q2", "--s", "2"])
    assert (code, out) == (0, "18 @ a=3\n")
    code, out, _ = run_cli(capsys, ["closed-form", "q1star", "--fixed", "3"])
    assert (code, out) == (0, "8\n")
    code, out, _ = run_cli(capsys, ["closed-form", "q1", "--s", "2", "--fixed", "2"])
    assert (code, out) == (0, "8 @ s=4\n")
    code, out, _ = run_cli(
        capsys, ["closed-form", "q2", "--s", "2", "--fixed", "2", "--format", "json"]
    )
    assert code == 0
    assert json.loads(out) == {"value": "45", "argmin": 6, "scanned_upper": 22}


def test_closed_form_bad_parameters(capsys):
    code, _, _ = run_cli(capsys, ["closed-form", "q1star", "--fixed", ""])
    assert code == 2
    code, _, _ = run_cli(capsys, ["closed-form", "q1"])
    assert code == 2


def test_verify_outputs(capsys):
    code, out, _ = run_cli(
        capsys, ["verify", "--graph", "K6", "--forbid", "2,2", "--forbid", "2,2"]
    )
    assert (code, out) == (0, "ARROWS\n")
    code, out, _ = run_cli(
        capsys, ["verify", "--graph", "K3,6", "--forbid", "2,2", "--forbid", "2,2"]
    )
    assert code == 0
    assert out.startswith("AVOIDED ")
    assert len(out.split()[1]) == 18
    code, out, _ = run_cli(
        capsys, ["verify", "--graph", "K1,4", "--forbid", "1,2", "--forbid", "1,2"]
    )
    assert (code, out) == (0, "ARROWS\n")


def test_verify_budget_exit_code(capsys):
    code, _, err = run_cli(
        capsys,
        [
            "verify",
            "--graph",
            "K3,7",
            "--forbid",
            "2,2",
            "--forbid",
            "2,2",
            "--budget",
            "100",
        ],
    )
    assert code == 4
    assert "budget" in err


def test_verify_bad_graph(capsys):
    code, _, _ = run_cli(capsys, ["verify", "--graph", "Q6", "--forbid", "2,2"])
    assert code == 2


def _read_csv(text):
    return list(csv.reader(io.StringIO(text)))


def test_sweep_q1_star_values(capsys):
    code, out, _ = run_cli(
        capsys, ["sweep", "--kind", "q1", "--s", "1", "--fixed", "2;3;4"]
    )
    assert code == 0
    rows = _read_csv(out)
    assert rows[0] == cli.SWEEP_HEADER
    assert [r[3] for r in rows[1:]] == ["4", "8", "12"]
    assert all(r[8] == "true" for r in rows[1:])
    assert all(r[9] == "" for r in rows[1:])


def test_sweep_q2_contains_18(capsys):
    code, out, _ = run_cli(capsys, ["sweep", "--kind", "q2", "--s", "2,3"])
    assert code == 0
    rows = _read_csv(out)
    by_s = {r[1]: r for r in rows[1:]}
    assert by_s["2"][3] == "18"
    assert all(r[8] == "true" for r in rows[1:])


def test_sweep_empty_grid_header_only(capsys):
    code, out, _ = run_cli(capsys, ["sweep", "--kind", "q2", "--s", ""])
    assert code == 0
    assert _read_csv(out) == [cli.SWEEP_HEADER]


def test_sweep_to_file_and_parallel_determinism(capsys, tmp_path):
    args = ["sweep", "--kind", "q1", "--s", "1,2", "--fixed", "2;3"]
    seq_path = tmp_path / "seq.csv"
    par_path = tmp_path / "par.csv"
    assert main(args + ["--out", str(seq_path)]) == 0
    assert main(args + ["--out", str(par_path), "--jobs", "2"]) == 0
    capsys.readouterr()
    assert seq_path.read_text() == par_path.read_text()
