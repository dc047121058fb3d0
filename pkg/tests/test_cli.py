import csv
import io
import math

import pytest

from fueter.cli import UsageError, main, parse_grid
from fueter.kernels import bergman_ball
from fueter.quaternion import Quaternion


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_grid():
    g = parse_grid("q=-0.2:0.2:0.1; r=0.3,0.4", ("q", "r"))
    assert g["q"] == [-0.2, -0.1, 0.0, 0.1, 0.2]
    assert g["r"] == [0.3, 0.4]
    assert parse_grid("", ("q",)) == {}
    for bad in ("z=1", "q", "q=1:2", "q=0:1:0", "q=1;q=2"):
        with pytest.raises(UsageError):
            parse_grid(bad, ("q", "r"))


def test_eval_prints_value_and_bound(capsys):
    code, out, _ = run_cli(capsys, "eval", "--kernel", "bergman-ball", "--q", "0.2,0.1,-0.3,0.15",
                           "--p", "0.1,-0.2,0.25,0.3")
    assert code == 0
    first, second = out.strip().splitlines()
    value = Quaternion(*map(float, first.split(",")))
    assert value == bergman_ball(Quaternion(0.2, 0.1, -0.3, 0.15), Quaternion(0.1, -0.2, 0.25, 0.3))
    assert second == "truncation_error_bound,0.0"


def test_eval_series_form_and_wedge(capsys):
    code, out, _ = run_cli(capsys, "eval", "--kernel", "fock", "--q", "0,1,0,0", "--p", "0,1,0,0",
                           "--form", "series", "--truncation", "40")
    assert code == 0
    assert float(out.split(",")[0]) == pytest.approx(math.e, rel=1e-14)
    code, out, _ = run_cli(capsys, "eval", "--kernel", "bergman_wedge", "--wedge-n", "1",
                           "--q", "1,0,0,0", "--p", "1,0,0,0")
    assert code == 0 and float(out.split(",")[0]) == pytest.approx(0.25)


def test_exit_codes(capsys):
    assert run_cli(capsys, "eval", "--kernel", "bergman_ball", "--q", "1,0,0,0", "--p", "0,0,0,0")[0] == 1
    assert run_cli(capsys, "eval", "--kernel", "bergman_wedge", "--wedge-n", "2",
                   "--q", "0.3,0.8,0,0", "--p", "0.3,0.8,0,0")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--kernel", "nope", "--q", "0,0,0,0", "--p", "0,0,0,0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--kernel", "fock", "--q", "0,0,0", "--p", "0,0,0,0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2
    assert run_cli(capsys, "verify", "--suite", "appell", "--truncation", "5")[0] == 2
    assert run_cli(capsys, "table", "--identity", "qsum", "--grid", "s=1")[0] == 2
    capsys.readouterr()


def test_table_fock_moments(capsys):
    code, out, _ = run_cli(capsys, "table", "--identity", "fock-moments", "--grid", "k=0;x=0")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["k", "x", "lhs_w", "lhs_x", "lhs_y", "lhs_z", "rhs_w", "rhs_x", "rhs_y", "rhs_z",
                       "abs_error"]
    assert float(rows[1][2]) == pytest.approx(2 * math.pi, rel=1e-12)
    assert float(rows[1][6]) == pytest.approx(2 * math.pi, rel=1e-15)


def test_table_values_are_reprs(capsys):
    code, out, _ = run_cli(capsys, "table", "--identity", "qsum", "--grid", "q=0.1:0.3:0.1;r=0.5")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    # grid steps use exact fractions, so 0.3 is not 0.30000000000000004
    assert [r[0] for r in rows] == ["0.1", "0.2", "0.3"]
    for row in rows:
        assert all(repr(float(v)) == v for v in row)
        assert float(row[-1]) < 1e-12


def test_table_empty_grid_is_header_only(capsys):
    code, out, _ = run_cli(capsys, "table", "--identity", "phi-gram")
    assert code == 0
    assert out.count("\n") == 1 and out.startswith("t,lhs_w")


def test_table_phi_gram_with_points(capsys):
    code, out, _ = run_cli(capsys, "table", "--identity", "phi-gram", "--grid", "t=0.5,1",
                           "--q", "0.1,0.2,0,0", "--p", "0,0,0.3,0.1")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == 0 and len(rows) == 2
    assert all(float(r[-1]) < 1e-7 for r in rows)


def test_verify_output_file_and_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["verify", "--suite", "wedge", "--seed", "3", "--output", str(a)]) == 0
    assert main(["verify", "--suite", "wedge", "--seed", "3", "--output", str(b)]) == 0
    assert capsys.readouterr().out == ""
    text = a.read_text()
    assert text == b.read_text()
    lines = text.strip().splitlines()
    assert all(line.startswith("PASS wedge/") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_all_passes(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS wedge/n=1 equals pi x half-space kernel" in out


def test_verify_tol_flag_drives_gram_checks(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "fock-kernel", "--tol", "1e-30")
    assert code == 1
    assert "FAIL fock-kernel/Fock Gram <p^m, p^n>" in out
