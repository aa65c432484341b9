import json

from hitbox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "3*X^4-4*X^3+1")
    assert code == 0
    assert "(X - 1)^2" in out and "type: [1, 1, 2]" in out
    code, out, _ = run(capsys, "factor", "X^6+63", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["irreducible"] is True and payload["type"] == [6]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "factor", "3*X^^4")
    assert code == 2
    assert "position" in err


def test_galois_command(capsys):
    code, out, _ = run(capsys, "galois", "X^5-X-1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["label"] == "5T5" and payload["order"] == 120


def test_disc_command(capsys):
    code, out, _ = run(capsys, "disc", "X^2-T")
    assert code == 0 and out.strip() == "4*T"
    code, out, _ = run(capsys, "disc", "X^2+X+1")
    assert code == 0 and out.strip() == "-3"


def test_compute_d_command(capsys):
    code, out, _ = run(capsys, "hit", "compute-d", "--fixture", "serre-a4")
    assert code == 0 and out.strip() == "{0}"
    code, out, _ = run(capsys, "hit", "compute-d", "--fixture", "fermat-x6", "--json")
    assert code == 0
    assert json.loads(out)["D"] == ["-1", "1"]


def test_validation_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {"name": "bad", "P": "X^2 - T", "D": ["0"], "S": ["2*X^2 - T"]}
        )
    )
    code, _, err = run(capsys, "hit", "compute-d", "--fixture", str(bad))
    assert code == 3
    assert "monic" in err


def test_verify_command_and_determinism(capsys):
    code, out1, _ = run(
        capsys, "hit", "verify", "--fixture", "serre-a4", "--height", "6", "--json"
    )
    assert code == 0
    code, out2, _ = run(
        capsys, "hit", "verify", "--fixture", "serre-a4", "--height", "6", "--json",
        "--threads", "2",
    )
    assert code == 0
    assert out1 == out2  # byte-identical report, parallel or not
    payload = json.loads(out1)
    assert payload["passed"] is True
    assert payload["reference"]["label"] == "4T4"


def test_verify_table_output(capsys):
    code, out, _ = run(capsys, "hit", "verify", "--fixture", "serre-a4", "--height", "5")
    assert code == 0
    assert "violations: 0" in out and "passed: True" in out


def test_verify_with_factor_type_check(capsys):
    code, out, _ = run(
        capsys, "hit", "verify", "--fixture", "fermat-x6", "--height", "4",
        "--factor-types", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"]["factorization_violations"] == 0


def test_enumerate_command(capsys):
    code, out, _ = run(
        capsys,
        "hit",
        "enumerate",
        "--fixture",
        "serre-a4",
        "--height",
        "10",
        "--cross-check",
        "--json",
    )
    assert code == 0
    payload = json.loads(out)
    ts = [r["t"] for r in payload["exceptional"]]
    assert ts == ["-9/10", "9/10"]
    assert payload["psi_cross_check"] is True


def test_curve_commands(capsys):
    code, out, _ = run(capsys, "curve", "torsion", "--A", "0", "--B", "1", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 6
    code, out, _ = run(capsys, "curve", "cases")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(
        capsys, "curve", "search", "--curve", "X^2 - 3*(T^6-1)", "--height", "20", "--json"
    )
    assert code == 0
    assert json.loads(out)["points"] == [["-1", "0"], ["1", "0"]]
    code, out, _ = run(
        capsys, "curve", "param-check", "--fixture", "serre-a4", "--height", "40", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["parametrization_verified"] is True
    assert payload["unit_fiber_points"] == [["0", "-40"], ["0", "-4"]]


def test_local_conic_command(capsys):
    code, out, _ = run(
        capsys, "local", "conic", "--a", "-1", "--b", "2", "--c", "-3", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["local"]["2"] is False and payload["global"] is False


def test_table_command(capsys):
    code, out, _ = run(capsys, "table", "transitive", "--degree", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["entries"]) == 16
    orders = sorted(e["order"] for e in payload["entries"])
    assert orders == [6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720]


def test_output_file(capsys, tmp_path):
    out_file = tmp_path / "d.json"
    code, out, _ = run(
        capsys, "hit", "compute-d", "--fixture", "serre-a4", "--json", "--out", str(out_file)
    )
    assert code == 0 and out == ""
    assert json.loads(out_file.read_text())["D"] == ["0"]
