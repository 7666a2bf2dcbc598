import io
import json

import pytest

from icosaquintic import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_complex():
    assert cli.parse_complex("1.5") == 1.5
    assert cli.parse_complex("1,-2") == 1 - 2j
    assert cli.parse_complex("0:3") == 3j
    assert cli.parse_coefficients("0,0,1:1,0,-1") == [0, 0, 1 + 1j, 0, -1]


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--coeffs", "0,0,0,0,-1")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert len(data["roots"]) == 5
    assert data["max_residual"] < 1e-10
    assert data["fallback_used"] is True


def test_solve_repeated_roots(capsys):
    code, _, err = run(capsys, "solve", "--coeffs", "0,0,5,5,1")
    assert code == cli.EXIT_DEGENERATE
    assert "repeated roots" in err


def test_solve_without_fallback(capsys):
    code, _, _ = run(capsys, "solve", "--coeffs", "0,0,0,0,-1", "--no-fallback")
    assert code == cli.EXIT_DEGENERATE


def test_solve_needs_input(capsys):
    code, _, err = run(capsys, "solve")
    assert code == cli.EXIT_USAGE
    assert "--coeffs" in err


def test_bad_coefficients():
    with pytest.raises(SystemExit) as info:
        cli.main(["solve", "--coeffs", "1,2"])
    assert info.value.code == cli.EXIT_USAGE


def test_solve_json(capsys, monkeypatch):
    request = {"coefficients": [0, 0, 0, -1, [0.1, 0]], "method": "series"}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(request)))
    code, out, _ = run(capsys, "solve", "--json")
    assert code == cli.EXIT_OK
    assert json.loads(out)["method_used"] == "series"


def test_solve_malformed_json(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"method": "oracle"}'))
    code, _, _ = run(capsys, "solve", "--json")
    assert code == cli.EXIT_USAGE


def test_solve_batch(capsys, monkeypatch):
    lines = [
        json.dumps({"coefficients": [1, 2, 3, 4, 5], "method": "oracle"}),
        "",
        json.dumps({"coefficients": [0, 0, 5, 5, 1]}),
    ]
    monkeypatch.setattr("sys.stdin", io.StringIO("\n".join(lines)))
    code, out, _ = run(capsys, "solve", "--batch")
    assert code == cli.EXIT_OK
    first, second = (json.loads(line) for line in out.splitlines())
    assert len(first["roots"]) == 5
    assert second["exit_code"] == cli.EXIT_DEGENERATE


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", "--alpha", "0", "--beta", "1", "--gamma", "0")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["D"] == [256.0, 0.0]
    assert data["Z1"] == pytest.approx([1.0, 0.0])
    assert data["Z2"] == pytest.approx([1.0, 0.0])


def test_invariant_degenerate(capsys):
    code, _, _ = run(capsys, "invariant", "--alpha", "0", "--beta", "0", "--gamma", "1")
    assert code == cli.EXIT_DEGENERATE


def test_invert(capsys):
    code, out, _ = run(capsys, "invert", "--Z", "2,0")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["path"] == "series"
    assert complex(*data["I_of_z"]) == pytest.approx(2, abs=1e-7)


def test_bring(capsys):
    code, out, _ = run(capsys, "bring", "--gamma", "0.1")
    assert code == cli.EXIT_OK
    data = json.loads(out)
    assert data["root"][0] == pytest.approx(0.1000100050035, rel=1e-12)
    assert data["residual"] < 1e-14


def test_bring_plus(capsys):
    code, out, _ = run(capsys, "bring", "--gamma=-0.2,0.1", "--plus")
    assert code == cli.EXIT_OK
    assert json.loads(out)["residual"] < 1e-12


def test_bring_outside_radius(capsys):
    code, _, _ = run(capsys, "bring", "--gamma", "0.6")
    assert code == cli.EXIT_USAGE


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "syzygy", "group", "series")
    assert code == cli.EXIT_OK
    assert out.count("PASS") == 3


def test_certify_json(capsys):
    code, out, _ = run(capsys, "certify", "vertices", "--json")
    assert code == cli.EXIT_OK
    (cert,) = json.loads(out)
    assert cert["name"] == "vertices"
    assert cert["passed"] is True


def test_certify_unknown(capsys):
    code, _, err = run(capsys, "certify", "nonsense")
    assert code == cli.EXIT_USAGE
    assert "nonsense" in err


def test_invert_non_finite(capsys):
    code, _, err = run(capsys, "invert", "--Z", "inf")
    assert code == cli.EXIT_USAGE
    assert "finite" in err


def test_internal_errors_are_not_usage_errors(monkeypatch):
    def broken(Z):
        raise ValueError("operands could not be broadcast together")

    monkeypatch.setattr(cli._inverter, "invert_icosahedral", broken)
    with pytest.raises(ValueError, match="broadcast"):
        cli.main(["invert", "--Z", "2,0"])
