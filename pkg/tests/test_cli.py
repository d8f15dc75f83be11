import json

import pytest

from qzeta.cli import main
from qzeta.errors import BudgetExceeded


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeta_cn_text(capsys):
    code, out, _ = run(capsys, "zeta", "cn", "--n", "2", "--order", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "1 + (q + q^-1) t + (q^2 + 1 + q^-2) t^2"


def test_zeta_cn_closed_default(capsys):
    code, out, _ = run(capsys, "zeta", "cn", "--n", "2")
    assert code == 0
    assert out.strip() == "1/(1 - q^-1 t)(1 - q t)"


def test_zeta_vm(capsys):
    code, out, _ = run(capsys, "zeta", "vm", "--m", "0")
    assert code == 0
    assert out.strip() == "1/(1 - t)"


def test_nichols(capsys):
    code, out, _ = run(capsys, "nichols", "--sym-group", "3", "--max-degree", "4")
    assert code == 0
    assert out.strip() == "1,3,4,3,1"


def test_nichols_quadratic(capsys):
    code, out, _ = run(capsys, "nichols", "--sym-group", "2", "--max-degree", "3", "--quadratic")
    assert code == 0
    assert out.strip() == "1,1,0,0"


def test_cm_routes_agree(capsys):
    outputs = set()
    for route in ("cs", "extract", "recursion"):
        code, out, _ = run(capsys, "cm", "--m", "3", "--order", "6", "--route", route)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_finite(capsys):
    code, out, _ = run(capsys, "finite", "--n", "3", "--regular")
    assert code == 0
    assert out.strip() == "1 + (3) t + (3) t^2 + t^3"
    code, out, _ = run(capsys, "finite", "--n", "3")
    assert out.strip() == "1/(1 - t)^3"


def test_fit_text(capsys):
    code, out, _ = run(capsys, "fit", "--m", "2")
    assert code == 0
    assert "g_2 = 1" in out
    assert "h_2" in out


def test_sphere(capsys):
    code, out, _ = run(capsys, "sphere", "--coeff", "0")
    assert code == 0
    assert out.strip() == "1"


def test_json_round_trip_byte_identical(capsys):
    code, out, _ = run(capsys, "zeta", "cn", "--n", "3", "--order", "4", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert json.dumps(parsed, sort_keys=True, separators=(",", ":")) == out.strip()
    assert parsed["kind"] == "series"
    assert parsed["metadata"]["command"] == "zeta cn"


def test_json_fraction_exponents(capsys):
    code, out, _ = run(capsys, "sphere", "--coeff", "1", "--format", "json")
    parsed = json.loads(out)
    assert parsed["kind"] == "rational"
    for term in parsed["payload"]["numerator"]["terms"]:
        exp, coeff = term
        assert len(exp) == 2 and len(coeff) == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["zeta", "cn", "--bogus-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_computation_error_exit_1(monkeypatch, capsys):
    import qzeta.cli as cli_mod

    def boom(*args, **kwargs):
        raise BudgetExceeded("synthetic budget failure")

    monkeypatch.setattr(cli_mod, "hilbert_dims", boom)
    code = main(["nichols", "--sym-group", "3", "--max-degree", "2"])
    captured = capsys.readouterr()
    assert code == 1
    assert "synthetic budget failure" in captured.err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sphere")
    assert code == 0
    assert out.count("[PASS]") == 2
