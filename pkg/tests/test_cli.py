"""Console entry point: output goldens, formats, and exit codes."""

import json

import pytest

from ncbell import bell, bell_partial, mobius_invert
from ncbell.algebra import from_json_dict
from ncbell.cli import main
from ncbell.hopf import antipode_recursive


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_bell_golden(capsys):
    code, out, _ = run(capsys, "bell", "--nc", "-n", "3", "--format", "text")
    assert code == 0
    assert out == "d1^3 + d2*d1 + 2*d1*d2 + d3"


def test_bell_zero(capsys):
    code, out, _ = run(capsys, "bell", "-n", "0")
    assert code == 0
    assert out == "1"


def test_bell_commutative(capsys):
    code, out, _ = run(capsys, "bell", "--c", "-n", "4")
    assert code == 0
    assert out == "d1^4 + 6*d1^2*d2 + 3*d2^2 + 4*d1*d3 + d4"


def test_bell_partial_flag(capsys):
    code, out, _ = run(capsys, "bell", "-n", "3", "-k", "2")
    assert code == 0
    assert out == "d2*d1 + 2*d1*d2"


def test_bell_scaled(capsys):
    code, out, _ = run(capsys, "bell", "-n", "3", "--scaled")
    assert code == 0
    assert out == "1/6*d1^3 + 1/3*d2*d1 + 2/3*d1*d2 + d3"


def test_bell_json_round_trip(capsys):
    code, out, _ = run(capsys, "bell", "--nc", "-n", "5", "--format", "json")
    assert code == 0
    assert from_json_dict(json.loads(out)) == bell(5, "nc")


def test_partial_verb(capsys):
    code, out, _ = run(capsys, "partial", "-n", "6", "-k", "3", "--format", "json")
    assert code == 0
    assert from_json_dict(json.loads(out)) == bell_partial(6, 3)


def test_bell_latex(capsys):
    code, out, _ = run(capsys, "bell", "-n", "3", "--format", "latex")
    assert code == 0
    assert out == "d_1^3 + d_2 d_1 + 2 d_1 d_2 + d_3"


def test_qbell_lines(capsys):
    code, out, _ = run(capsys, "bell", "-n", "4", "-k", "2", "--q")
    assert code == 0
    assert out.splitlines() == [
        "d1*d3: 1 + q + q^2",
        "d2^2: 1 + q + q^2",
        "d3*d1: 1",
    ]


def test_q_needs_k(capsys):
    code, _, err = run(capsys, "bell", "-n", "3", "--q")
    assert code == 2
    assert "needs -k" in err


def test_trees_verb(capsys):
    code, out, _ = run(capsys, "trees", "-n", "3")
    assert code == 0
    assert out == "aaaabbbb + aaabbabb + 2*aabaabbb + aabababb"


def test_quasidet_bell_matrix(capsys):
    code, out, _ = run(capsys, "quasidet", "--bell-matrix", "-n", "3")
    assert code == 0
    assert out == "d1^3 + d2*d1 + 2*d1*d2 + d3"


def test_quasidet_file(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text('[["1","2"],["3","4"]]')
    code, out, _ = run(capsys, "quasidet", "--file", str(f), "--row", "1", "--col", "1")
    assert code == 0
    assert out == "-1/2"


def test_quasidet_needs_input(capsys):
    code, _, err = run(capsys, "quasidet")
    assert code == 2
    assert "either" in err


def test_hopf_coproduct(capsys):
    code, out, _ = run(capsys, "hopf", "--fdb", "--coproduct", "-n", "3")
    assert code == 0
    assert out == "X3 (x) 1 + 1 (x) X3 + 4*X2 (x) X1 + 6*X1 (x) X2 + 3*X1^2 (x) X1"


def test_hopf_antipode_json(capsys):
    code, out, _ = run(capsys, "hopf", "--antipode", "-n", "4", "--format", "json")
    assert code == 0
    assert from_json_dict(json.loads(out)) == antipode_recursive(4, "dfdb")


def test_mobius_invert(capsys):
    code, out, _ = run(capsys, "mobius", "--invert", "-n", "3")
    assert code == 0
    assert out == "2*B1^3 - 3*B1*B2 + B3"
    code, out, _ = run(capsys, "mobius", "--nc", "--invert", "-n", "3")
    assert code == 0
    assert out == "2*B1^3 - B2*B1 - 2*B1*B2 + B3"


def test_mobius_invert_json(capsys):
    code, out, _ = run(capsys, "mobius", "--nc", "--invert", "-n", "4", "--format", "json")
    assert code == 0
    assert from_json_dict(json.loads(out)) == mobius_invert(4, "nc")


def test_mobius_antipode(capsys):
    code, out, _ = run(capsys, "mobius", "--antipode", "-n", "2")
    assert code == 0
    assert out == "-d1^-3*d2"


def test_series_compose(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(
        json.dumps(
            {
                "f": {"order": 5, "coeffs": ["0", "1", "1/2", "1/6", "1/24"]},
                "g": {"order": 5, "coeffs": ["0", "1", "-1", "0", "0"]},
            }
        )
    )
    code, out, _ = run(capsys, "series", "--compose", "--order", "5", "--file", str(f))
    assert code == 0
    assert out == "t - 1/2*t^2 - 5/6*t^3 + 1/24*t^4"


def test_series_reversion(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"g": {"order": 6, "coeffs": ["0", "1", "1/2", "1/6", "1/24", "1/120"]}}))
    code, out, _ = run(capsys, "series", "--reversion", "--order", "6", "--file", str(f))
    assert code == 0
    assert out == "t - 1/2*t^2 + 1/3*t^3 - 1/4*t^4 + 1/5*t^5"


def test_series_flow_check(capsys):
    code, out, _ = run(capsys, "series", "--flow-check", "--order", "4")
    assert code == 0
    assert "ok" in out


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "stirling", "--max-degree", "5")
    assert code == 0
    assert "stirling" in out and "PASS" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_missing_file_is_clean_error(capsys):
    code, _, err = run(capsys, "quasidet", "--file", "/nonexistent/m.json")
    assert code == 2
    assert "error:" in err
