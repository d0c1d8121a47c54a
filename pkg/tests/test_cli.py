import json

import pytest

from mutperm.cli import main
from mutperm.verify import _prop35
from mutperm.findim import dump_algebra


@pytest.fixture
def prop35_file(tmp_path):
    path = tmp_path / "prop35.alg"
    path.write_text(dump_algebra(_prop35()))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_bracket(capsys):
    code, out, _ = run(capsys, "expand", "<<x1,x2>,x3>")
    assert code == 0
    assert "x1 x2 p p x3" in out and "x2 x3 q q x1" in out


def test_expand_identity_is_zero(capsys):
    code, out, _ = run(capsys, "expand", "f(x1,x2,x3)")
    assert code == 0
    assert "value: 0" in out


def test_expand_single_variable(capsys):
    code, out, _ = run(capsys, "expand", "x1")
    assert code == 0 and "value: x1" in out


def test_expand_parse_error_exits_2(capsys):
    code, _, err = run(capsys, "expand", "<x1,")
    assert code == 2 and "error:" in err


def test_identities_degree3(capsys):
    code, out, _ = run(capsys, "identities", "--degree", "3",
                       "--known", "f,wa")
    assert code == 0
    assert "kernel_dim: 5" in out and "new_dim: 0" in out


def test_identities_degree2_empty_kernel(capsys):
    code, out, _ = run(capsys, "identities", "--degree", "2")
    assert code == 0 and "kernel_dim: 0" in out


def test_identities_unknown_template(capsys):
    code, _, err = run(capsys, "identities", "--degree", "3",
                       "--known", "nosuch")
    assert code == 2 and "unknown template" in err


def test_identities_record_format_round_trips(capsys):
    code, out, _ = run(capsys, "--format", "record", "identities",
                       "--degree", "3", "--known", "f,wa")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "identities"
    assert doc["results"]["new_dim"] == 0


def test_identities_paper_order_matrix(capsys):
    code, out, _ = run(capsys, "identities", "--degree", "3",
                       "--known", "f,wa", "--paper-order")
    assert code == 0
    assert "permutation_matrix" in out
    assert "<x1,<x2,x3>>" in out


def test_cohn_default(capsys):
    code, out, _ = run(capsys, "cohn")
    assert code == 0
    assert "exceptional image certified" in out
    assert out.count("lambda") > 4


def test_findim_wa_fails_with_witness(capsys, prop35_file):
    code, out, _ = run(capsys, "findim", prop35_file, "--check", "wa")
    assert code == 1
    assert "verdict: no" in out and "e1" in out


def test_findim_f_passes(capsys, prop35_file):
    code, out, _ = run(capsys, "findim", prop35_file, "--check", "f")
    assert code == 0 and "verdict: yes" in out


def test_findim_mutate(capsys, prop35_file):
    code, out, _ = run(capsys, "findim", prop35_file, "--check", "mutate",
                       "--p", "1,0,0", "--q", "0,1,0")
    assert code == 0 and "table:" in out


def test_findim_bad_file(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("{not json")
    code, _, err = run(capsys, "findim", str(bad), "--check", "f")
    assert code == 2 and "cannot load" in err


def test_findim_unknown_check(capsys, prop35_file):
    code, _, err = run(capsys, "findim", prop35_file, "--check", "bogus")
    assert code == 2 and "unknown check" in err


def test_verify_paper_low_limit_skips(capsys):
    code, out, _ = run(capsys, "verify-paper", "--limit", "2")
    assert code == 0
    assert "skipped" in out and "failed" not in out.replace("0 failed", "")


def test_verify_paper_detects_corruption(capsys, monkeypatch):
    import mutperm.verify as verify

    def broken():
        return False, "deliberately corrupted"

    monkeypatch.setattr(
        verify, "CHECKS",
        [("degree3-expansions", 3, broken)] + verify.CHECKS[1:2])
    code, out, _ = run(capsys, "verify-paper", "--limit", "3")
    assert code == 1
    assert "degree3-expansions" in out and "failed" in out


def test_usage_error_exits_2(capsys):
    assert main(["identities"]) == 2   # missing --degree
