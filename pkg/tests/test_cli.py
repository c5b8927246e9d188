import json

import pytest

from gbsclass.cli import EXIT_MISMATCH, EXIT_NO_WITNESS, EXIT_OK, EXIT_USAGE, main
from gbsclass import store


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_incremental(capsys, tmp_path):
    out_file = tmp_path / "c.json"
    code, out, _ = run(capsys, "classify", "--d", "6", "--l", "4", "--method", "incremental", "-o", str(out_file))
    assert code == EXIT_OK
    assert out.strip() == "d=6 l=4 classes=31 universe=6545"
    assert json.loads(out_file.read_text())["method"] == "II"


def test_classify_members_matches_table_i(capsys, tmp_path):
    out_file = tmp_path / "c.json"
    code, _, _ = run(capsys, "classify", "--d", "6", "--l", "2", "--emit", "members", "-o", str(out_file))
    assert code == EXIT_OK
    c = store.load(out_file)
    fx = store.load_fixture("I")
    assert [set(x.members) for x in c.classes] == [set(x.sets) for x in fx.classes]


def test_classify_d5_l5(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", "--d", "5", "--l", "5", "-o", str(tmp_path / "c.json"))
    assert code == EXIT_OK
    assert out.strip() == "d=5 l=5 classes=21 universe=10626"


def test_classify_bad_arguments(capsys, tmp_path):
    assert run(capsys, "classify", "--d", "60", "--l", "2", "-o", str(tmp_path / "x"))[0] == EXIT_USAGE
    assert run(capsys, "classify", "--d", "6", "--l", "9", "-o", str(tmp_path / "x"))[0] == EXIT_USAGE
    assert run(capsys, "classify", "--d", "6", "--l", "2", "--workers", "0")[0] == EXIT_USAGE
    assert run(capsys, "classify", "--d", "6")[0] == EXIT_USAGE


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--d", "6", "--set", "(0,0);(0,2)")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[-1] == "size=8"
    assert lines[:2] == ["(0,0);(0,2)", "(0,0);(0,4)"]
    code, out, _ = run(capsys, "orbit", "--d", "6", "--set", "(0,0)")
    assert out.splitlines() == ["(0,0)", "size=1"]


def test_orbit_shorthand_within_family(capsys):
    code, out, _ = run(capsys, "orbit", "--d", "6", "--set", "(0,1);(3,2)", "--implicit-identity", "--within-family")
    assert code == EXIT_OK
    assert out.splitlines() == ["(0,0);(0,1);(3,2)", "(0,0);(0,1);(3,5)", "size=2"]
    code, out, _ = run(capsys, "orbit", "--d", "6", "--set", "(0,1);(3,2)", "--implicit-identity")
    lines = out.splitlines()
    assert lines[-1] == "size=24"
    assert "(0,0);(0,1);(3,2)" in lines and "(0,0);(0,1);(3,5)" in lines


def test_orbit_errors(capsys):
    code, _, err = run(capsys, "orbit", "--d", "6", "--set", "(0,1);(3,2)")
    assert code == EXIT_USAGE and "--implicit-identity" in err
    assert run(capsys, "orbit", "--d", "6", "--set", "(0,1;(3,2)")[0] == EXIT_USAGE


def test_distinguish(capsys):
    code, out, _ = run(capsys, "distinguish", "--d", "6", "--set", "(0,0);(0,2);(2,0);(2,2)", "--restarts", "20")
    assert code == EXIT_NO_WITNESS
    assert "verdict=NO_WITNESS_FOUND" in out
    code, out, _ = run(capsys, "distinguish", "--d", "6", "--set", "(0,0);(0,1)")
    assert code == EXIT_OK
    assert "verdict=DISTINGUISHABLE" in out
    witness = [l for l in out.splitlines() if l.startswith("witness=")][0]
    assert len(witness.split("=")[1].split()) == 12
    assert run(capsys, "distinguish", "--d", "6", "--set", "(0,0)")[0] == EXIT_USAGE
    assert run(capsys, "distinguish", "--d", "6", "--set", "(0,0);(0,1)", "--witness-tol", "0")[0] == EXIT_USAGE


@pytest.mark.parametrize("table", ["I", "III", "IV"])
def test_verify(capsys, table):
    code, out, _ = run(capsys, "verify", "--table", table)
    assert code == EXIT_OK
    assert out.startswith(f"table {table}: pass")


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    real = store.load_fixture

    def tampered(table):
        fx = real(table)
        classes = list(fx.classes)
        classes[0], classes[1] = classes[1], classes[0]
        return store.FixtureTable(fx.table, fx.d, fx.l, tuple(classes))

    monkeypatch.setattr(store, "load_fixture", tampered)
    code, out, _ = run(capsys, "verify", "--table", "III")
    assert code == EXIT_MISMATCH
    assert "FAIL" in out and "missing" in out


def test_class_of(capsys):
    code, out, _ = run(capsys, "class-of", "--d", "6", "--set", "(0,0);(0,5)")
    assert code == EXIT_OK
    assert out.strip() == "class=1 representative=(0,0);(0,1) size=24"
    code, out, _ = run(capsys, "class-of", "--d", "6", "--set", "(0,2);(3,1)", "--implicit-identity", "--method", "incremental")
    assert out.strip() == "class=1 representative=(0,0);(0,1);(0,2) size=36"
