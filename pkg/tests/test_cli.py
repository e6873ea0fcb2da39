import json
import subprocess
import sys

import pytest

from spinordict.cli import canonical_json, main

IDENTITY_O = json.dumps({"alg": "O", "re": [1, 0, 0, 0, 0, 0, 0, 0]})
BETA_NULL = json.dumps({"alg": "O-split", "re": [1, 0, 0, 0, 0, 0, 0, 0], "im": [0, 0, 0, 1, 1, 0, 0, 0]})
EXPECTED_FAILS = {"c3/stab-table", "c3/stab-17", "c12/orbits"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--model", "cl8")
    assert code == 0
    assert "cl8:" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--model", "cl44-real", "--json")
    assert code == 0
    data = json.loads(out)
    assert out == canonical_json(data) + "\n"


def test_verify_unknown_model(capsys):
    code, _, err = run(capsys, "verify", "--model", "nosuch")
    assert code == 2
    assert "invalid choice" in err


def test_table_entries(capsys):
    for alg, (a, b), word in (("O", (5, 6), "+e7"), ("O'", (1, 6), "-e7"), ("H", (1, 2), "+k")):
        code, out, _ = run(capsys, "table", "--algebra", alg, "--format", "json")
        assert code == 0
        assert json.loads(out)["table"][a][b] == word


def test_table_csv_and_text(capsys, tmp_path):
    target = tmp_path / "t.csv"
    assert main(["table", "--algebra", "H", "--format", "csv", "--out", str(target)]) == 0
    rows = target.read_text().splitlines()
    assert rows[0] == ",1,i,j,k"
    assert rows[2].split(",")[3] == "+k"
    code, out, _ = run(capsys, "table", "--algebra", "C'")
    assert code == 0 and "e1" in out


def test_stabilizer_beta_null(capsys):
    code, out, _ = run(capsys, "stabilizer", "--model", "cl44-complex", "--spinor", BETA_NULL, "--json")
    assert code == 0
    data = json.loads(out)
    # the orbit is quoted with a 17-dimensional stabilizer; the exact kernel is 15-dimensional
    assert data["stabilizer"]["dim"] == 15
    assert data["spinor"]["algebra"]["im"][3] == "1"


def test_classify_identity(capsys):
    code, out, _ = run(capsys, "classify", "--model", "cl8", "--spinor", IDENTITY_O)
    assert code == 0
    assert out.splitlines() == ["label majorana-direction", "stabilizer 21"]


def test_classify_needs_orbit_model(capsys):
    code, _, err = run(capsys, "classify", "--model", "cl6", "--spinor", '{"gen": 3, "terms": [{"idx": [], "re": "1"}]}')
    assert code == 2


def test_bilinear_four_form(capsys):
    code, out, _ = run(capsys, "bilinear", "--model", "cl8", "--k", "4", "--psi", IDENTITY_O, "--phi", IDENTITY_O, "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["components"]) == 14
    code, _, _ = run(capsys, "bilinear", "--model", "cl8", "--k", "9", "--psi", IDENTITY_O, "--phi", IDENTITY_O)
    assert code == 2


def test_annihilator_polyform_input(capsys, tmp_path):
    spinor = tmp_path / "one.json"
    spinor.write_text(json.dumps({"gen": 4, "terms": [{"idx": [], "re": "1"}]}))
    code, out, _ = run(capsys, "annihilator", "--model", "cl8", "--spinor", f"@{spinor}")
    assert code == 0
    assert out.strip() == "annihilator dimension 4, real index 0, pure True"


def test_bad_spinors(capsys):
    assert run(capsys, "annihilator", "--model", "cl8", "--spinor", "{not json")[0] == 2
    assert run(capsys, "annihilator", "--model", "cl8", "--spinor", "@/nonexistent/x.json")[0] == 2
    assert run(capsys, "annihilator", "--model", "cl8", "--spinor", '{"alg": "H", "re": [1, 0, 0, 0]}')[0] == 2
    zero = json.dumps({"alg": "O", "re": [0] * 8})
    assert run(capsys, "annihilator", "--model", "cl8", "--spinor", zero)[0] == 1
    # the quaternion dictionary of cl4 has real coordinates
    real_only = json.dumps({"alg": "H", "re": [1, 0, 0, 0], "im": [0, 1, 0, 0]})
    assert run(capsys, "annihilator", "--model", "cl4", "--spinor", real_only)[0] == 2
    bad_terms = json.dumps({"gen": 4, "terms": {"": "1"}})
    assert run(capsys, "annihilator", "--model", "cl8", "--spinor", bad_terms)[0] == 2


def test_dict(capsys):
    code, out, _ = run(capsys, "dict", "--name", "cl44-complex-o")
    assert code == 0
    assert "21/21" in out
    code, out, _ = run(capsys, "dict", "--name", "c2-h", "--side", "minus", "--json")
    assert json.loads(out)["dictionary"]["side"] == "minus"


def test_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "report", "--out", str(target))
    assert code == 1
    entries = json.loads(target.read_text())
    assert {e["id"] for e in entries if e["status"] == "fail"} == EXPECTED_FAILS
    ids = [e["id"] for e in entries]
    assert len(set(ids)) == len(ids)
    assert sum(1 for i in ids if not i.startswith("note/")) == 14
    assert "c5/b4-identity" in ids
    assert next(e for e in entries if e["id"] == "c3/stab-17")["payload"]["computed"] == 15
    assert len(out.splitlines()) == len(entries)


def test_report_bad_path(capsys):
    assert run(capsys, "report", "--out", "/nonexistent/dir/report.json")[0] == 2


def test_no_command(capsys):
    assert run(capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "spinordict", "verify", "--model", "cl4"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("cl4:")
