"""Acceptance suite: one test and one PASS/FAIL line per criterion.

All comparisons are exact.  Run under pytest, or directly with
``python tests/test_acceptance.py`` for the plain list of lines.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import ACCEPTANCE_LINES  # noqa: E402
from spinordict import report  # noqa: E402
from spinordict.clifford import MODEL_NAMES  # noqa: E402
from spinordict.dictionary import DICTIONARIES  # noqa: E402


def emit(number: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_01_clifford_relations():
    entry = report.check_clifford_relations()
    emit(1, entry.status == "pass", f"Clifford relations exact for {len(entry.payload)} models")
    assert set(entry.payload) == set(MODEL_NAMES)
    assert entry.status == "pass"


def test_criterion_02_left_multiplication_matrices():
    entry = report.check_l_matrices()
    emit(2, entry.status == "pass", "L_{e^a} = E_a and L_{e~^a} = E~_a for a = 1..7")
    assert entry.payload == {"O": {"mismatched_units": []}, "Osplit": {"mismatched_units": []}}


def test_criterion_03_stabilizer_table():
    entry = report.check_stabilizer_table()
    rows = entry.payload["rows"]
    matched = [r for r in rows if r["computed"] == r["expected"]]
    emit(
        3,
        entry.status == "pass",
        f"stabilizer table {len(matched)}/{len(rows)} rows; beta-null row computes "
        f"{rows[-1]['computed']} where 17 is quoted",
    )
    # everything except the beta-null row is reproduced
    assert [r["spinor"] for r in rows if r not in matched] == ["beta-null"]
    assert entry.payload["spin7_system_matches"]
    # the w6 relation as printed (with w25) does not give the same system
    assert not entry.payload["spin7_system_matches_with_w25_in_w6_row"]
    extra = report.check_stab_17().payload
    assert extra["quoted_relations_hold_on_kernel"]
    assert extra["quoted_system_dim"] == 17
    assert extra["completed_system_matches"]
    assert extra["intersection_of_identity_and_null_stabilizers"] == 15


@pytest.mark.xfail(strict=True, reason="exact kernel of the beta-null stabilizer system is 15-dimensional")
def test_criterion_03_beta_null_stabilizer_is_17():
    assert report.check_stab_17().payload["computed"] == 17


def test_criterion_04_two_forms():
    entry = report.check_b2_forms()
    pairs = entry.payload["pairs"]
    emit(4, entry.status == "pass", f"{sum(p['matches'] for p in pairs)}/{len(pairs)} two-form bilinears match")
    assert all(p["matches"] for p in pairs)


def test_criterion_05_four_forms():
    entry = report.check_four_forms()
    flags = {k: v for k, v in entry.payload.items() if isinstance(v, bool)}
    emit(5, entry.status == "pass", "B4(I,I) = I^C - *C, holomorphic four-form and C / *C splittings")
    assert len(flags) == 4 and all(flags.values())


def test_criterion_06_norm_transport():
    entry = report.check_norm_transport()
    emit(6, entry.status == "pass", "R' pairings equal the quaternionic norms on 100 random spinors per model")
    assert entry.payload["results"] == {"cl4": True, "cl22": True, "cl6": True}


def test_criterion_07_hopf():
    entry = report.check_hopf()
    emit(7, entry.status == "pass", "Hopf images null on 100 random pairs; (I,0) -> (0,0,0,0,1,1)")
    assert entry.payload["null_on_random_pairs"] == {"H": True, "Hsplit": True}
    assert entry.payload["image_of_(I,0)"] == ["0", "0", "0", "0", "1", "1"]


def test_criterion_08_purity():
    entry = report.check_purity()
    emit(8, entry.status == "pass", "cl8 purity iff <psi,psi> = 0 on 50 + 50 spinors; B2(psi,psi) = 0")
    assert all(entry.payload.values())


def test_criterion_09_lie_span():
    entry = report.check_lie_span()
    emit(9, entry.status == "pass", "cl51 and cl33 chiral Lie images: dimension 15, quaternion-linear, traceless")
    for res in entry.payload.values():
        assert res == {"dimension": 15, "quaternion_linear": True, "real_trace_zero": True}


def test_criterion_10_dictionaries():
    entry = report.check_dictionaries()
    checks = sum(r["checks"] for r in entry.payload.values())
    emit(10, entry.status == "pass", f"{len(entry.payload)} dictionaries, {checks} round trips and intertwinings")
    assert set(entry.payload) == set(DICTIONARIES)
    assert all(not r["failed"] for r in entry.payload.values())


def test_criterion_11_b3_decomposable():
    entry = report.check_b3()
    emit(11, entry.status == "pass", f"{entry.payload['factors_verified']}/20 cl33 three-forms factor into null directions")
    assert entry.payload == {"spinors": 20, "decomposable": 20, "factors_verified": 20}


def test_criterion_12_orbits():
    entry = report.check_orbits()
    rows = {r["case"]: r for r in entry.payload["cases"]}
    emit(
        12,
        entry.status == "pass",
        "orbit labels and scale invariance reproduced; case-4 stabilizer computes "
        f"{rows['case-4-beta-null']['dim']} where 17 is quoted",
    )
    for r in rows.values():
        assert r["label"] == r["expected_label"]
        assert r["scale_invariant"]
    for case in ("case-1-su22", "case-2-sl4r", "case-3-su22"):
        assert rows[case]["dim"] == 15
    assert report.derived_case_5().payload["dim"] == 15


@pytest.mark.xfail(strict=True, reason="exact kernel of the beta-null stabilizer system is 15-dimensional")
def test_criterion_12_case_4_stabilizer_is_17():
    rows = {r["case"]: r for r in report.orbit_rows(rescalings=0)}
    assert rows["case-4-beta-null"]["dim"] == 17


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and not hasattr(fn, "pytestmark"):
            try:
                fn()
            except AssertionError as exc:
                failures += 1
                print(f"  assertion failed in {name}: {exc}")
    sys.exit(1 if failures or any(line.startswith("FAIL") for line in ACCEPTANCE_LINES) else 0)
