import json

import pytest

from lieop.cli import Workspace, build_report, main
from lieop.fixtures import bundle_json


@pytest.fixture(scope="module")
def bundle_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("ws") / "bundle.json"
    path.write_text(bundle_json(), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_validate_bundle(bundle_file, capsys):
    code, out = run(capsys, "validate", "--input", bundle_file)
    assert code == 0
    assert "INVALID" not in out


def test_validate_reports_jacobi_violation(tmp_path, capsys):
    doc = {"objects": {"bad": {
        "kind": "lie_algebra", "dim": 3,
        "brackets": [[0, 1, ["1", "0", "0"]], [1, 2, ["0", "1", "0"]],
                     [0, 2, ["0", "0", "-1"]]]}}}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, out = run(capsys, "validate", "--input", str(p))
    assert code == 1
    assert "JacobiViolation" in out


def test_validate_dangling_reference(tmp_path, capsys):
    doc = {"objects": {"orphan": {"kind": "o_operator", "rep_ref": "missing",
                                  "matrix": [["0"]]}}}
    p = tmp_path / "dangling.json"
    p.write_text(json.dumps(doc), encoding="utf-8")
    code, out = run(capsys, "validate", "--input", str(p))
    assert code == 2
    assert "missing" in out


def test_check_valid_o_operator(bundle_file, capsys):
    code, out = run(capsys, "check", "o-operator", "aff1_adj_T",
                    "--input", bundle_file)
    assert code == 0 and "valid" in out


def test_check_invalid_gcs_names_identity(bundle_file, tmp_path, capsys):
    bad = {"objects": {"bad_J": {
        "kind": "gcs_module", "rep_ref": "aff1_coadj",
        "n": [["0", "0"], ["0", "0"]], "t": [["0", "0"], ["0", "0"]],
        "sigma": [["0", "0"], ["0", "0"]], "s": [["0", "0"], ["0", "0"]]}}}
    p = tmp_path / "bad_gcs.json"
    p.write_text(json.dumps(bad), encoding="utf-8")
    code, out = run(capsys, "check", "gcs", "bad_J",
                    "--input", bundle_file, str(p))
    assert code == 1
    assert "53" in out


def test_check_missing_name(bundle_file, capsys):
    code, out = run(capsys, "check", "mc", "missing_name", "--input", bundle_file)
    assert code == 2


def test_check_more_kinds(bundle_file, capsys):
    valid_cases = [
        ("r-matrix", ["aff1_r"]), ("r-matrix", ["h3_r"]), ("r-matrix", ["sl2_r"]),
        ("compatible", ["aff1_coadj_T1", "aff1_coadj_T2"]),
        ("nijenhuis", ["aff1_N"]), ("nijenhuis-structure", ["aff1_ns"]),
        ("on", ["aff1_on"]), ("on", ["h3_on"]), ("pn", ["h3_pn"]),
        ("twilled", ["aff1_tw"]), ("twilled", ["h3_tw"]),
        ("mc", ["aff1_mc"]), ("strong-mc", ["aff1_mc"]),
        ("gcs", ["aff1_gcs"]), ("gcs", ["ab2_gcs"]),
        ("gcs-lie", ["ab2_gcslie"]), ("gcs-lie", ["ab2_gcslie_cx"]),
        ("complex", ["ab2_cx"]), ("complex", ["aff1_cx"]),
        ("holo-o", ["ab2_holo_o"]), ("holo-r", ["ab4_holo_r"]),
        ("pre-lie", ["aff1_prelie"]),
    ]
    for kind, names in valid_cases:
        code, out = run(capsys, "check", kind, *names, "--input", bundle_file)
        assert code == 0, (kind, names, out)


def test_derive_all_kinds(bundle_file, tmp_path, capsys):
    cases = [
        ("induced-lie", ["aff1_adj_T"]),
        ("gauge", ["aff1_adj_T", "aff1_adj_B"]),
        ("reduce", ["h3_adj_T", "h3_full", "h3_center", "h3_full"]),
        ("hierarchy", ["3", "aff1_on"]),
        ("deformed-bracket", ["aff1_N"]),
        ("tilde-action", ["aff1_ns"]),
        ("twilled-from-o", ["aff1_adj_T"]),
        ("on-from-mc", ["aff1_adj_T", "aff1_mc"]),
        ("mc-from-on", ["aff1_on"]),
        ("on-from-pair", ["aff1_coadj_T1", "aff1_coadj_T2"]),
        ("gcs-from-o", ["aff1_coadj_T2"]),
        ("pre-lie-from-o", ["aff1_coadj_T2"]),
        ("opposite-gcs", ["aff1_gcs"]),
        ("semidirect", ["aff1_adj"]),
        ("dual", ["h3_adj"]),
        ("adjoint", ["sl2"]),
        ("coadjoint", ["h3"]),
    ]
    for i, (kind, args) in enumerate(cases):
        out_path = tmp_path / f"out_{i}.json"
        code, out = run(capsys, "derive", kind, *args,
                        "--input", bundle_file, "--output", str(out_path))
        assert code == 0, (kind, out)
        doc = json.loads(out_path.read_text(encoding="utf-8"))
        ws = Workspace.load([doc])  # round-trip: re-loads and re-validates
        rep = build_report(ws, seed=0)
        assert all(o["valid"] for o in rep["objects"].values()), (kind, rep)


def test_derive_gauge_identity(bundle_file, tmp_path, capsys):
    zero_b = {"objects": {"B0": {"kind": "linmap",
                                 "matrix": [["0", "0"], ["0", "0"]]}}}
    p = tmp_path / "b0.json"
    p.write_text(json.dumps(zero_b), encoding="utf-8")
    out_path = tmp_path / "gauge0.json"
    code, _ = run(capsys, "derive", "gauge", "aff1_adj_T", "B0",
                  "--input", bundle_file, str(p), "--output", str(out_path))
    assert code == 0
    doc = json.loads(out_path.read_text(encoding="utf-8"))
    derived = doc["objects"]["aff1_adj_T__gauge__B0"]
    assert derived["matrix"] == [["0", "0"], ["1", "0"]]


def test_derive_precondition_error(bundle_file, tmp_path, capsys):
    out_path = tmp_path / "never.json"
    code, out = run(capsys, "derive", "gcs-from-o", "aff1_adj_T",
                    "--input", bundle_file, "--output", str(out_path))
    assert code == 2
    assert not out_path.exists()


def test_report_determinism(bundle_file, capsys):
    code1, out1 = run(capsys, "report", "--input", bundle_file, "--format", "json")
    code2, out2 = run(capsys, "report", "--input", bundle_file, "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3 = run(capsys, "report", "--input", bundle_file, "--format", "json",
                      "--jobs", "4")
    assert out3 == out1
    code4, out4 = run(capsys, "report", "--input", bundle_file, "--format", "text")
    assert code4 == 0 and out4.count("suite ") == 3


def test_report_seed_changes_suites_not_verdicts(bundle_file, capsys):
    _, out_a = run(capsys, "report", "--input", bundle_file, "--format", "json",
                   "--seed", "1")
    _, out_b = run(capsys, "report", "--input", bundle_file, "--format", "json",
                   "--seed", "2")
    obj_a = json.loads(out_a)["objects"]
    obj_b = json.loads(out_b)["objects"]
    assert obj_a == obj_b


def test_empty_workspace_report(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text(json.dumps({"objects": {}}), encoding="utf-8")
    code, out = run(capsys, "report", "--input", str(p), "--format", "json")
    assert code == 0
    assert json.loads(out)["objects"] == {}
