import json
from pathlib import Path

import pytest

from liedouble.cli import main

GOLDEN = Path(__file__).parent / "data"


def run(tmp_path, *argv, json_out=True):
    args = list(argv)
    report_path = None
    if json_out:
        report_path = tmp_path / "report.json"
        args += ["--json", str(report_path)]
    code = main(args)
    report = json.loads(report_path.read_text()) if report_path else None
    return code, report


def test_validate_catalog_algebra(tmp_path):
    code, report = run(tmp_path, "validate", "catalog:gLambda")
    assert code == 0
    assert report["verdicts"] == {"jacobi": "pass"}


def test_validate_catalog_rmatrix_and_bialgebra(tmp_path):
    code, report = run(tmp_path, "validate", "catalog:so22.r1")
    assert code == 0
    assert report["verdicts"]["mcybe-verdict"] == "pass"
    code, report = run(tmp_path, "validate", "catalog:so22-twisted")
    assert code == 0


def test_validate_broken_bracket_file(tmp_path):
    broken = {
        "dim": 3,
        "labels": ["e1", "e2", "e3"],
        "params": [],
        "brackets": [
            {"i": 0, "j": 1, "k": 2, "coef": "1"},
            {"i": 0, "j": 2, "k": 0, "coef": "1"},
        ],
    }
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(broken))
    code, report = run(tmp_path, "validate", str(path))
    assert code == 1
    assert report["verdicts"]["jacobi"] == "fail"
    assert any("(0, 1, 2" in note for note in report["notes"])


def test_validate_missing_file(tmp_path):
    assert main(["validate", str(tmp_path / "nope.json")]) == 2


def test_validate_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["validate", str(path)]) == 2


def test_validate_unknown_catalog_key():
    assert main(["validate", "catalog:nosuchkey"]) == 2


def test_double_writes_golden_table(tmp_path):
    code, report = run(
        tmp_path, "double", "sl2-hyp", "--out", str(tmp_path), "--format", "json"
    )
    assert code == 0
    table = (tmp_path / "sl2-hyp-double.txt").read_text()
    assert table == (GOLDEN / "d_sl2_hyp_table.txt").read_text()
    data = json.loads((tmp_path / "sl2-hyp-double.json").read_text())
    assert data["dim"] == 6


def test_double_matches_catalog_table(tmp_path):
    from liedouble import catalog
    from liedouble.double import bracket_table_text

    code, _ = run(
        tmp_path, "double", "sl2-eta", "--out", str(tmp_path), "--format", "json"
    )
    assert code == 0
    text = (tmp_path / "sl2-eta-double.txt").read_text()
    assert text == bracket_table_text(catalog.load().algebra("d-sl2-eta"))


def test_double_iterate_trivial(tmp_path):
    code, report = run(
        tmp_path,
        "double", "sl2-trivial", "--iterate", "--out", str(tmp_path),
        "--format", "json",
    )
    assert code == 0
    assert report["verdicts"]["crossed-brackets"] == "pass"
    assert report["verdicts"]["iterated-jacobi"] == "pass"


def test_double_iterate_sl2_eta(tmp_path):
    code, report = run(
        tmp_path,
        "double", "sl2-eta", "--iterate", "--out", str(tmp_path),
        "--format", "json",
    )
    assert code == 0
    assert report["verdicts"]["crossed-brackets"] == "pass"


def test_classify_poisson_subgroup(tmp_path):
    code, report = run(tmp_path, "classify", "sl2-hyp", "span{J12}")
    assert code == 0
    cls = report["classification"]
    assert cls["coisotropic"] and cls["poisson_subgroup"]
    assert report["bracket_table"]["labels"] == ["J12", "a1", "a2"]


def test_classify_coisotropic_only(tmp_path):
    code, report = run(tmp_path, "classify", "sl2-hyp", "span{P1+P2}")
    assert code == 0
    cls = report["classification"]
    assert cls["coisotropic"] and not cls["poisson_subgroup"]
    code, report = run(tmp_path, "classify", "sl2-hyp-j", "span{J+}")
    assert code == 0
    cls = report["classification"]
    assert cls["coisotropic"] and not cls["poisson_subgroup"]


def test_classify_twisted_lorentz(tmp_path):
    code, report = run(tmp_path, "classify", "so22-twisted", "J,K1,K2")
    assert code == 0
    cls = report["classification"]
    assert cls["coisotropic"] and not cls["poisson_subgroup"]


def test_classify_with_pi(tmp_path):
    code, report = run(
        tmp_path, "classify", "sl2-hyp", "span{J12}",
        "--pi", "[[0, 1], [-1, 0]]",
    )
    assert code == 0
    cls = report["classification"]
    assert cls["lagrangian"] is True
    assert cls["coisotropic"] is False  # nonzero pi


def test_classify_bad_generator(tmp_path):
    assert main(["classify", "sl2-hyp", "span{Q9}"]) == 2


def test_verify_brackets_default_passes(tmp_path):
    code, report = run(tmp_path, "verify-brackets", "--format", "json")
    assert code == 0
    assert report["pass"] is True
    sklyanin = [r for r in report["results"] if "pair" in r]
    assert len(sklyanin) == 18  # six families, three pairs each
    checks = [r for r in report["results"] if "check" in r]
    assert len(checks) == 6  # two property cells, three checks each
    assert all(r["max_rel_err"] < 1e-9 for r in sklyanin)


def test_verify_brackets_filter_and_points(tmp_path):
    code, report = run(
        tmp_path, "verify-brackets", "--cells", "ads3-twisted", "--points", "50"
    )
    assert code == 0
    assert all(r["bracket_id"] == "ads3-twisted" for r in report["results"])


def test_verify_brackets_tolerance_floor(tmp_path):
    code, report = run(tmp_path, "verify-brackets", "--tol", "1e-15")
    assert code == 1
    assert report["pass"] is False


def test_verify_brackets_unknown_cell():
    assert main(["verify-brackets", "--cells", "nosuchcell"]) == 2


def test_reports_byte_identical_for_fixed_seed(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["verify-brackets", "--seed", "7", "--json", str(a)]) == 0
    assert main(["verify-brackets", "--seed", "7", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    c = tmp_path / "c.json"
    assert main(["verify-brackets", "--seed", "8", "--json", str(c)]) == 0
    assert a.read_bytes() != c.read_bytes()


def test_exit_zero_iff_all_pass(tmp_path):
    code, report = run(tmp_path, "verify-brackets", "--points", "5")
    assert (code == 0) == report["pass"]
