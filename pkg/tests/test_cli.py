"""The gsl command-line tool: output documents and exit codes."""

import json
from pathlib import Path

import pytest

from gsl.cli import main

DATA = Path(__file__).resolve().parent.parent / "src" / "gsl" / "data"
V4 = str(DATA / "v4_sqrt_t_sqrt_t_minus_1.json")
C2 = str(DATA / "c2_sqrt_t.json")
C3 = str(DATA / "c3_shanks.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip() else None
    return code, doc, out.err


def test_analyze(capsys):
    code, doc, _ = run(capsys, "analyze", V4, "--skip-sampling")
    assert code == 0
    assert doc["bad_primes"] == [2, 3]
    assert len(doc["branch_points"]) == 3
    assert doc["roots_of_unity_ok"] is True
    assert doc["galois_sampling_ok"] is None


def test_analyze_summary_on_stderr(capsys):
    code, doc, err = run(capsys, "analyze", V4, "--skip-sampling", "--summary")
    assert code == 0 and "branch" in err


def test_verify_single(capsys):
    code, doc, _ = run(capsys, "verify", V4, "--t0", "21")
    assert code == 0
    verdicts = {e["prime"]: e["verdict"] for e in doc["entries"]}
    assert verdicts[5] == "MATCH" and verdicts[7] == "MATCH"
    assert verdicts[2] == "SKIPPED_BAD_PRIME"


def test_verify_multiple_t0_order_stable(capsys):
    code1, doc1, _ = run(capsys, "verify", V4, "--t0", "21", "--t0", "7")
    code2, doc2, _ = run(capsys, "verify", V4, "--t0", "21", "--t0", "7",
                         "--jobs", "2")
    assert code1 == code2 == 0
    assert doc1 == doc2
    assert [r["t0"] for r in doc1["reports"]] == ["21", "7"]


def test_verify_explicit_primes(capsys):
    code, doc, _ = run(capsys, "verify", C3, "--t0", "13", "--primes", "7,31")
    assert code == 0
    assert [e["prime"] for e in doc["entries"]] == [7, 31]
    assert all(e["verdict"] == "MATCH" for e in doc["entries"])


def test_predict(capsys):
    code, doc, _ = run(capsys, "predict", V4, "--t0", "21", "--prime", "7")
    assert code == 0
    assert (doc["mode"], doc["e"], doc["f"]) == ("exact", 2, 2)


def test_oracle(capsys):
    code, doc, _ = run(capsys, "oracle", "--coeffs=-10,0,1", "--prime", "5")
    assert code == 0
    assert doc == {"p": 5, "factors": [{"e": 2, "f": 1, "count": 1}],
                   "certified": True}


def test_oracle_wild_exit_3(capsys):
    code, doc, _ = run(capsys, "oracle", "--coeffs=-3,0,0,1", "--prime", "3")
    assert code == 3
    assert doc["error"] == "WildOrIrregular"


def test_adequacy(capsys):
    code, doc, _ = run(capsys, "adequacy", V4, "--t0", "21")
    assert code == 0
    cert = doc["certificate"]
    assert cert["adequate"] is True
    assert [w["prime"] for w in cert["witnesses"]["2"]] == [3, 7]


def test_adequacy_not_adequate_exit_1(capsys):
    code, doc, _ = run(capsys, "adequacy", C2, "--t0", "2", "--bound", "3")
    assert code == 1
    assert doc["certificate"]["adequate"] is False


def test_adequacy_search(capsys):
    code, doc, _ = run(capsys, "adequacy", C2, "--search", "--start", "2")
    assert code == 0 and doc["t0"] == "2"


def test_obstruct(capsys):
    code, doc, _ = run(capsys, "obstruct", V4, "--q", "2", "--bound", "20")
    assert code == 0
    assert doc["status"] == "OBSTRUCTION_PRESENT"
    assert doc["certificate"]["primes"] == [5, 13, 17]
    assert doc["certificate"]["all_ok"] is True


def test_obstruct_hypothesis_not_met_exit_1(capsys):
    code, doc, _ = run(capsys, "obstruct", C2, "--q", "2", "--bound", "20")
    assert code == 1
    assert doc["status"] == "HYPOTHESIS_NOT_MET"


def test_frobenius_primes(capsys):
    code, doc, _ = run(capsys, "frobenius-primes", V4, "--order", "2",
                       "--bound", "20")
    assert code == 0 and doc["primes"] == [7, 11, 19]


def test_realize(capsys):
    code, doc, _ = run(capsys, "realize", C2, "--prime", "5", "--target", "up")
    assert code == 0 and doc["t0"] == 10


def test_realize_not_found_exit_1(capsys):
    code, doc, _ = run(capsys, "realize", C2, "--prime", "5", "--target", "up",
                       "--bound", "3")
    assert code == 1 and "error" in doc


def test_bundled_scheme(capsys):
    code, doc, _ = run(capsys, "analyze", "bundled:c2_sqrt_t", "--skip-sampling")
    assert code == 0 and doc["cover"] == "c2_sqrt_t"
    code, _, err = run(capsys, "analyze", "bundled:nope")
    assert code == 64


def test_usage_errors_exit_64(capsys):
    assert run(capsys, "verify", V4)[0] == 64          # missing --t0
    assert run(capsys, "verify", V4, "--t0", "x")[0] == 64
    assert run(capsys, "analyze", "/does/not/exist.json")[0] == 64
    assert run(capsys, "oracle", "--coeffs", "1,junk", "--prime", "5")[0] == 64


def test_malformed_cover_exit_64(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"name": "x", "group_order": 3,
                             "P": [["0", "-1"], ["0"], ["1"]],
                             "assert_regular_galois": True}))
    code, doc, _ = run(capsys, "analyze", str(p))
    assert code == 64 and doc["error"] == "SchemaError"


def test_json_output_is_sorted_and_stable(capsys):
    _, doc1, _ = run(capsys, "analyze", V4, "--skip-sampling")
    _, doc2, _ = run(capsys, "analyze", V4, "--skip-sampling")
    assert doc1 == doc2
    assert list(doc1) == sorted(doc1)
