import json

import jsonschema
import pytest

from ringlab.cli import main
from ringlab.report import load_schema

SCHEMA = load_schema()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_classify_z8(capsys):
    code, doc = run_json(capsys, "classify", "Z8")
    assert code == 0
    assert len(doc["results"]) == 4
    zero = doc["results"][0]
    cdf = next(v for v in zero["verdicts"] if v["predicate"] == "cdf")
    assert zero["ideal"] == "zero" and cdf["holds"] is False


def test_classify_single_ideal_with_labels(capsys):
    code, doc = run_json(capsys, "classify", "Z9 x Z9", "--ideal", "gen((0,1))")
    cdf = doc["results"][0]["verdicts"][0]
    assert cdf["holds"] is False
    assert all(w.startswith("(") for w in cdf["witness"])


def test_classify_parse_error(capsys):
    code, out, err = run(capsys, "classify", "Z")
    assert code == 2 and out == ""
    assert "1:" in err


def test_classify_too_large(capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_CUTOFF", "10")
    code, _, _ = run(capsys, "classify", "Z12")
    assert code == 4


def test_audit_exit_codes(capsys):
    code, doc = run_json(capsys, "audit", "REM_PRIME_IMPLIES_CDF")
    assert code == 0 and doc["claims"][0]["status"] == "Confirmed"
    assert run(capsys, "audit", "BOGUS")[0] == 2
    code, doc = run_json(capsys, "audit", "THM_LINSYS")
    assert code == 3
    assert doc["claims"][0]["witness_rechecked"] is True


def test_audit_all(capsys):
    _, doc = run_json(capsys, "audit", "all")
    assert len(doc["claims"]) == 25


def test_search(capsys):
    code, doc = run_json(capsys, "search", "2", "40", "cdf")
    assert code == 0
    assert {6, 12, 15, 21, 33, 39} <= set(doc["results"])
    assert not {8, 9, 16, 35} & set(doc["results"])
    assert run_json(capsys, "search", "2", "10", "prime")[1]["results"] == [2, 3, 5, 7]
    assert run(capsys, "search", "9", "2")[0] == 2


def test_search_witnesses(capsys):
    _, doc = run_json(capsys, "search", "2", "10", "--witnesses")
    assert [e["n"] for e in doc["exclusions"]] == [8, 9]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["Z35", "zero", "3", "33"], 0),
        (["Z35", "zero", "3", "-2"], 0),
        (["Z6", "zero", "2", "2"], 1),
        (["Z6", "zero", "(2", "2"], 2),
        (["Z9 x Z9", "gen((0,1))", "(4,0)", "(1,0)"], 0),
        (["Z9 x Z9", "gen((0,1))", "(1,2,3)", "(1,0)"], 2),
    ],
)
def test_witness(capsys, argv, code):
    assert run(capsys, "witness", *argv)[0] == code


def test_witness_report(capsys):
    _, doc = run_json(capsys, "witness", "Z35", "zero", "3", "-2")
    assert doc["witness"] == ["3", "33"]
    assert doc["memberships"] == {"cube_difference": True, "difference": False, "factor": False}


def test_nonzero_only_flag(capsys):
    _, doc = run_json(capsys, "classify", "Z8", "--ideal", "zero", "--nonzero-only")
    assert {v["mode"] for v in doc["results"][0]["verdicts"]} == {"nonzero-pairs"}
    assert doc["results"][0]["verdicts"][0]["witness"] == ["2", "4"]


def test_markdown_and_json_agree(capsys):
    _, md, _ = run(capsys, "classify", "Z8", "--format", "md")
    _, doc = run_json(capsys, "classify", "Z8")
    for res in doc["results"]:
        assert f"| {res['ideal']} | {res['size']} |" in md


def test_output_independent_of_jobs(capsys):
    outs = {run(capsys, "classify", "Z9 x Z9", "--jobs", str(j))[1] for j in (1, 4)}
    assert len(outs) == 1


def test_timings_only_on_request(capsys):
    _, doc = run_json(capsys, "search", "2", "5")
    assert "timings" not in doc
    _, doc = run_json(capsys, "search", "2", "5", "--timings")
    assert "scan" in doc["timings"]
