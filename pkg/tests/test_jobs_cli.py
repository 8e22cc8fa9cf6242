import json
from pathlib import Path

import pytest

from seqcm.cli import main
from seqcm.errors import InputError
from seqcm.jobs import NEG_INF_TOKEN, SCHEMA, JobSpec, dumps, load_job, render_table, run_job

JOBS = Path(__file__).resolve().parent.parent / "jobs"

MIXED = dict(
    variables=["X1", "X2", "X3", "X4", "X5"],
    ideal=["X1*X3", "X1*X4", "X1*X5", "X2*X3", "X2*X4", "X2*X5"],
    filtration={"kind": "user-supplied", "chain": [["X1*X2", "X2^2"]]},
    sop=["X1+X4", "X2+X5", "X3"],
    seeds=[0],
)


def job(command, **fields):
    return JobSpec.from_dict({"command": command, **fields})


def test_unknown_fields_and_commands_rejected():
    with pytest.raises(InputError):
        JobSpec.from_dict({"command": "analyze", "variables": ["X"], "colour": 1})
    with pytest.raises(InputError):
        JobSpec.from_dict({"command": "frobnicate", "variables": ["X"]})
    with pytest.raises(InputError):
        job("p-estimate", variables=["X1"], modulus=12).config()


def test_analyze_reports_decomposition():
    r = run_job(job("analyze", variables=["X1", "X2"], ideal=["X1^2", "X1*X2"]))
    assert r["schema"] == SCHEMA and r["command"] == "analyze"
    res = r["result"]
    assert res["dimension"] == 1
    assert [(c["prime"], c["dim"]) for c in res["primary_decomposition"]] == [
        (["X1"], 1), (["X1", "X2"], 0)]


def test_filtration_command_defaults_to_dimension_filtration():
    r = run_job(job("filtration", variables=["X1", "X2"], ideal=["X1^2", "X1*X2"]))
    f = r["result"]["filtration"]
    assert f["kind"] == "dimension-filtration" and f["dims"] == [0, 1]
    assert r["result"]["ok"]


def test_invariant_on_polynomial_ring_is_zero():
    r = run_job(load_job(JOBS / "polynomial_ring.json"))
    res = r["result"]
    assert set(res["values"].values()) == {0}
    assert "2,3" in res["values"] and len(res["values"]) == 9
    assert res["multiplicities"] == [None, 1]


def test_neg_infinity_token_in_output():
    r = run_job(load_job(JOBS / "hypersurface.json"))
    report = r["result"]["report"]
    assert report["estimate"] == NEG_INF_TOKEN
    assert report["classification"] == "sCM-evidence"
    assert r["result"]["filtration"]["dims"][0] == NEG_INF_TOKEN


def test_p_estimate_on_mixed_example():
    r = run_job(job("p-estimate", **MIXED))["result"]["report"]
    assert (r["estimate"], r["flag"]) == (0, "certified-constant")
    assert r["runs"][0]["sop"]["source"] == "hint"


def test_verify_and_sop_commands():
    r = run_job(job("verify", **MIXED))["result"]
    assert r["filtration_ok"] and r["sop"]["certificate"]["ok"]
    bad = dict(MIXED, sop=["X2+X5", "X3", "X1+X4"])
    r = run_job(job("verify", **bad))["result"]
    assert not r["sop"]["certificate"]["ok"]
    assert r["sop"]["certificate"]["failures"]
    r = run_job(job("sop", variables=["X1", "X2"], ideal=["X1*X2"], seeds=[4]))["result"]
    assert r["sop"]["certificate"]["ok"] and r["sop"]["source"] == "search"


def test_verify_without_sop_is_an_input_error():
    with pytest.raises(InputError):
        run_job(job("verify", variables=["X1"], ideal=[]))


def test_theorem_b_and_flat_ext_jobs():
    r = run_job(load_job(JOBS / "embedded.json"))["result"]
    assert r["p_D"] == NEG_INF_TOKEN and r["match"] and r["finite_part_length"] == 1
    r = run_job(job("flat-ext", **MIXED))["result"]
    assert r["variables"][0] == "Y1"
    assert (r["predicted"], r["estimated"], r["consistent"]) == (1, 1, True)


def test_output_is_byte_identical_across_runs():
    spec = load_job(JOBS / "mixed_dimension.json")
    first = dumps(run_job(spec))
    assert first == dumps(run_job(load_job(JOBS / "mixed_dimension.json")))
    json.loads(first)


def test_table_rendering():
    text = render_table(run_job(load_job(JOBS / "hypersurface.json")))
    assert text.startswith("schema 1")
    assert "estimate: neg-infinity" in text


@pytest.mark.parametrize(
    "name, code",
    [("not_homogeneous.json", 1), ("nonmonomial.json", 2), ("hypersurface.json", 0)],
)
def test_exit_codes(name, code, capsys):
    assert main(["analyze" if code == 1 else json.loads((JOBS / name).read_text())["command"],
                 "--job", str(JOBS / name), "--format", "json"]) == code
    doc = json.loads(capsys.readouterr().out)
    if code:
        assert doc["error"]["exit_code"] == code
    else:
        assert doc["schema"] == SCHEMA


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"command": "analyze", "variables": ["X1"], "ideal": ["X1^"]}))
    assert main(["analyze", "--job", str(path)]) == 1
    assert "seqcm:" in capsys.readouterr().err


def test_cli_overrides(capsys):
    assert main(["p-estimate", "--job", str(JOBS / "hypersurface.json"), "--seed", "7",
                 "--nmax", "5", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["job"]["seeds"] == [7] and doc["job"]["nmax"] == 5
    assert len(doc["result"]["report"]["runs"][0]["diagonal"]) == 5


@pytest.mark.slow
def test_example_command(capsys):
    assert main(["example", "--format", "json", "--seed", "0"]) == 0
    res = json.loads(capsys.readouterr().out)["result"]
    assert res["I_identically_one"] and res["strict_inequality"]
    assert (res["p_F"], res["p_M_mod_M1"]) == (0, 1)
    assert res["theorem_b"] == {"p_D": 0, "pieces": [0, NEG_INF_TOKEN], "match": True}
    assert res["flat_extension_k1"] == {"predicted": 1, "estimated": 1}
