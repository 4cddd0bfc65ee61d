import json
import subprocess
import sys

import pytest

from kideals.cli import cli_main
from kideals.core import dumps, make_chain_lattice, make_product, make_boolean, make_truncated_nat


@pytest.fixture
def files(tmp_path):
    out = {}
    for S in (make_chain_lattice(3), make_truncated_nat(2), make_product(make_boolean(), make_boolean())):
        p = tmp_path / f"{S.name}.json"
        p.write_text(dumps(S))
        out[S.name] = str(p)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"size": 2, "add": [[0, 1], [0, 1]], "mul": [[0, 0], [0, 1]],
                               "zero": 0, "one": 1, "name": "bad"}))
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = cli_main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_classify_chain(capsys, files):
    code, doc = run_json(capsys, "classify", "--semiring", files["C3"], "--ideal", "0,1")
    assert code == 0 and doc["k_maximal"] is True and doc["members"] == [0, 1]


def test_classify_all_ideals(capsys, files):
    code, doc = run_json(capsys, "classify", "--semiring", files["N2"])
    assert code == 0 and [d["members"] for d in doc] == [[0], [0, 2], [0, 1, 2]]


def test_nat_classify_example(capsys):
    code, doc = run_json(capsys, "nat", "--nat-ideal", "4", "classify")
    assert code == 0 and doc["k_strongly_irreducible"] is True and doc["k_prime"] is False


def test_nat_actions(capsys):
    assert run_json(capsys, "nat", "ops", "--nat-ideal", "6,4")[1]["intersection"] == "12N"
    assert run_json(capsys, "nat", "radical", "--nat-ideal", "4")[1]["k_radical"] == "2N"
    assert run_json(capsys, "nat", "lcm", "--nat-ideal", "6")[1]["witness"] == [2, 3]
    assert run_json(capsys, "nat", "decompose", "--nat-ideal", "12")[1]["components"] == ["4N", "3N"]
    assert run_json(capsys, "nat", "prime-element", "--nat-ideal", "5")[1]["holds"] is True
    code, doc = run_json(capsys, "nat", "oracle", "--nat-ideal", "9")
    assert code == 0 and doc["findings"] == [] and doc["bound"] == 324
    code, doc = run_json(capsys, "nat", "localize", "--denoms", "2")
    assert code == 0 and 3 in doc["survivors"] and 4 not in doc["survivors"]
    trop = run_json(capsys, "nat", "classify", "--trop-ideal", "inf")[1]
    assert trop["k_prime"] is True and trop["ideal"] == "{inf}"


def test_verify_example(capsys):
    code, doc = run_json(capsys, "verify", "exchange-principle", "--corpus", "default")
    assert code == 0
    (rep,) = doc["suites"]
    assert rep["instances_checked"] == 25 and rep["passes"] == 25 and rep["findings"] == []


def test_verify_vacuous(capsys):
    code, doc = run_json(capsys, "verify", "saturated-iff-kideal", "--corpus", "default:non-idempotent")
    assert code == 0 and doc["suites"][0]["status"] == "vacuous"


def test_verify_pretty(capsys):
    code, out = run(capsys, "verify", "kmax-implies-kprime", "--corpus", "chain:2-3", "--pretty")
    assert code == 0 and out.splitlines()[1].split() == ["PASS", "kmax-implies-kprime", "2/2"]
    assert out.rstrip().endswith("total findings: 0")


def test_validate(capsys, files):
    code, doc = run_json(capsys, "validate", "--semiring", files["C3"])
    assert code == 0 and doc["valid"]
    code, doc = run_json(capsys, "validate", "--semiring", files["bad"])
    assert code == 1 and not doc["valid"]


def test_generate(capsys):
    code, doc = run_json(capsys, "generate", "--seed", "chain:3")
    assert code == 0 and doc["size"] == 3 and doc["name"] == "C3"
    code, doc = run_json(capsys, "generate", "--seed", "nat:1-2")
    assert [d["name"] for d in doc] == ["N1", "N2"]


def test_ideals_closure_radical(capsys, files):
    code, doc = run_json(capsys, "ideals", "--semiring", files["N2"])
    assert code == 0 and [r["k_ideal"] for r in doc["ideals"]] == [True, False, True]
    code, doc = run_json(capsys, "closure", "--semiring", files["N2"], "--ideal", "0,2")
    assert doc["k_closure"] == [0, 1, 2] and "saturation" not in doc
    code, doc = run_json(capsys, "closure", "--semiring", files["C3"], "--ideal", "0")
    assert doc["saturation"] == [0]
    code, doc = run_json(capsys, "radical", "--semiring", files["C3"], "--ideal", "0,1,2")
    assert doc["k_radical"] == [0, 1, 2] and "note" in doc


def test_quotient_and_localize(capsys, files):
    code, doc = run_json(capsys, "quotient", "--semiring", files["C3"], "--ideal", "0,1")
    assert code == 0 and doc["size"] == 2 and doc["projection"] == [0, 0, 1]
    code, doc = run_json(capsys, "localize", "--semiring", files["B1xB1"], "--denoms", "1")
    assert code == 0 and doc["size"] == 2 and doc["canonical"] == [0, 1, 0, 1]
    assert doc["denominators"] == [1, 3]


def test_congruences(capsys, files):
    code, doc = run_json(capsys, "congruences", "--semiring", files["C3"])
    assert code == 0 and doc["count"] == 4
    code, doc = run_json(capsys, "congruences", "--semiring", files["C3"], "--ideal", "0,1")
    assert doc["labels"] == [0, 0, 1] and doc["k_ideal"] == [0, 1]


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["classify", "--no-such-flag"],
    ["classify"],
    ["classify", "--semiring", "/nonexistent.json"],
    ["nat", "classify"],
    ["nat", "localize", "--denoms", "4"],
    ["verify", "no-such-suite"],
    ["verify", "all", "--corpus", "chain:3+chain:3"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert cli_main(argv) == 2


def test_not_an_ideal_exit_2(capsys, files):
    code, doc = run_json(capsys, "classify", "--semiring", files["C3"], "--ideal", "0,2")
    assert code == 2 and doc["error"] == "MalformedInputError"
    code, doc = run_json(capsys, "classify", "--semiring", files["bad"], "--ideal", "0")
    assert code == 2 and doc["error"] == "SemiringAxiomError"


def test_budget_exceeded_exit_3(capsys):
    code, doc = run_json(capsys, "verify", "all", "--corpus", "default", "--budget", "500")
    assert code == 3 and doc["suites"][-1]["status"] == "partial"


def test_findings_exit_1(capsys, monkeypatch):
    from kideals import suites
    monkeypatch.setattr(suites, "kclosure_mask", lambda S, m: m)
    code, doc = run_json(capsys, "verify", "closure-laws", "--corpus", "nat:2")
    assert code == 1 and doc["total_findings"] == 1


def test_pretty_non_verify(capsys, files):
    code, out = run(capsys, "classify", "--semiring", files["C3"], "--ideal", "0,1", "--pretty")
    assert code == 0 and "k_maximal: true" in out


def test_entry_point_module():
    r = subprocess.run([sys.executable, "-m", "kideals", "nat", "--nat-ideal", "6", "classify"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["k_semiprime"] and not doc["k_prime"]
