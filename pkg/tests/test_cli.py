import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from purebraid.cli import run

from oracles import box_count, brute_commutator_count

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "docs" / "schema"


def _schema(name):
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    doc = json.loads(out.getvalue()) if out.getvalue() else None
    return status, doc, err.getvalue()


@pytest.mark.parametrize("name", ["enumerate", "verify", "normalize", "rewrite", "abelianize", "dihedral"])
def test_schemas_are_valid(name):
    jsonschema.Draft202012Validator.check_schema(_schema(name))


@pytest.mark.parametrize("argv, schema", [
    (("enumerate", "--n", "4"), "enumerate"),
    (("enumerate", "--n", "5", "--kind", "box"), "enumerate"),
    (("verify", "--n", "3", "--family", "relations", "--show", "all"), "verify"),
    (("verify", "--n", "4", "--family", "lemma:chi-swap"), "verify"),
    (("verify", "--n", "3", "--family", "oracle", "--trials", "50"), "verify"),
    (("normalize", "--n", "3", "--word", "1 2 -1"), "normalize"),
    (("rewrite", "--n", "3", "--word", "A1,3 A2,4^-1"), "rewrite"),
    (("rewrite", "--n", "4", "--witness", "2,4"), "rewrite"),
    (("abelianize", "--n", "3", "--word", "1 1 -3 -3"), "abelianize"),
    (("dihedral", "--n", "5"), "dihedral"),
    (("dihedral", "--n", "4", "--ab-rank"), "dihedral"),
])
def test_output_matches_schema(argv, schema):
    status, doc, _ = invoke(*argv)
    assert status == 0
    jsonschema.validate(doc, _schema(schema))


def test_enumerate_counts():
    _, doc, _ = invoke("enumerate", "--n", "4", "--kind", "all")
    assert doc["counts"] == {"generators": 10, "commutator": brute_commutator_count(4),
                             "box": box_count(4)}
    assert len(doc["relations"]) == brute_commutator_count(4) + box_count(4)


def test_output_is_deterministic():
    assert invoke("enumerate", "--n", "5") == invoke("enumerate", "--n", "5")
    a = invoke("verify", "--n", "4", "--family", "relations", "--show", "all")
    b = invoke("verify", "--n", "4", "--family", "relations", "--show", "all", "--jobs", "2")
    assert a[1]["items"] == b[1]["items"]


def test_normalize_braid_relation():
    _, a, _ = invoke("normalize", "--n", "3", "--word", "1 2 1")
    _, b, _ = invoke("normalize", "--n", "3", "--word", "2 1 2")
    assert a["normal_form"] == b["normal_form"]
    assert a["serialized"] == b["serialized"]


def test_verify_relations_small():
    status, doc, _ = invoke("verify", "--n", "3", "--family", "relations")
    assert status == 0
    assert doc["total"] == 11 and doc["failed"] == 0
    assert doc["passed"] + doc["failed"] == doc["total"]


def test_rewrite_witness():
    status, doc, _ = invoke("rewrite", "--n", "3", "--witness", "1,2")
    assert status == 0
    assert doc["word"] == "A1,2 A1,3 A2,3" and doc["phi_reduced"] == "I1,2"


def test_abelianize_keys():
    _, doc, _ = invoke("abelianize", "--n", "2", "--word", "1 1 2 2")
    assert doc["linking"] == {"1,2": 1, "1,3": 0, "2,3": 1}


def test_dihedral_sections():
    _, doc, _ = invoke("dihedral", "--n", "4", "--k-rank")
    assert set(doc) == {"command", "n", "index", "generator_count", "transversal", "k_subgroup"}
    assert doc["k_subgroup"]["verdict"] == "proper"
    _, doc, _ = invoke("dihedral", "--n", "3")
    assert doc["abelianization"]["rank"] == 3
    assert doc["k_subgroup"]["verdict"] == "not-proper"


@pytest.mark.parametrize("argv", [
    (),
    ("bogus",),
    ("enumerate",),
    ("enumerate", "--n", "0"),
    ("enumerate", "--n", "3", "--kind", "nope"),
    ("verify", "--n", "3", "--family", "nope"),
    ("verify", "--n", "3", "--family", "lemma:nope"),
    ("normalize", "--n", "2", "--word", "3"),
    ("normalize", "--n", "2", "--word", "1 a"),
    ("rewrite", "--n", "3", "--word", "A1,9"),
    ("rewrite", "--n", "3", "--witness", "1"),
    ("rewrite", "--n", "3", "--witness", "2,5"),
    ("abelianize", "--n", "2", "--word", "1"),
    ("dihedral", "--n", "1"),
])
def test_usage_errors_exit_2(argv):
    status, doc, _ = invoke(*argv)
    assert status == 2
    assert doc is None


def test_failed_verification_exits_1(monkeypatch):
    from purebraid import cli
    from purebraid.report import ReportItem, VerificationReport

    def broken(n, jobs=1):
        return VerificationReport("verify:relations", n, [ReportItem("x", "box", False, {"lhs": "1"})])

    monkeypatch.setattr(cli.presentation, "verify_relations", broken)
    status, doc, _ = invoke("verify", "--n", "3", "--family", "relations")
    assert status == 1
    assert doc["failed"] == 1 and doc["items"][0]["verdict"] == "fail"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "purebraid", "abelianize", "--n", "1", "--word", "1 1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["linking"] == {"1,2": 1}
