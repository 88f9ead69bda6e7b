import json
from pathlib import Path

import pytest

from sympow.cli import main
from sympow.groebner import Budget
from sympow.manifest import (ManifestError, example_6_4, field_from, resolve_target, run_manifest,
                             run_manifest_data)

MANIFESTS = Path(__file__).resolve().parent.parent / "scripts" / "manifests"


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_field_from():
    assert field_from(None).characteristic == 32003
    assert field_from(0).is_rational
    assert field_from(101).characteristic == 101


def test_named_targets_resolve():
    for spec in ({"named": "fermat-M"}, {"named": "fermat-N"}, {"named": "example-6.4"}, {"curve": [3, 4, 5]},
                 {"generators": ["x*y", "x*z"]}):
        assert resolve_target(spec).ideal.gens
    with pytest.raises(ManifestError):
        resolve_target({"named": "klein"})
    with pytest.raises(ManifestError):
        resolve_target({})


def test_manifest_harbourne_345():
    rep = run_manifest(MANIFESTS / "curve_345_harbourne.json")
    assert rep.items[0]["verdict"] == "holds" and rep.exit_code() == 0


def test_manifest_fermat_expect_fails():
    data = {"target": {"named": "fermat-M"},
            "operations": [{"op": "symbolic_containment", "m": 3, "s": 2, "expect": "fails"}]}
    rep = run_manifest_data(data)
    assert rep.items[0]["verdict"] == "fails" and rep.items[0]["matches"]
    assert rep.exit_code() == 0


def test_deviation_exit_code():
    data = {"target": {"named": "fermat-M"},
            "operations": [{"op": "symbolic_containment", "m": 3, "s": 2, "expect": "holds"}]}
    assert run_manifest_data(data).exit_code() == 1


def test_empty_manifest():
    rep = run_manifest_data({"target": {"curve": [3, 4, 5]}, "operations": []})
    assert rep.items == [] and rep.exit_code() == 0


def test_bad_manifests(tmp_path):
    with pytest.raises(ManifestError):
        run_manifest_data({"operations": []})
    with pytest.raises(ManifestError):
        run_manifest_data({"target": {"curve": [3, 4, 5]}, "operations": [{"m": 1}]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ManifestError):
        run_manifest(bad)


def test_budget_exceeded_is_reported():
    data = {"target": {"named": "fermat-M"}, "budget": {"max_pairs": 2},
            "operations": [{"op": "symbolic_containment", "m": 3, "s": 2, "expect": "fails"}]}
    rep = run_manifest_data(data)
    assert rep.items[0]["status"] == "budget-exceeded"
    assert rep.exit_code() == 2


def test_deterministic_reports_are_stable():
    path = MANIFESTS / "curve_345_full.json"
    a = json.dumps(run_manifest(path).to_json(deterministic=True), sort_keys=True)
    b = json.dumps(run_manifest(path, workers=3).to_json(deterministic=True), sort_keys=True)
    assert a == b
    assert '"ms"' not in a


def test_full_manifest_passes():
    rep = run_manifest(MANIFESTS / "curve_345_full.json")
    assert rep.passed, [it for it in rep.items if it.get("matches") is False]


def test_self_linked_small_budget():
    rep = example_6_4(limit=Budget(max_pairs=5))
    audit, item = rep.items
    assert audit["verdict"] == "inconsistent"
    assert "288" in audit["first_relation"] and "712" in audit["first_relation"]
    assert all(audit["swapped_yz_relations"].values())
    assert item["status"] in ("ok", "budget-exceeded")


def test_self_linked_generators():
    rep = example_6_4()
    item = rep.items[1]
    assert item["generator_count"] == 3 and item["matches_curve_oracle"]
    assert item["verdict"] == "fails" and item["matches"]


# -- command line --------------------------------------------------------------------

def test_cli_curve(capsys):
    code, out = run_cli(capsys, "curve", "present", "3", "4", "5", "--json")
    assert code == 0 and json.loads(out)["case"] == "1a"
    code, out = run_cli(capsys, "curve", "present", "1", "2", "3")
    assert code == 0 and "complete intersection" in out
    code, out = run_cli(capsys, "curve", "oracle", "3", "4", "5", "--json")
    assert len(json.loads(out)["generators"]) == 3


def test_cli_symbolic(capsys):
    code, out = run_cli(capsys, "symbolic", "3", "4", "5", "3", "--route", "both")
    assert code == 0 and json.loads(out)["crosscheck"] == "pass"


def test_cli_contain_expectations(capsys):
    assert run_cli(capsys, "contain", "fermat-M", "3", "2", "--expect", "fails")[0] == 0
    assert run_cli(capsys, "contain", "fermat-M", "3", "2", "--expect", "holds")[0] == 1
    assert run_cli(capsys, "contain", "3,4,5", "3", "2", "--expect", "holds", "--order", "lex")[0] == 0


def test_cli_budget_exit(capsys):
    code, out = run_cli(capsys, "contain", "fermat-M", "3", "2", "--budget", "2")
    assert code == 2 and "budget-exceeded" in out


def test_cli_harbourne_and_resurgence(capsys):
    assert run_cli(capsys, "harbourne", "fermat-M", "--n", "2", "--expect", "fails")[0] == 0
    code, out = run_cli(capsys, "resurgence", "fermat-M", "--box", "4", "3", "--expect", "3/2", "--json")
    assert code == 0 and json.loads(out)["lower_bound"] == "3/2"


def test_cli_verify_and_fermat(capsys, tmp_path):
    assert run_cli(capsys, "verify-thm51", "--trials", "10")[0] == 0
    assert run_cli(capsys, "fermat")[0] == 0
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"entries": ["x", "y", "z", "z", "x^2", "y"]}))
    code, out = run_cli(capsys, "verify-thm51", "--instance", str(inst), "--json")
    assert code == 0 and json.loads(out)["query"]["certificate"]


def test_cli_run_and_errors(capsys):
    assert run_cli(capsys, "run", str(MANIFESTS / "fermat_N.json"), "--deterministic", "--json")[0] == 0
    code, _ = run_cli(capsys, "contain", "klein", "3", "2")
    assert code == 1
    assert run_cli(capsys, "example-6-4", "--budget", "5")[0] == 0


def test_cli_rationals(capsys):
    code, out = run_cli(capsys, "contain", "3,4,5", "3", "2", "--char", "0", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "holds"
