import os
import sys

sys.path.append(os.path.join(os.path.dirname(__file__), "..", ".."))

import json

import pytest

from prophecke.verification.checks import ALIASES, CHECKS, resolve_check
from prophecke.verification.suite import SuiteConfig, SuiteContext, run_suite
from prophecke.utils.errors import ConfigurationError

from helper_functions import setup_test_for_mode


def _run_config_tests():
    """
    Test the validation of suite configurations
    * invalid length bounds, q, modes, checks, formats and job counts raise ConfigurationError
    * checks run in suite order whatever order they are selected in
    * aliases select the same checks as identifiers
    """
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", max_length=1)
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", q=6)
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", mode="real")
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", checks=("no-such-check",))
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", output_format="xml")
    with pytest.raises(ConfigurationError):
        SuiteConfig("SL2", jobs=0)

    config = SuiteConfig("SL2", checks=("ideal-powers", "relations"))
    assert config.selected_checks() == ["relations", "fact-iii"]
    assert SuiteConfig("SL2", checks=("fact-iii", "relations/associativity")).selected_checks() == config.selected_checks()
    assert SuiteConfig("SL2", checks=("lemma-3.4", "orbit-sum-independence")).selected_checks() == ["lemma-3.4"]
    assert SuiteConfig("SL2").selected_checks() == list(CHECKS)
    assert config.to_json()["q"] == 3

    context = SuiteContext(SuiteConfig("GL2", mode="charp"))
    assert context.modes() == ["charp"]
    assert context.algebras()[0] is context.charp
    assert context.supersingular() is context.supersingular()
    assert context.pool(2) is context.pool(2)
    assert context.rng().integers(0, 100) == context.rng().integers(0, 100)


def _run_report_tests():
    """
    Test running checks and rendering the report
    * a passing run has exit code 0, renders deterministically as json and tsv
    * a corrupted quadratic relation fails the relations check with a counterexample
    * modules over non-prime q are inconclusive
    """
    config = SuiteConfig("SL2", max_length=3, samples=5, checks=("relations", "central-leading-terms"))
    report = run_suite(config)
    assert [check.name for check in report.checks] == ["relations", "lemma-3.1"]
    assert report.passed and report.exit_code == 0
    assert report.render("json") == run_suite(config).render("json")
    content = json.loads(report.render("json"))
    assert content["config"]["group"] == "SL2"
    assert [check["status"] for check in content["checks"]] == ["PASS", "PASS"]
    assert [check["anchor"] for check in content["checks"]] == ["relations/associativity", "Lemma 3.1"]
    assert content["checks"][1]["alias"] == "central-leading-terms"
    lines = report.render("tsv").split("\n")
    assert lines[0] == "name\tanchor\tstatus\tinstances\tdetail"
    assert lines[1].startswith("relations\trelations/associativity\tPASS\t")
    assert lines[2].startswith("lemma-3.1\tLemma 3.1\tPASS\t")
    pretty = report.render("pretty").split("\n")
    assert pretty[1].startswith("PASS") and "Lemma 3.1" in pretty[1]

    corrupted = SuiteConfig("SL2", max_length=3, samples=5, checks=("relations",), corrupt_quadratic=True)
    report = run_suite(corrupted)
    assert report.checks[0].status == "FAIL"
    assert report.exit_code == 1
    assert report.checks[0].outcome.counterexample["relation"] == "quadratic"
    assert "counterexample" in report.render("pretty")

    report = run_suite(SuiteConfig("SL2", q=9, checks=("cor-5.16-enumeration",)))
    assert report.checks[0].status == "INCONCLUSIVE"
    assert report.exit_code == 1


def _run_registry_tests():
    """
    Test the check registry
    * every identifier has an anchor and resolves to itself
    * every alias resolves to its identifier, unknown names to None
    """
    assert list(CHECKS)[:4] == ["relations", "lemma-1.2", "prop-1.3", "lemma-2.3"]
    assert list(CHECKS)[-3:] == ["lemma-5.12", "thm-5.14", "cor-5.16-enumeration"]
    for name, info in CHECKS.items():
        assert info.name == name and info.anchor
        assert resolve_check(name) == name
        assert resolve_check(info.alias) == name
    assert ALIASES["satake-generator"] == "remark-4.2"
    assert resolve_check("relations/associativity") == "relations"
    assert CHECKS["lemma-2.4"].anchor == "Lemma 2.4"
    assert resolve_check("no-such-check") is None


def _run_coverage_tests():
    """
    Test that checks cover the configured range and record it
    * lemma-3.4 on SL2 with L = 8 covers every dominant coweight of length at most 8
    * lemma-2.4 passes on SL2 and tests supersingular module lines
    * the Levi checks and the ideal filtration reach length L
    * the brute-force cross check on SL2 with q = 3 searches up to dimension 2
    """
    report = run_suite(SuiteConfig("SL2", max_length=8, checks=("lemma-3.4",)))
    check = report.checks[0]
    assert check.status == "PASS"
    assert check.outcome.notes["coweights"] == [[0], [1], [2], [3], [4]]
    assert check.outcome.notes["coweight_box"] == 8
    assert check.outcome.notes["variants_per_orbit"] == 4

    report = run_suite(SuiteConfig("SL2", max_length=4, checks=("lemma-2.4",)))
    check = report.checks[0]
    assert check.status == "PASS"
    assert check.outcome.notes["coweights"] == [[1], [2]]
    assert check.outcome.notes["module_lines"] > 0

    report = run_suite(SuiteConfig("SL2", max_length=3, checks=("classification-enumeration",)))
    check = report.checks[0]
    assert check.status == "PASS"
    assert check.outcome.notes["brute_force"] == {"max_dimension": 2, "classified": 3, "found": 3}

    config = SuiteConfig("SL2", max_length=6, samples=5, checks=("lemma-3.8", "eq-3.1", "lemma-5.3"))
    report = run_suite(config)
    assert [check.status for check in report.checks] == ["PASS", "PASS", "PASS"]
    for check in report.checks[:2]:
        assert [3] in check.outcome.notes["coweights"]
        assert [-3] in check.outcome.notes["coweights"]
    context = SuiteContext(config)
    assert report.checks[2].outcome.instances == len(context.pool(6)) * len(context.ideal().generator_coweights)


def _run_inconclusive_tests():
    """
    Test checks that cannot decide
    * the brute force for GL2 with q = 5 would need 5^4 candidate matrices per generator
    * without a sigma over F_p for some character the module checks are inconclusive
    """
    report = run_suite(SuiteConfig("GL2", q=5, max_length=3, checks=("cor-5.16-enumeration",)))
    check = report.checks[0]
    assert check.status == "INCONCLUSIVE"
    assert check.outcome.notes["brute_force"] == {"max_dimension": 2}
    assert "infeasible" in check.outcome.inconclusive

    report = run_suite(SuiteConfig("GL2", max_length=3, pi_scalars=(2,), checks=("lemma-5.12",)))
    check = report.checks[0]
    assert check.status == "INCONCLUSIVE"
    assert check.outcome.notes["missing_sigma"]
    assert all(entry["pi"] == 2 for entry in check.outcome.notes["missing_sigma"])
    assert report.exit_code == 1


def _run_parallel_tests():
    """Concurrent checks give the same report as sequential ones"""
    checks = ("relations", "orientation-character", "central-leading-terms")
    sequential = run_suite(SuiteConfig("SL2", max_length=3, samples=5, checks=checks))
    parallel = run_suite(SuiteConfig("SL2", max_length=3, samples=5, checks=checks, jobs=3))
    assert sequential.render("json") == parallel.render("json")


test_config = setup_test_for_mode(_run_config_tests)
test_report = setup_test_for_mode(_run_report_tests)
test_parallel = setup_test_for_mode(_run_parallel_tests)
test_registry = setup_test_for_mode(_run_registry_tests)
test_coverage = setup_test_for_mode(_run_coverage_tests)
test_inconclusive = setup_test_for_mode(_run_inconclusive_tests)


if __name__ == "__main__":
    # used to run this test individually
    test_config()
    test_report()
    test_parallel()
    test_registry()
    test_coverage()
    test_inconclusive()
