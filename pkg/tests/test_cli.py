from __future__ import annotations

import json

import pytest

from cli import COMMANDS, RunConfig, build_parser, dispatch
from common.errors import CheckFailed, HypothesisViolation
from nielsen import ClassSet, enumerate_classes
from scripts.desk_suite import DeskSuite
from scripts.monodromy import analyze_monodromy


def run_json(capsys, *argv):
    code = dispatch([*argv, "--format", "json", "--quiet"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None, out


def test_every_command_has_a_parser():
    parser = build_parser()
    assert set(COMMANDS) == {
        "enumerate",
        "analyze",
        "omega-crosscheck",
        "coset-rep",
        "witness",
        "chain-check",
        "cube-check",
        "predict",
        "verify",
    }
    namespace = parser.parse_args(["chain-check", "--g", "1", "--N", "3"])
    config = RunConfig.from_namespace(namespace)
    assert config.params() == {"g": 1, "N": 3}


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["analyze", "--b"], ["enumerate", "--method", "fast"]])
def test_usage_errors(capsys, argv):
    assert dispatch(argv) == 64


def test_help_exits_cleanly(capsys):
    assert dispatch(["--help"]) == 0
    assert "hmlab" in capsys.readouterr().out


def test_failed_hypothesis_is_reported(capsys):
    assert dispatch(["predict", "thm3", "--b", "6", "--N", "2"]) == 1
    assert "b>8 if N is even" in capsys.readouterr().err


def test_predict_json_is_stable(capsys):
    code, payload, out = run_json(capsys, "predict", "thm3", "--b", "6", "--N", "5")
    assert code == 0
    assert out.rstrip("\n") == json.dumps(payload, indent=2, sort_keys=True)
    assert payload["computation"] == "predict"
    assert payload["params"] == {"theorem": "thm3", "b": 6, "N": 5}
    assert payload["results"]["total"]["order_decimal"] == str(60**40 * 25920)
    assert payload["results"]["omega_size"] == 40


def test_predict_text_table(capsys):
    assert dispatch(["predict", "thm1-exceptional-g0", "--quiet"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("predict\n+")
    assert "25920" in out


def test_enumerate_both_methods(capsys):
    code, payload, _ = run_json(capsys, "enumerate", "--group", "sym3", "--b", "6", "--method", "both")
    assert code == 0
    assert payload["results"]["classes"] == 40
    assert payload["results"]["methods_agree"] is True
    assert payload["results"]["projective_count"] == 40


def test_enumerate_writes_a_cache(capsys, tmp_path):
    cache = tmp_path / "sym4.cache"
    code, payload, _ = run_json(capsys, "enumerate", "--g", "0", "--cache", str(cache))
    assert code == 0
    assert payload["results"]["classes"] == 120
    assert payload["results"]["fiber_sizes"] == [3]
    assert cache.read_text().startswith("nielsen-cache v1 sym4 6 120")


def test_enumerate_tsv(capsys):
    assert dispatch(["enumerate", "--group", "sym3", "--b", "4", "--format", "tsv", "--quiet"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "Quantity\tValue"
    assert "classes\t4" in lines


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--b", "5"],
        ["analyze", "--b", "8", "--g", "0"],
        ["analyze", "--group", "xn"],
        ["analyze", "--group", "xn", "--N", "3"],
        ["chain-check", "--g", "2", "--N", "5"],
        ["chain-check", "--g", "0"],
        ["coset-rep", "--g", "2"],
        ["verify", "--suite", "everything"],
        ["analyze", "--bsgs", "randomized"],
    ],
)
def test_rejected_parameters(capsys, argv):
    assert dispatch(argv) == 1
    assert capsys.readouterr().err


def test_time_budget_reports_partial_results(capsys):
    code, payload, _ = run_json(capsys, "analyze", "--g", "0", "--time-budget", "1e-9")
    assert code == 2
    assert "budget_exceeded" in payload["results"]


def test_chain_and_cube_commands(capsys):
    code, payload, _ = run_json(capsys, "chain-check", "--g", "0", "--N", "4")
    assert code == 0
    assert payload["results"]["passed"] is True
    assert payload["results"]["expected_sp"]["order_decimal"] == "48"

    code, payload, _ = run_json(capsys, "cube-check", "--g", "0", "--N", "3")
    assert code == 0
    assert payload["results"]["full"] is False


def test_analyze_g0(capsys):
    code, payload, _ = run_json(capsys, "analyze", "--g", "0")
    assert code == 0
    results = payload["results"]
    assert results["degree"] == 120
    assert results["omega_image"]["order_decimal"] == "25920"
    assert results["prediction"]["theorem"] == "thm1-exceptional-g0"
    assert results["prediction"]["matches_group"] is True
    assert results["prediction"]["matches_kernel"] is True


def test_analyze_cross_checks_both_methods(capsys):
    code, payload, _ = run_json(capsys, "analyze", "--g", "0", "--method", "both")
    assert code == 0
    assert payload["results"]["degree"] == 120


def test_analyze_fails_when_the_methods_disagree(capsys, monkeypatch):
    def short_scan(group, b, method, **kwargs):
        classes = enumerate_classes(group, b, method, **kwargs)
        return ClassSet(group, b, classes.representatives[1:], method)

    monkeypatch.setattr(analyze_monodromy, "enumerate_classes", short_scan)
    assert dispatch(["analyze", "--g", "0", "--method", "both", "--quiet"]) == 1
    assert "exhaustive scan 119" in capsys.readouterr().err


def test_desk_suite_item():
    suite = DeskSuite(RunConfig(command="verify", suite="desk"))
    assert suite.nielsen_counts() == "sym3/4:4 sym3/6:40 sym4/6:120 xn5/6:240"


def test_desk_suite_defers_only_the_g1_sigma_order(monkeypatch, g0_setup):
    suite = DeskSuite(RunConfig(command="verify", suite="desk"))
    for name in (
        "nielsen_counts",
        "g0_monodromy",
        "g0_primitive",
        "fiber_witnesses",
        "witness",
        "chain_orders",
        "cube_closures",
        "properties",
    ):
        monkeypatch.setattr(suite, name, lambda: "not run here")

    def setup(kind, b, modulus=None):
        if (kind, b) == ("sym4", 6):
            return g0_setup
        raise CheckFailed(f"reached {kind} b={b}")

    monkeypatch.setattr(suite, "setup", setup)
    rows = {row["title"]: row for row in suite.callback().results["items"]}
    assert [title for title, row in rows.items() if row["status"] == "SKIP"] == ["g=1 monodromy on all of Sigma"]
    assert rows["coset representations"]["detail"] == "CheckFailed: reached sym4 b=8"
    assert rows["X5 monodromy against thm3"]["detail"] == "CheckFailed: reached xn b=6"


def test_desk_suite_rejects_unknown_suite():
    with pytest.raises(HypothesisViolation):
        RunConfig(command="verify", suite="nightly").validate()
