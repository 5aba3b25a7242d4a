"""
Tests for suite loading, the runner and results storage
"""

import json
import textwrap
from pathlib import Path

import pytest
from rich.console import Console

from poscodeg.errors import FormatError
from poscodeg.results import ResultsManager, dump_json
from poscodeg.runners import SuiteCase, SuiteRunner, discover_suites, load_suite

SUITE = textwrap.dedent("""
    name: Smoke
    description: A few quick cases
    cases:
      - name: H6 delta
        checks:
          - type: delta
            graph: H6
            expect: 2
      - name: wrong on purpose
        informational: true
        checks:
          - type: delta
            graph: H6
            expect: 5
      - name: slow search
        slow: true
        checks:
          - type: copex
            forbidden: K4-
            n: 4
            expect: 1
""")


def quiet_runner(**kwargs) -> SuiteRunner:
    return SuiteRunner(verbose=False, console=Console(quiet=True), **kwargs)


@pytest.fixture
def suite_path(tmp_path) -> Path:
    path = tmp_path / "01_smoke.yaml"
    path.write_text(SUITE)
    return path


def test_load_suite(suite_path):
    suite = load_suite(suite_path)
    assert suite.name == "Smoke"
    assert [c.name for c in suite.cases] == ["H6 delta", "wrong on purpose", "slow search"]
    assert suite.cases[1].informational
    assert suite.cases[2].slow


def test_load_suite_requires_cases(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("name: empty\n")
    with pytest.raises(FormatError):
        load_suite(path)


def test_discover_suites(tmp_path, suite_path):
    (tmp_path / "00_other.yml").write_text("cases: []\n")
    (tmp_path / "notes.txt").write_text("ignored")
    assert [p.name for p in discover_suites(tmp_path)] == ["00_other.yml", "01_smoke.yaml"]


def test_case_defaults():
    case = SuiteCase.from_dict({"checks": []})
    assert case.name == "Unnamed case"
    assert not case.informational and not case.slow


def test_informational_failures_do_not_fail_the_suite(suite_path):
    result = quiet_runner().run_suite(load_suite(suite_path))
    assert result.total_cases == 3
    assert result.passed_cases == 2
    assert result.informational_failures == 1
    assert result.passed


def test_skip_slow(suite_path):
    result = quiet_runner(skip_slow=True).run_suite(load_suite(suite_path))
    assert result.total_cases == 2
    assert result.metadata["skipped_slow"] == 1


def test_case_without_checks_fails():
    result = quiet_runner().run_case(SuiteCase(name="empty", checks=[]))
    assert not result.passed


def test_timing_only_in_saved_results(tmp_path, suite_path):
    result = quiet_runner(skip_slow=True).run_suite(load_suite(suite_path))
    assert "total_time" not in result.to_dict()

    manager = ResultsManager(tmp_path / "results", console=Console(quiet=True))
    path = manager.save_results(result, "run.json")
    data = manager.load_results("run.json")
    assert data["suite_name"] == "Smoke"
    assert "total_time" in data and "timestamp" in data
    assert path.read_text().endswith("\n")


def test_compare_results(tmp_path):
    manager = ResultsManager(tmp_path, console=Console(quiet=True))
    before = {"case_results": [{"case_name": "a", "passed": True}, {"case_name": "b", "passed": False}]}
    after = {"case_results": [{"case_name": "a", "passed": False}, {"case_name": "c", "passed": True}]}
    (tmp_path / "before.json").write_text(json.dumps(before))
    (tmp_path / "after.json").write_text(json.dumps(after))

    changes = manager.compare_results("before.json", "after.json")
    assert changes == [
        {"case_name": "a", "run1": True, "run2": False},
        {"case_name": "b", "run1": False, "run2": None},
        {"case_name": "c", "run1": None, "run2": True},
    ]


def test_dump_json_is_stable():
    assert dump_json({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
