"""
Tests for the command-line front end
"""

import json
import textwrap

import pytest

from poscodeg.cli import EXIT_INFEASIBLE, EXIT_NON_EXHAUSTIVE, EXIT_USAGE, EXIT_VIOLATION, Output, run
from poscodeg.hgformat import load_hypergraph


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("POSCODEG_RESULTS_DIR", str(tmp_path / "results"))
    monkeypatch.delenv("POSCODEG_JOBS", raising=False)
    monkeypatch.delenv("POSCODEG_BUDGET", raising=False)


def test_delta_prints_the_value(capsys):
    assert run(["delta", "-H", "K2,2,2"]) == 0
    assert capsys.readouterr().out == "2\n"


def test_delta_json(capsys):
    assert run(["delta", "-H", "H6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["delta_plus"] == 2
    assert data["positive_pairs"] == 15


def test_delta_of_edgeless_file_is_an_input_error(tmp_path):
    path = tmp_path / "empty.hg"
    path.write_text("4 0 3\n")
    assert run(["delta", "-H", str(path)]) == EXIT_USAGE


def test_malformed_file_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("4 1 3\n0 1 7\n")
    assert run(["delta", "-H", str(path)]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["delta"],
    ["search", "-F", "K4-", "--n", "six"],
    ["gen", "dodecahedron"],
    ["delta", "-H", "K9"],
    ["verify", "link-c4", "-H", "K2,2,2"],
    ["verify", "h6-congruence"],
])
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "Examples:" in capsys.readouterr().out


def test_gen_then_free(tmp_path, capsys):
    path = tmp_path / "six.hg"
    assert run(["gen", "k-partite", "--n", "12", "--k", "6", "-o", str(path)]) == 0
    assert load_hypergraph(path).n == 12

    assert run(["free", "-F", "Fano", "-H", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "free"


def test_free_reports_containment(capsys):
    assert run(["free", "-F", "K4-", "-H", "K4"]) == EXIT_VIOLATION
    assert capsys.readouterr().out.startswith("contains:")


def test_gen_to_stdout(capsys):
    assert run(["gen", "multipartite", "--sizes", "2,2,2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "6 8 3"
    assert len(lines) == 9


def test_gen_help_names_the_unsupported_generators(capsys):
    assert run(["gen", "--help"]) == 0
    assert "perturbations" in capsys.readouterr().out


def test_gen_circle_rejects_off_grid_angles(capsys):
    assert run(["gen", "circle", "--angles", "0,120,240.0000001"]) == EXIT_USAGE
    assert "grid" in capsys.readouterr().err


def test_count(capsys):
    assert run(["count", "-F", "K4-", "-H", "K4"]) == 0
    assert capsys.readouterr().out == "4\n"
    assert run(["count", "-F", "K4-", "-H", "K4", "--labeled"]) == 0
    assert capsys.readouterr().out == "24\n"


def test_search_json(capsys):
    assert run(["search", "-F", "K4-", "--n", "5", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exact_value"] == 1
    assert data["exhaustive"] is True
    assert "wall_time" not in data


def test_search_output_does_not_depend_on_jobs(capsys):
    run(["search", "-F", "F3,2", "--n", "5", "--json", "--jobs", "1"])
    serial = capsys.readouterr().out
    run(["search", "-F", "F3,2", "--n", "5", "--json", "--jobs", "2"])
    assert capsys.readouterr().out == serial


def test_search_exit_codes():
    assert run(["search", "-F", "K4-", "--n", "8", "--quiet"]) == EXIT_INFEASIBLE
    assert run(["search", "-F", "K4-", "--n", "6", "--budget", "1", "--quiet"]) == EXIT_NON_EXHAUSTIVE


def test_search_save(tmp_path, capsys):
    assert run(["search", "-F", "K4-", "--n", "4", "--save", "--quiet"]) == 0
    saved = tmp_path / "results" / "search_K4__n4.json"
    assert json.loads(saved.read_text())["exact_value"] == 1


@pytest.mark.parametrize("argv, code", [
    (["verify", "edge-bound", "-H", "K2,2,2"], 0),
    (["verify", "independent-set", "-H", "K2,2,2", "--set", "0", "1"], 0),
    (["verify", "t-statistic", "-H", "H6"], 0),
    (["verify", "span-profile", "-H", "K4"], EXIT_VIOLATION),
    (["verify", "link-c4", "-H", "K2,2,2", "--z", "4", "5"], EXIT_VIOLATION),
    (["verify", "h6-congruence", "--n", "12"], 0),
    (["verify", "h6-congruence", "--n", "8"], EXIT_USAGE),
    (["verify", "dichotomy", "-F", "K4-", "--n-list", "9", "12"], 0),
    (["verify", "supersaturation", "-H", "edge"], 0),
])
def test_verify(argv, code):
    assert run(argv + ["--json"]) == code


def test_verify_json_values(capsys):
    assert run(["verify", "t-statistic", "-H", "H6", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["t"] == 15


def test_table(capsys):
    assert run(["table", "--n", "60", "--json"]) == 0
    rows = {row["forbidden"]: row for row in json.loads(capsys.readouterr().out)["rows"]}
    assert rows["F3,2"]["ratio"] == "1/2"
    assert rows["Fano"]["ratio"] == "2/3"
    assert rows["F3,3"]["ratio"] == "3/5"


def test_piped_table_keeps_rows_on_one_line(capsys):
    assert run(["table", "--n", "60"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert any("K4 " in line and "balanced complete one-way bipartite" in line for line in lines)


def test_piped_text_is_not_folded(capsys):
    out = Output(as_json=False, quiet=False)
    out.emit({}, "x" * 300)
    assert capsys.readouterr().out == "x" * 300 + "\n"


def test_catalog(capsys):
    assert run(["catalog", "list", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert "H6" in [g["name"] for g in data["graphs"]]
    assert run(["catalog", "show", "H6"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "6 10 3"
    assert run(["catalog", "show"]) == EXIT_USAGE


def write_suite(directory, name, expect):
    directory.mkdir(exist_ok=True)
    (directory / f"{name}.yaml").write_text(textwrap.dedent(f"""
        name: {name}
        cases:
          - name: H6 delta
            checks:
              - type: delta
                graph: H6
                expect: {expect}
    """))


def test_reproduce(tmp_path, capsys):
    suites = tmp_path / "suites"
    write_suite(suites, "good", 2)
    assert run(["reproduce", "--suites-dir", str(suites), "--quiet", "--save"]) == 0
    assert len(list((tmp_path / "results").glob("good_*.json"))) == 1
    capsys.readouterr()

    write_suite(suites, "bad", 3)
    assert run(["reproduce", "--suites-dir", str(suites), "--json"]) == EXIT_VIOLATION
    data = json.loads(capsys.readouterr().out)
    assert [s["suite_name"] for s in data["suites"]] == ["bad", "good"]
    assert run(["reproduce", "--suites-dir", str(suites), "--suite", "good", "--quiet"]) == 0


def test_reproduce_without_suites(tmp_path):
    assert run(["reproduce", "--suites-dir", str(tmp_path)]) == EXIT_USAGE


def test_compare(tmp_path, capsys):
    before = tmp_path / "before.json"
    after = tmp_path / "after.json"
    before.write_text(json.dumps({"case_results": [{"case_name": "a", "passed": True}]}))
    after.write_text(json.dumps({"case_results": [{"case_name": "a", "passed": False}]}))
    assert run(["compare", str(before), str(before)]) == 0
    capsys.readouterr()
    assert run(["compare", str(before), str(after), "--json"]) == EXIT_VIOLATION
    assert json.loads(capsys.readouterr().out) == {
        "changes": [{"case_name": "a", "run1": True, "run2": False}]
    }
