"""
Results storage and reporting
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from .runners import SuiteResult


def dump_json(data: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


class ResultsManager:
    """Manage suite results and search reports - storage and reporting"""

    def __init__(self, results_dir: Union[str, Path] = "results", console: Optional[Console] = None):
        self.results_dir = Path(results_dir)
        self.console = console or Console()

    def _path(self, filename: Union[str, Path]) -> Path:
        path = Path(filename)
        if path.is_absolute() or path.exists():
            return path
        return self.results_dir / path

    def _write(self, data: Dict[str, Any], filename: str) -> Path:
        self.results_dir.mkdir(parents=True, exist_ok=True)
        filepath = self.results_dir / filename
        filepath.write_text(dump_json(data))
        return filepath

    def save_results(self, suite_result: SuiteResult, filename: Optional[str] = None) -> Path:
        """
        Save suite results to a JSON file

        Args:
            suite_result: SuiteResult to save
            filename: Optional filename (defaults to suite name + timestamp)

        Returns:
            Path to saved file
        """
        if filename is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            safe_name = "".join(c if c.isalnum() else "_" for c in suite_result.suite_name)
            filename = f"{safe_name}_{timestamp}.json"
        result_dict = suite_result.to_dict(include_timing=True)
        result_dict["timestamp"] = datetime.now().isoformat()
        return self._write(result_dict, filename)

    def save_report(self, report, filename: Optional[str] = None) -> Path:
        """Save a search report (anything with to_dict()) without timing fields"""
        if filename is None:
            forbidden = "_".join("".join(c if c.isalnum() else "_" for c in f) for f in report.forbidden)
            filename = f"search_{forbidden}_n{report.n}.json"
        return self._write(report.to_dict(), filename)

    def load_results(self, filename: Union[str, Path]) -> dict:
        """Load results from a JSON file (absolute, relative, or inside results_dir)"""
        with open(self._path(filename), "r") as f:
            return json.load(f)

    def print_summary(self, suite_result: SuiteResult):
        """Print a summary panel and per-case table"""
        rate = suite_result.pass_rate
        rate_color = "green" if suite_result.passed else "yellow" if rate >= 0.5 else "red"

        summary = Text()
        summary.append(f"Suite: {suite_result.suite_name}\n", style="bold")
        if suite_result.description:
            summary.append(f"{suite_result.description}\n", style="dim")
        summary.append(f"Cases: {suite_result.total_cases} | ", style="white")
        summary.append(f"Passed: {suite_result.passed_cases} | ", style="green")
        summary.append(f"Failed: {suite_result.failed_cases}", style="red")
        if suite_result.informational_failures:
            summary.append(f" ({suite_result.informational_failures} informational)", style="yellow")
        summary.append("\nPass Rate: ", style="white")
        summary.append(f"{rate * 100:.1f}%\n", style=rate_color)
        summary.append(f"Time: {suite_result.total_time:.2f}s", style="white")
        self.console.print(Panel(summary, title="Acceptance Results", border_style="blue"))

        table = Table(title="Case Details")
        table.add_column("Case", style="cyan")
        table.add_column("Status", style="white")
        table.add_column("Time", justify="right")
        table.add_column("Checks")
        for result in suite_result.case_results:
            table.add_row(
                result.case_name,
                _status_text(result.passed, result.informational),
                f"{result.execution_time:.2f}s",
                "\n".join(
                    f"{'✓' if c.passed else '✗'} {c.check_type}" + (f": {c.error}" if c.error else "")
                    for c in result.check_results
                ) or (result.error or ""),
            )
        self.console.print(table)

    def print_matrix(self, suite_results: List[SuiteResult]):
        """Pass/fail matrix over several suites"""
        table = Table(title="Acceptance Matrix")
        table.add_column("Suite", style="cyan")
        table.add_column("Case")
        table.add_column("Status")
        for suite in suite_results:
            for i, result in enumerate(suite.case_results):
                table.add_row(suite.suite_name if i == 0 else "", result.case_name,
                              _status_text(result.passed, result.informational))
        self.console.print(table)
        failed = sum(1 for s in suite_results if not s.passed)
        color = "green" if not failed else "red"
        self.console.print(f"[{color}]{len(suite_results) - failed}/{len(suite_results)} suites passed[/{color}]")

    def print_search_report(self, report):
        """Search report: value, exhaustiveness, canonical witnesses"""
        summary = Text()
        summary.append(f"co⁺ex({report.n}, {', '.join(report.forbidden)}) = ", style="bold")
        summary.append(f"{report.exact_value}\n", style="bold green")
        summary.append("Exhaustive: ", style="white")
        summary.append(f"{report.exhaustive}\n", style="green" if report.exhaustive else "yellow")
        summary.append(f"Nodes explored: {report.nodes_explored}\n", style="white")
        summary.append(f"Witnesses: {report.witness_count}", style="white")
        if report.witnesses_truncated:
            summary.append(f" ({report.witnesses_truncated} not shown)", style="yellow")
        self.console.print(Panel(summary, title="Search", border_style="blue"))

        if report.witnesses:
            table = Table(title="Canonical Witnesses")
            table.add_column("#", justify="right")
            table.add_column("m", justify="right")
            table.add_column("Edges")
            for i, w in enumerate(report.witnesses):
                table.add_row(str(i), str(len(w.edges)), " ".join("".join(str(v) for v in e) for e in w.edges))
            self.console.print(table)
        for note in report.annotations:
            self.console.print(f"  • {note}")

    def print_table(self, table_report):
        """Constructions against the published density range"""
        table = Table(title=f"Lower-bound constructions at n = {table_report.n}")
        table.add_column("F", style="cyan")
        table.add_column("Construction")
        table.add_column("δ⁺", justify="right")
        table.add_column("δ⁺/n", justify="right")
        table.add_column("F-free")
        table.add_column("density ≥", justify="right")
        table.add_column("density ≤", justify="right")
        table.add_column("co⁺ex ≤", justify="right")
        for row in table_report.rows:
            table.add_row(
                row.name,
                row.construction,
                str(row.delta),
                str(row.ratio),
                Text("yes", style="green") if row.f_free else Text("NO", style="red"),
                str(row.density_lower),
                str(row.density_upper),
                str(row.finite_upper) if row.finite_upper is not None else "-",
            )
        self.console.print(table)
        if table_report.skipped:
            self.console.print(f"[dim]skipped (n too small): {', '.join(table_report.skipped)}[/dim]")

    def compare_results(self, filename1: str, filename2: str) -> List[Dict[str, Any]]:
        """
        Compare two saved suite runs case by case

        Returns:
            Cases whose status differs (missing on one side counts as a change)
        """
        results1 = self.load_results(filename1)
        results2 = self.load_results(filename2)

        self.console.print("\n[bold]Comparing Results:[/bold]")
        self.console.print(f"Run 1: {filename1}")
        self.console.print(f"Run 2: {filename2}\n")

        status1 = {c["case_name"]: c["passed"] for c in results1.get("case_results", [])}
        status2 = {c["case_name"]: c["passed"] for c in results2.get("case_results", [])}

        table = Table(title="Comparison")
        table.add_column("Case", style="cyan")
        table.add_column("Run 1")
        table.add_column("Run 2")
        table.add_column("Change")

        changes = []
        for name in list(status1) + [n for n in status2 if n not in status1]:
            before, after = status1.get(name), status2.get(name)
            if before == after:
                change = Text("same", style="white")
            elif after is None or before is None:
                change = Text("added" if before is None else "removed", style="yellow")
            else:
                change = Text("fixed" if after else "broken", style="green" if after else "red")
            if before != after:
                changes.append({"case_name": name, "run1": before, "run2": after})
            table.add_row(name, _pass_label(before), _pass_label(after), change)
        self.console.print(table)
        return changes


def _status_text(passed: bool, informational: bool) -> Text:
    if passed:
        return Text("✓ PASS", style="green")
    if informational:
        return Text("~ INFO", style="yellow")
    return Text("✗ FAIL", style="red")


def _pass_label(value: Optional[bool]) -> str:
    if value is None:
        return "-"
    return "pass" if value else "fail"
