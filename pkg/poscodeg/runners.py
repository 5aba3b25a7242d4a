"""
Acceptance suite loading and execution
"""

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from rich.console import Console

from .checks import CheckResult, run_checks
from .config import DEFAULT_NODE_BUDGET
from .errors import FormatError


@dataclass
class SuiteCase:
    """Single acceptance case"""
    name: str
    checks: List[Dict[str, Any]]
    informational: bool = False
    slow: bool = False
    metadata: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Dict) -> "SuiteCase":
        return cls(
            name=data.get("name", "Unnamed case"),
            checks=data.get("checks", []),
            informational=bool(data.get("informational", False)),
            slow=bool(data.get("slow", False)),
            metadata=data.get("metadata", {}),
        )


@dataclass
class CaseResult:
    """Result of running a single case"""
    case_name: str
    check_results: List[CheckResult]
    passed: bool
    informational: bool
    execution_time: float
    error: Optional[str] = None

    def to_dict(self, include_timing: bool = False) -> Dict:
        data = {
            "case_name": self.case_name,
            "check_results": [r.to_dict() for r in self.check_results],
            "passed": self.passed,
            "informational": self.informational,
            "error": self.error,
        }
        if include_timing:
            data["execution_time"] = self.execution_time
        return data


@dataclass
class SuiteResult:
    """Result of running a full suite"""
    suite_name: str
    description: str
    total_cases: int
    passed_cases: int
    failed_cases: int
    informational_failures: int
    total_time: float
    case_results: List[CaseResult]
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """Failures of informational cases do not fail the suite"""
        return all(r.passed or r.informational for r in self.case_results)

    @property
    def pass_rate(self) -> float:
        return self.passed_cases / self.total_cases if self.total_cases else 0.0

    def to_dict(self, include_timing: bool = False) -> Dict:
        """Convert to dictionary for serialization"""
        data = {
            "suite_name": self.suite_name,
            "description": self.description,
            "total_cases": self.total_cases,
            "passed_cases": self.passed_cases,
            "failed_cases": self.failed_cases,
            "informational_failures": self.informational_failures,
            "passed": self.passed,
            "case_results": [r.to_dict(include_timing) for r in self.case_results],
            "metadata": self.metadata,
        }
        if include_timing:
            data["total_time"] = self.total_time
        return data


@dataclass
class Suite:
    """A parsed suite file"""
    name: str
    description: str
    cases: List[SuiteCase]
    path: Optional[Path] = None


def load_suite(path: Union[str, Path]) -> Suite:
    """Load a YAML suite file (name, description, cases)"""
    path = Path(path)
    with open(path, "r") as f:
        data = yaml.safe_load(f)
    if not isinstance(data, dict) or "cases" not in data:
        raise FormatError(f"{path}: suite must be a mapping with a 'cases' list")
    return Suite(
        name=data.get("name", path.stem),
        description=data.get("description", ""),
        cases=[SuiteCase.from_dict(c) for c in data["cases"]],
        path=path,
    )


def discover_suites(suites_dir: Union[str, Path]) -> List[Path]:
    """Suite files in name order"""
    root = Path(suites_dir)
    return sorted(list(root.glob("*.yaml")) + list(root.glob("*.yml")))


class SuiteRunner:
    """Orchestrates suite execution"""

    def __init__(
        self,
        budget: int = DEFAULT_NODE_BUDGET,
        jobs: int = 1,
        verbose: bool = True,
        skip_slow: bool = False,
        console: Optional[Console] = None,
    ):
        """
        Initialize suite runner

        Args:
            budget: Node budget handed to search checks
            jobs: Worker processes for search and counting
            verbose: Print progress during execution
            skip_slow: Skip cases marked slow
        """
        self.budget = budget
        self.jobs = jobs
        self.verbose = verbose
        self.skip_slow = skip_slow
        self.console = console or Console(stderr=True)

    def run_case(self, case: SuiteCase) -> CaseResult:
        """
        Run a single case; exceptions are recorded on the result
        """
        start_time = time.time()
        try:
            check_results = run_checks(case.checks, budget=self.budget, jobs=self.jobs)
            # All checks must pass, and a case with no checks fails
            passed = bool(check_results) and all(r.passed for r in check_results)
            return CaseResult(
                case_name=case.name,
                check_results=check_results,
                passed=passed,
                informational=case.informational,
                execution_time=time.time() - start_time,
            )
        except Exception as e:
            return CaseResult(
                case_name=case.name,
                check_results=[],
                passed=False,
                informational=case.informational,
                execution_time=time.time() - start_time,
                error=str(e),
            )

    def run_suite(self, suite: Suite) -> SuiteResult:
        """
        Run every case of a suite

        Args:
            suite: Parsed suite

        Returns:
            SuiteResult with all case results
        """
        cases = [c for c in suite.cases if not (self.skip_slow and c.slow)]
        if self.verbose:
            self.console.rule(f"Suite: {suite.name}")
            self.console.print(f"Total cases: {len(cases)}")

        start_time = time.time()
        case_results = []
        for i, case in enumerate(cases, 1):
            if self.verbose:
                self.console.print(f"[{i}/{len(cases)}] Running: {case.name}...")
            result = self.run_case(case)
            case_results.append(result)
            if self.verbose:
                if result.passed:
                    status = "[green]✓ PASSED[/green]"
                elif result.informational:
                    status = "[yellow]~ INFORMATIONAL[/yellow]"
                else:
                    status = "[red]✗ FAILED[/red]"
                self.console.print(f"  {status} (time: {result.execution_time:.2f}s)")
                if result.error:
                    self.console.print(f"  Error: {result.error}")
                for check in result.check_results:
                    if check.error:
                        self.console.print(f"  {check.check_type}: {check.error}")

        passed_cases = sum(1 for r in case_results if r.passed)
        return SuiteResult(
            suite_name=suite.name,
            description=suite.description,
            total_cases=len(case_results),
            passed_cases=passed_cases,
            failed_cases=len(case_results) - passed_cases,
            informational_failures=sum(1 for r in case_results if not r.passed and r.informational),
            total_time=time.time() - start_time,
            case_results=case_results,
            metadata={"budget": self.budget, "skipped_slow": len(suite.cases) - len(cases)},
        )
