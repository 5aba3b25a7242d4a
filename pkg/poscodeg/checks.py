"""
Named checks used by the YAML acceptance suites
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Union

from .catalog import get, j_k
from .config import DEFAULT_NODE_BUDGET
from .constructions import blow_up, build_construction, circle_construction
from .core import Hypergraph, min_positive_codegree
from .embed import contains_copy, count_copies, span_profile_ok
from .errors import CircleConfigurationError, HypergraphError
from .hgformat import from_json_dict, load_hypergraph
from .search import EXHAUSTIVE_CAP, canonical_form, copex_exact, ff_classification_check
from .verify import (
    check_against_bounds,
    dichotomy_probe,
    edge_bound_check,
    h6_congruence_check,
    independent_set_bound_check,
    lemma_corpus,
    lemma_suite,
    link_c4_free,
    supersaturation_check,
    t_statistic,
    table_emit,
    weyl_graph,
)

GraphSpec = Union[str, Dict[str, Any]]


def resolve_graph(spec: GraphSpec) -> Hypergraph:
    """
    Build a graph from a suite entry

    Accepted forms:
        "K4-"                                    catalog name (or "J<k>")
        {construction: k-partite, n: 30, k: 3}   named construction
        {blow_up: H6, factor: 2} / sizes: [...] blow-up of another spec
        {n: 4, edges: [[0, 1, 2]]}               explicit edge list
        {file: path.hg}                          HG v1 or JSON file
    """
    if isinstance(spec, str):
        if spec[:1] in ("J", "j") and spec[1:].isdigit():
            return j_k(int(spec[1:]))
        return get(spec)
    if not isinstance(spec, dict):
        raise HypergraphError(f"cannot build a graph from {spec!r}")
    if "construction" in spec:
        params = {k: v for k, v in spec.items() if k != "construction"}
        return build_construction(spec["construction"], **params)
    if "blow_up" in spec:
        base = resolve_graph(spec["blow_up"])
        sizes = spec.get("sizes") or [int(spec.get("factor", 1))] * base.n
        return blow_up(base, sizes)
    if "file" in spec:
        return load_hypergraph(spec["file"])
    if "edges" in spec:
        return from_json_dict(spec)
    raise HypergraphError(f"unrecognized graph spec keys: {sorted(spec)}")


def _family(spec: Union[GraphSpec, Sequence[GraphSpec]]) -> List[Hypergraph]:
    specs = spec if isinstance(spec, list) else [spec]
    return [resolve_graph(s) for s in specs]


def _labels(spec: Union[GraphSpec, Sequence[GraphSpec]]) -> List[str]:
    specs = spec if isinstance(spec, list) else [spec]
    return [s if isinstance(s, str) else str(s) for s in specs]


@dataclass
class CheckResult:
    """Result of a single check"""
    passed: bool
    check_type: str
    details: Optional[Dict[str, Any]] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "check_type": self.check_type,
            "details": self.details,
            "error": self.error,
        }


class BaseCheck:
    """Base class for checks"""

    check_type = "base"

    def __init__(self, budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1):
        self.budget = budget
        self.jobs = jobs

    def run(self, **params) -> CheckResult:
        """
        Run the check

        Args:
            **params: Check parameters from the suite file

        Returns:
            CheckResult with pass/fail and details
        """
        raise NotImplementedError

    def result(self, passed: bool, **details) -> CheckResult:
        return CheckResult(passed=passed, check_type=self.check_type, details=details)

    def search_budget(self, n: int, override: Optional[int] = None) -> int:
        """The runner budget only limits best-effort sizes; exhaustive sizes always finish"""
        if n <= EXHAUSTIVE_CAP:
            return override or DEFAULT_NODE_BUDGET
        return min(self.budget, override) if override else self.budget


class DeltaCheck(BaseCheck):
    """δ⁺ of a graph equals the expected value"""

    check_type = "delta"

    def run(self, graph: GraphSpec, expect: int, **kwargs) -> CheckResult:
        delta = min_positive_codegree(resolve_graph(graph))
        return self.result(delta == expect, delta=delta, expected=expect)


class FreeCheck(BaseCheck):
    """F-freeness (or containment) via the embedding engine"""

    check_type = "free"

    def run(self, graph: GraphSpec, forbidden, expect: bool = True, **kwargs) -> CheckResult:
        H = resolve_graph(graph)
        found = {}
        for label, F in zip(_labels(forbidden), _family(forbidden)):
            witness = contains_copy(F, H)
            found[label] = witness.to_dict() if witness else None
        free = all(w is None for w in found.values())
        return self.result(free == expect, free=free, witnesses=found)


class CertificateCheck(BaseCheck):
    """Construction certificate: exact δ⁺ and freeness of every listed F"""

    check_type = "certificate"

    def run(self, graph: GraphSpec, expect_delta: int, free_of: Sequence[GraphSpec] = (), **kwargs) -> CheckResult:
        H = resolve_graph(graph)
        delta = min_positive_codegree(H)
        contained = [label for label, F in zip(_labels(list(free_of)), _family(list(free_of))) if contains_copy(F, H)]
        return self.result(
            delta == expect_delta and not contained,
            n=H.n, delta=delta, expected=expect_delta, contained=contained,
        )


class CountCheck(BaseCheck):
    """Unlabeled copy count"""

    check_type = "count"

    def run(self, pattern: GraphSpec, graph: GraphSpec, expect: int, **kwargs) -> CheckResult:
        copies = count_copies(resolve_graph(pattern), resolve_graph(graph), self.jobs)
        return self.result(copies == expect, copies=copies, expected=expect)


class CopexCheck(BaseCheck):
    """
    Exact co⁺ex(n, F) against an expected value or range, optionally
    requiring named witnesses and the finite-n bounds
    """

    check_type = "copex"

    def run(
        self,
        forbidden,
        n: int,
        expect: Optional[int] = None,
        expect_range: Optional[Sequence[int]] = None,
        witnesses: Sequence[GraphSpec] = (),
        bounds: bool = False,
        budget: Optional[int] = None,
        **kwargs,
    ) -> CheckResult:
        report = copex_exact(
            n, _family(forbidden), budget=self.search_budget(n, budget), jobs=self.jobs, names=_labels(forbidden)
        )
        forms = set(report.witnesses)
        missing = [str(w) for w in witnesses if canonical_form(resolve_graph(w)) not in forms]
        passed = report.exhaustive and not missing
        if expect is not None:
            passed = passed and report.exact_value == expect
        if expect_range is not None:
            low, high = expect_range
            passed = passed and low <= report.exact_value <= high
        details = {
            "value": report.exact_value,
            "exhaustive": report.exhaustive,
            "witness_count": report.witness_count,
            "missing_witnesses": missing,
            "annotations": report.annotations,
        }
        if bounds:
            check = check_against_bounds(report)
            details["bounds"] = check.to_dict()
            passed = passed and check.holds
        return self.result(passed, **details)


class MonotonicityCheck(BaseCheck):
    """co⁺ex(n) <= co⁺ex(n+1) <= co⁺ex(n) + 1 over a range of n"""

    check_type = "monotonicity"

    def run(self, forbidden, n_min: int = 3, n_max: int = 6, **kwargs) -> CheckResult:
        family = _family(forbidden)
        values = {}
        exhaustive = True
        for n in range(n_min, n_max + 1):
            report = copex_exact(n, family, budget=self.search_budget(n), jobs=self.jobs)
            values[n] = report.exact_value
            exhaustive = exhaustive and report.exhaustive
        broken = [
            n for n in range(n_min, n_max)
            if not values[n] <= values[n + 1] <= values[n] + 1
        ]
        return self.result(exhaustive and not broken, values=values, broken=broken, exhaustive=exhaustive)


class DeterminismCheck(BaseCheck):
    """Identical search reports for every job count"""

    check_type = "determinism"

    def run(self, forbidden, n: int, jobs: Sequence[int] = (1, 8), **kwargs) -> CheckResult:
        family = _family(forbidden)
        reports = [
            copex_exact(n, family, budget=self.search_budget(n), jobs=j, names=_labels(forbidden)).to_dict()
            for j in jobs
        ]
        identical = all(r == reports[0] for r in reports[1:])
        return self.result(identical, jobs=list(jobs), value=reports[0]["exact_value"])


class BlowUpScalingCheck(BaseCheck):
    """δ⁺ of the m-fold blow-up is m·δ⁺"""

    check_type = "blow_up_scaling"

    def run(self, graph: GraphSpec, factors: Sequence[int] = (1, 2, 3), **kwargs) -> CheckResult:
        H = resolve_graph(graph)
        base = min_positive_codegree(H)
        observed = {m: min_positive_codegree(blow_up(H, [m] * H.n)) for m in factors}
        broken = [m for m, d in observed.items() if d != m * base]
        return self.result(not broken, base=base, observed=observed, broken=broken)


class BlowUpFreenessCheck(BaseCheck):
    """Blow-ups of small F-free graphs stay F-free"""

    check_type = "blow_up_freeness"

    def run(self, forbidden: GraphSpec, count: int = 20, factor: int = 2, sizes: Sequence[int] = (5, 6, 7),
            **kwargs) -> CheckResult:
        F = resolve_graph(forbidden)
        tested, violations = 0, []
        index = 0
        while tested < count and index < 50 * count:
            n = sizes[index % len(sizes)]
            H = weyl_graph(n, index)
            index += 1
            if not H.edges or contains_copy(F, H):
                continue
            tested += 1
            if contains_copy(F, blow_up(H, [factor] * n)):
                violations.append({"n": n, "edges": [list(e) for e in H.edges]})
        return self.result(tested == count and not violations, tested=tested, violations=violations)


class SpanProfileCheck(BaseCheck):
    """Every 4 vertices span 0 or 2 edges"""

    check_type = "span_profile"

    def run(self, graph: GraphSpec, expect: bool = True, **kwargs) -> CheckResult:
        result = span_profile_ok(resolve_graph(graph))
        return self.result(result.ok == expect, **result.to_dict())


class H6BlowUpProfilesCheck(BaseCheck):
    """Span profile of every H6 blow-up with classes of size at most max_class"""

    check_type = "h6_blow_up_profiles"

    def run(self, max_class: int = 2, **kwargs) -> CheckResult:
        h6 = get("H6")
        tested, failures = 0, []
        for sizes in product(range(max_class + 1), repeat=6):
            if not any(sizes):
                continue
            tested += 1
            if not span_profile_ok(blow_up(h6, sizes)):
                failures.append(list(sizes))
        return self.result(not failures, tested=tested, failures=failures)


class CircleProfilesCheck(BaseCheck):
    """Span profile of circle constructions over deterministic angle sets"""

    check_type = "circle_profiles"

    def run(self, points: Sequence[int] = (4, 5, 6, 7), configurations: int = 50, **kwargs) -> CheckResult:
        tested, failures = 0, []
        for count in points:
            made, seed = 0, 0
            while made < configurations:
                seed += 1
                angles = [Fraction((seed * 7919 + i * 104729) * (i + 3) % 36000, 100) for i in range(count)]
                try:
                    H = circle_construction(angles)
                except CircleConfigurationError:
                    continue
                made += 1
                if not span_profile_ok(H):
                    failures.append([str(a) for a in angles])
            tested += made
        return self.result(not failures, tested=tested, failures=failures)


class ClassificationCheck(BaseCheck):
    """Every 0-or-2 span-profile graph is circle-type or an H6 blow-up"""

    check_type = "ff_classification"

    def run(self, n: int, **kwargs) -> CheckResult:
        report = ff_classification_check(n, jobs=self.jobs)
        return self.result(report.holds, **report.to_dict())


class SupersaturationCheck(BaseCheck):
    check_type = "supersaturation"

    def run(self, graph: GraphSpec, **kwargs) -> CheckResult:
        report = supersaturation_check(resolve_graph(graph), self.jobs)
        return self.result(report.holds, **report.to_dict())


class EdgeBoundCheck(BaseCheck):
    check_type = "edge_bound"

    def run(self, graph: GraphSpec, **kwargs) -> CheckResult:
        report = edge_bound_check(resolve_graph(graph))
        return self.result(report.holds, **report.to_dict())


class IndependentSetCheck(BaseCheck):
    check_type = "independent_set_bound"

    def run(self, graph: GraphSpec, independent_set: Sequence[int], **kwargs) -> CheckResult:
        report = independent_set_bound_check(resolve_graph(graph), independent_set)
        return self.result(report.holds, **report.to_dict())


class TStatisticCheck(BaseCheck):
    check_type = "t_statistic"

    def run(self, graph: GraphSpec, expect: Optional[int] = None, **kwargs) -> CheckResult:
        report = t_statistic(resolve_graph(graph))
        passed = report.holds and (expect is None or report.t == expect)
        return self.result(passed, expected=expect, **report.to_dict())


class LemmaSuiteCheck(BaseCheck):
    """Lemma inequalities over the full graph corpus"""

    check_type = "lemma_suite"

    def run(self, min_graphs: int = 500, max_n: int = 24, **kwargs) -> CheckResult:
        report = lemma_suite(lemma_corpus(max_n))
        details = report.to_dict()
        details["violations"] = details["violations"][:20]
        return self.result(report.holds and report.graphs >= min_graphs, **details)


class LinkC4Check(BaseCheck):
    """C4-freeness of link graphs over all (or every stride-th) vertex pair"""

    check_type = "link_c4_free"

    def run(self, graph: GraphSpec, stride: int = 1, **kwargs) -> CheckResult:
        H = resolve_graph(graph)
        pairs = list(combinations(range(H.n), 2))[::stride]
        bad = [list(p) for p in pairs if not link_c4_free(H, *p)]
        return self.result(not bad, pairs_checked=len(pairs), failures=bad)


class DichotomyCheck(BaseCheck):
    check_type = "dichotomy"

    def run(self, forbidden: GraphSpec, n_list: Sequence[int] = (9,), expect_tripartite: Optional[bool] = None,
            **kwargs) -> CheckResult:
        report = dichotomy_probe(resolve_graph(forbidden), n_list, name=str(forbidden))
        passed = report.holds and (expect_tripartite is None or report.tripartite == expect_tripartite)
        return self.result(passed, **report.to_dict())


class TableCheck(BaseCheck):
    """Construction ratios at n match the expected rows"""

    check_type = "table"

    def run(self, n: int, expect_ratios: Optional[Dict[str, str]] = None, **kwargs) -> CheckResult:
        report = table_emit(n)
        ratios = {row.name: str(row.ratio) for row in report.rows}
        mismatched = {
            name: ratios.get(name) for name, ratio in (expect_ratios or {}).items()
            if ratios.get(name) != str(Fraction(ratio))
        }
        return self.result(report.holds and not mismatched, ratios=ratios, mismatched=mismatched)


class CongruenceCheck(BaseCheck):
    check_type = "h6_congruence"

    def run(self, n_list: Sequence[int], **kwargs) -> CheckResult:
        reports = [h6_congruence_check(n) for n in n_list]
        return self.result(all(r.holds for r in reports), reports=[r.to_dict() for r in reports])


# Registry of available checks
CHECK_REGISTRY = {
    cls.check_type: cls
    for cls in (
        DeltaCheck,
        FreeCheck,
        CertificateCheck,
        CountCheck,
        CopexCheck,
        MonotonicityCheck,
        DeterminismCheck,
        BlowUpScalingCheck,
        BlowUpFreenessCheck,
        SpanProfileCheck,
        H6BlowUpProfilesCheck,
        CircleProfilesCheck,
        ClassificationCheck,
        SupersaturationCheck,
        EdgeBoundCheck,
        IndependentSetCheck,
        TStatisticCheck,
        LemmaSuiteCheck,
        LinkC4Check,
        DichotomyCheck,
        TableCheck,
        CongruenceCheck,
    )
}


def run_checks(
    checks: List[Dict[str, Any]],
    budget: int = DEFAULT_NODE_BUDGET,
    jobs: int = 1,
) -> List[CheckResult]:
    """
    Run a list of check configs (e.g. [{"type": "delta", "graph": "H6", "expect": 2}])

    Unknown types and exceptions raised by a check become failed results.
    """
    results = []
    for config in checks:
        check_type = config.get("type")
        if not check_type:
            results.append(CheckResult(passed=False, check_type="unknown", error="No check type specified"))
            continue
        if check_type not in CHECK_REGISTRY:
            results.append(CheckResult(passed=False, check_type=check_type, error=f"Unknown check type: {check_type}"))
            continue
        params = {k: v for k, v in config.items() if k != "type"}
        try:
            results.append(CHECK_REGISTRY[check_type](budget=budget, jobs=jobs).run(**params))
        except Exception as e:
            results.append(CheckResult(passed=False, check_type=check_type, error=f"{type(e).__name__}: {e}"))
    return results
