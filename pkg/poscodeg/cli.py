"""
Command-line front end

Exit codes: 0 ok/free, 1 contains/violation, 2 non-exhaustive,
3 infeasible, 64 usage or bad input.
"""

import argparse
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from rich.console import Console

from .catalog import CATALOG, get_named
from .checks import resolve_graph
from .config import get_settings, resolve_jobs
from .constructions import CONSTRUCTION_REGISTRY, build_construction
from .core import Hypergraph, max_codegree, min_codegree, min_positive_codegree, positive_pairs
from .embed import contains_copy, count_copies, count_embeddings, span_profile_ok
from .errors import InfeasibleError, PoscodegError
from .hgformat import format_hg, load_hypergraph, save_hypergraph, to_json_dict
from .results import ResultsManager, dump_json
from .runners import SuiteResult, SuiteRunner, discover_suites, load_suite
from .search import copex_exact, ff_classification_check
from .verify import (
    dichotomy_probe,
    edge_bound_check,
    h6_congruence_check,
    independent_set_bound_check,
    lemma_corpus,
    lemma_suite,
    link_c4_report,
    supersaturation_check,
    t_statistic_general,
    table_emit,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_NON_EXHAUSTIVE = 2
EXIT_INFEASIBLE = 3
EXIT_USAGE = 64

# Width used when output is piped; rich would otherwise fold at 80 columns
PIPED_WIDTH = 160


def human_console(stderr: bool = False) -> Console:
    stream = sys.stderr if stderr else sys.stdout
    width = None if stream.isatty() else PIPED_WIDTH
    return Console(stderr=stderr, soft_wrap=True, width=width)


err_console = human_console(stderr=True)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def load_graph(token: str) -> Hypergraph:
    """A file path (HG v1 or JSON) when it exists, else a catalog name"""
    if Path(token).is_file():
        return load_hypergraph(token)
    return resolve_graph(token)


class Output:
    """Routes machine output to stdout and human output through rich"""

    def __init__(self, as_json: bool, quiet: bool):
        self.as_json = as_json
        self.quiet = quiet
        self.console = human_console()

    def json(self, data: Any) -> None:
        sys.stdout.write(dump_json(data))
        sys.stdout.flush()

    def raw(self, text: str) -> None:
        sys.stdout.write(text)
        sys.stdout.flush()

    def emit(self, data: Dict[str, Any], text: str) -> None:
        if self.as_json:
            self.json(data)
        else:
            self.console.print(text, highlight=False, markup=False)

    def info(self, text: str) -> None:
        if not self.quiet and not self.as_json:
            err_console.print(text)


# ---------------------------------------------------------------------------
# Subcommands

def cmd_delta(args, out: Output) -> int:
    H = load_graph(args.H)
    delta = min_positive_codegree(H)
    data = {
        "n": H.n,
        "m": H.m,
        "delta_plus": delta,
        "min_codegree": min_codegree(H),
        "max_codegree": max_codegree(H),
        "positive_pairs": len(positive_pairs(H)),
    }
    out.emit(data, str(delta))
    return EXIT_OK


def cmd_free(args, out: Output) -> int:
    H = load_graph(args.H)
    F = load_graph(args.F)
    witness = contains_copy(F, H)
    if witness is None:
        out.emit({"free": True, "witness": None}, "free")
        return EXIT_OK
    edges = " ".join("".join(str(v) for v in e) for e in witness.image_edges(F))
    out.emit({"free": False, "witness": witness.to_dict()}, f"contains: {list(witness.mapping)} -> {edges}")
    return EXIT_VIOLATION


def cmd_count(args, out: Output) -> int:
    H = load_graph(args.H)
    F = load_graph(args.F)
    if args.labeled:
        value = count_embeddings(F, H, args.jobs)
        out.emit({"labeled_embeddings": value}, str(value))
    else:
        value = count_copies(F, H, args.jobs)
        out.emit({"copies": value}, str(value))
    return EXIT_OK


GEN_PARAMS = ("n", "k", "sizes", "angles", "x", "y", "q")


def cmd_gen(args, out: Output) -> int:
    params = {p: getattr(args, p) for p in GEN_PARAMS}
    H = build_construction(args.name, **params)
    if args.output:
        path = save_hypergraph(H, args.output, as_json=args.json)
        out.info(f"Wrote {H} to {path}")
    elif args.json:
        out.json(to_json_dict(H))
    else:
        out.raw(format_hg(H))
    return EXIT_OK


def cmd_search(args, out: Output) -> int:
    family = [load_graph(token) for token in args.F]
    report = copex_exact(
        args.n,
        family,
        budget=args.budget,
        jobs=args.jobs,
        witness_limit=args.witness_limit,
        names=list(args.F),
        verbose=not args.quiet and not args.json,
    )
    if args.json:
        out.json(report.to_dict())
    else:
        ResultsManager(console=out.console).print_search_report(report)
    if args.save:
        path = ResultsManager(get_settings().results_dir).save_report(report)
        out.info(f"Report saved to: {path}")
    return EXIT_OK if report.exhaustive else EXIT_NON_EXHAUSTIVE


def _verify_report(args):
    lemma = args.lemma
    if lemma == "h6-congruence":
        return h6_congruence_check(args.n)
    if lemma == "classification":
        return ff_classification_check(args.n, jobs=args.jobs)
    if lemma == "lemma-suite":
        return lemma_suite(lemma_corpus(args.max_n))
    if lemma == "dichotomy":
        return dichotomy_probe(load_graph(args.F), args.n_list or [9], name=args.F)

    if args.H is None:
        raise UsageError(f"verify {lemma} needs -H")
    H = load_graph(args.H)
    if lemma == "edge-bound":
        return edge_bound_check(H)
    if lemma == "independent-set":
        return independent_set_bound_check(H, args.set or [])
    if lemma == "supersaturation":
        return supersaturation_check(H, args.jobs)
    if lemma == "t-statistic":
        return t_statistic_general(H, args.l)
    if lemma == "span-profile":
        return span_profile_ok(H)
    if lemma == "link-c4":
        if args.z is None or len(args.z) != 2:
            raise UsageError("verify link-c4 needs --z Z1 Z2")
        return link_c4_report(H, *args.z)
    raise UsageError(f"unknown lemma {lemma}")


VERIFY_LEMMAS = (
    "edge-bound",
    "independent-set",
    "supersaturation",
    "t-statistic",
    "link-c4",
    "span-profile",
    "dichotomy",
    "h6-congruence",
    "classification",
    "lemma-suite",
)


def cmd_verify(args, out: Output) -> int:
    report = _verify_report(args)
    data = report.to_dict()
    holds = bool(report.holds) if hasattr(report, "holds") else bool(report)
    if out.as_json:
        out.json(data)
    else:
        for key, value in data.items():
            out.console.print(f"{key}: {value}", highlight=False, markup=False)
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_table(args, out: Output) -> int:
    report = table_emit(args.n)
    if args.json:
        out.json(report.to_dict())
    else:
        ResultsManager(console=out.console).print_table(report)
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_catalog(args, out: Output) -> int:
    if args.action == "list":
        rows = [
            {"name": name, "n": entry.graph.n, "m": entry.graph.m, "source": entry.source}
            for name, entry in CATALOG.items()
        ]
        text = "\n".join(f"{r['name']:<8} n={r['n']:<3} m={r['m']:<3} {r['source']}" for r in rows)
        out.emit({"graphs": rows, "constructions": list(CONSTRUCTION_REGISTRY)}, text)
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog show needs a graph name")
    entry = get_named(args.name)
    if args.json:
        out.json({"name": entry.name, "source": entry.source, **to_json_dict(entry.graph)})
    else:
        out.raw(format_hg(entry.graph))
    return EXIT_OK


def reproduce_all(
    suites_dir: Optional[str] = None,
    budget: Optional[int] = None,
    jobs: int = 1,
    verbose: bool = True,
    skip_slow: bool = False,
    only: Optional[Sequence[str]] = None,
) -> List[SuiteResult]:
    """
    Run every YAML acceptance suite in suites_dir

    Args:
        suites_dir: Directory of suite files (default POSCODEG_SUITES_DIR)
        budget: Node budget per search (default POSCODEG_BUDGET)
        jobs: Worker processes
        only: Restrict to suites whose file stem is listed

    Returns:
        One SuiteResult per suite file
    """
    settings = get_settings()
    runner = SuiteRunner(
        budget=budget if budget is not None else settings.node_budget,
        jobs=jobs,
        verbose=verbose,
        skip_slow=skip_slow,
    )
    paths = discover_suites(suites_dir or settings.suites_dir)
    if only:
        paths = [p for p in paths if p.stem in only]
    return [runner.run_suite(load_suite(p)) for p in paths]


def cmd_reproduce(args, out: Output) -> int:
    results = reproduce_all(
        suites_dir=args.suites_dir,
        budget=args.budget,
        jobs=args.jobs,
        verbose=not args.quiet and not args.json,
        skip_slow=args.skip_slow,
        only=args.suite,
    )
    if not results:
        raise UsageError(f"no suite files found in {args.suites_dir or get_settings().suites_dir}")
    manager = ResultsManager(get_settings().results_dir, console=out.console)
    if args.save:
        for result in results:
            out.info(f"Results saved to: {manager.save_results(result)}")
    if args.json:
        out.json({"suites": [r.to_dict() for r in results], "passed": all(r.passed for r in results)})
    else:
        if not args.quiet:
            for result in results:
                manager.print_summary(result)
        manager.print_matrix(results)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def cmd_compare(args, out: Output) -> int:
    manager = ResultsManager(get_settings().results_dir, console=out.console)
    if args.json:
        manager.console = Console(stderr=True, quiet=True)
    changes = manager.compare_results(args.result1, args.result2)
    if args.json:
        out.json({"changes": changes})
    broken = [c for c in changes if c["run1"] and c["run2"] is False]
    return EXIT_VIOLATION if broken else EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Output], int]] = {
    "delta": cmd_delta,
    "free": cmd_free,
    "count": cmd_count,
    "gen": cmd_gen,
    "search": cmd_search,
    "verify": cmd_verify,
    "table": cmd_table,
    "catalog": cmd_catalog,
    "reproduce": cmd_reproduce,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable JSON on stdout")
    common.add_argument("--jobs", type=int, help="Worker processes (default: POSCODEG_JOBS or 1)")
    common.add_argument("--quiet", action="store_true", help="Minimal output (no progress)")

    parser = _Parser(
        prog="poscodeg",
        description="Positive co-degree Turán numbers of 3-graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Minimum positive co-degree of a file or catalog graph
  python run_poscodeg.py delta -H K2,2,2

  # Exact co-degree Turán number, all extremal graphs
  python run_poscodeg.py search -F K4- --n 6 --json

  # Freeness of a generated construction
  python run_poscodeg.py gen k-partite --n 12 --k 6 -o six.hg
  python run_poscodeg.py free -F Fano -H six.hg

  # Full acceptance run
  python run_poscodeg.py reproduce --save
        """,
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("delta", parents=[common], help="Co-degree statistics of a graph")
    p.add_argument("-H", required=True, help="Graph file or catalog name")

    p = sub.add_parser("free", parents=[common], help="Is H F-free? (exit 1 if it contains F)")
    p.add_argument("-F", required=True, help="Forbidden graph")
    p.add_argument("-H", required=True, help="Host graph")

    p = sub.add_parser("count", parents=[common], help="Copies of F in H")
    p.add_argument("-F", required=True, help="Pattern graph")
    p.add_argument("-H", required=True, help="Host graph")
    p.add_argument("--labeled", action="store_true", help="Count labeled embeddings instead")

    p = sub.add_parser(
        "gen", parents=[common], help="Generate a construction in HG v1",
        description="Generate a deterministic construction in HG v1. Random perturbations of extremal graphs are not supported.",
    )
    p.add_argument("name", choices=list(CONSTRUCTION_REGISTRY), help="Construction name")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--sizes", type=str, help="Class sizes, e.g. 2,2,2")
    p.add_argument("--angles", type=str, help="Circle angles in degrees on the 10^-6 grid, e.g. 0,100,200")
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("-o", "--output", type=str, help="Write to a file instead of stdout")

    p = sub.add_parser("search", parents=[common], help="Exact co⁺ex(n, F) with canonical witnesses")
    p.add_argument("-F", required=True, action="append", help="Forbidden graph (repeat for a family)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, help="Node budget per decision run (default: POSCODEG_BUDGET)")
    p.add_argument("--witness-limit", type=int, default=1000)
    p.add_argument("--save", action="store_true", help="Save the JSON report to the results directory")

    p = sub.add_parser("verify", parents=[common], help="Check a lemma on a concrete graph")
    p.add_argument("lemma", choices=VERIFY_LEMMAS)
    p.add_argument("-H", help="Graph file or catalog name")
    p.add_argument("-F", help="Forbidden graph (dichotomy)")
    p.add_argument("--set", type=int, nargs="*", help="Independent set vertices")
    p.add_argument("--z", type=int, nargs=2, help="The two link vertices")
    p.add_argument("--l", type=int, default=2, help="Common-neighbourhood size for the T-statistic")
    p.add_argument("--n", type=int, help="Vertex count (h6-congruence, classification)")
    p.add_argument("--n-list", type=int, nargs="*", help="Vertex counts (dichotomy)")
    p.add_argument("--max-n", type=int, default=24, help="Largest construction in the lemma corpus")

    p = sub.add_parser("table", parents=[common], help="Constructions against density bounds")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("catalog", parents=[common], help="List or show catalog graphs")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")

    p = sub.add_parser("reproduce", parents=[common], help="Run the acceptance suites")
    p.add_argument("--suites-dir", type=str, help="Suite directory (default: POSCODEG_SUITES_DIR)")
    p.add_argument("--suite", action="append", help="Only run this suite (file stem); repeatable")
    p.add_argument("--budget", type=int)
    p.add_argument("--skip-slow", action="store_true", help="Skip cases marked slow")
    p.add_argument("--save", action="store_true", help="Save suite results")

    p = sub.add_parser("compare", parents=[common], help="Compare two saved suite runs")
    p.add_argument("result1", help="First result file")
    p.add_argument("result2", help="Second result file")

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse argv and dispatch

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err_console.print(str(e), highlight=False, markup=False)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    out = Output(args.json, args.quiet)
    try:
        args.jobs = resolve_jobs(args.jobs)
        if getattr(args, "budget", None) is None and args.command == "search":
            args.budget = get_settings().node_budget
        if args.command == "verify" and args.lemma in ("h6-congruence", "classification") and args.n is None:
            raise UsageError(f"verify {args.lemma} needs --n")
        if args.command == "verify" and args.lemma == "dichotomy" and args.F is None:
            raise UsageError("verify dichotomy needs -F")
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        err_console.print(f"Error: {e}", highlight=False, markup=False)
        return EXIT_USAGE
    except InfeasibleError as e:
        err_console.print(f"Infeasible: {e}", highlight=False, markup=False)
        return EXIT_INFEASIBLE
    except (PoscodegError, FileNotFoundError) as e:
        err_console.print(f"Error: {e}", highlight=False, markup=False)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
