"""
Positive co-degree Turán numbers of 3-graphs
"""

from .catalog import CATALOG, get, get_named, j_k, complete_multipartite
from .checks import CHECK_REGISTRY, run_checks
from .constructions import CONSTRUCTION_REGISTRY, build_construction
from .core import (
    Hypergraph,
    Partition,
    codegree,
    make_hypergraph,
    min_codegree,
    min_positive_codegree,
    positive_pairs,
)
from .embed import contains_copy, count_copies, count_embeddings, span_profile_ok
from .errors import (
    CircleConfigurationError,
    ConfigError,
    FormatError,
    HypergraphError,
    InfeasibleError,
    PoscodegError,
    UndefinedError,
    UnknownGraphError,
)
from .results import ResultsManager
from .runners import SuiteRunner
from .search import canonical_form, copex_exact, exists_with_delta, ff_classification_check

__all__ = [
    'CATALOG',
    'get',
    'get_named',
    'j_k',
    'complete_multipartite',
    'CHECK_REGISTRY',
    'run_checks',
    'CONSTRUCTION_REGISTRY',
    'build_construction',
    'Hypergraph',
    'Partition',
    'codegree',
    'make_hypergraph',
    'min_codegree',
    'min_positive_codegree',
    'positive_pairs',
    'contains_copy',
    'count_copies',
    'count_embeddings',
    'span_profile_ok',
    'CircleConfigurationError',
    'ConfigError',
    'FormatError',
    'HypergraphError',
    'InfeasibleError',
    'PoscodegError',
    'UndefinedError',
    'UnknownGraphError',
    'ResultsManager',
    'SuiteRunner',
    'canonical_form',
    'copex_exact',
    'exists_with_delta',
    'ff_classification_check',
]
