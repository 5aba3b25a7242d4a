"""
Exception types shared across the package
"""

from typing import Optional, Tuple


class PoscodegError(Exception):
    """Base class for all package errors"""


class HypergraphError(PoscodegError, ValueError):
    """Malformed edge, vertex or vertex set"""

    def __init__(self, message: str, edge_index: Optional[int] = None):
        if edge_index is not None:
            message = f"edge {edge_index}: {message}"
        super().__init__(message)
        self.edge_index = edge_index


class CircleConfigurationError(HypergraphError):
    """Two circle points coincide or are antipodal"""

    def __init__(self, message: str, pair: Tuple[int, int]):
        super().__init__(f"{message} (points {pair[0]} and {pair[1]})")
        self.pair = pair


class UndefinedError(PoscodegError, ValueError):
    """Quantity is undefined for the given input (e.g. δ⁺ of an edgeless graph)"""


class InfeasibleError(PoscodegError):
    """Input exceeds a declared size cap"""


class UnknownGraphError(PoscodegError, KeyError):
    """Catalog or construction name not known"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown graph"


class FormatError(PoscodegError, ValueError):
    """Bad HG v1 or JSON hypergraph input"""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConfigError(PoscodegError, ValueError):
    """Invalid environment configuration"""
