"""
HG v1 text format and its JSON mirror

HG v1:
    n m r
    v1 v2 v3        (m lines, 0-based vertices)

JSON:
    {"n": n, "r": r, "edges": [[...], ...]}
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

from .core import Hypergraph, make_hypergraph
from .errors import FormatError, HypergraphError


def format_hg(H: Hypergraph) -> str:
    """Serialize to HG v1; edges in lexicographic order"""
    lines = [f"{H.n} {H.m} {H.r}"]
    lines.extend(" ".join(str(v) for v in e) for e in H.edges)
    return "\n".join(lines) + "\n"


def parse_hg(text: str) -> Hypergraph:
    """Parse HG v1 text; blank lines and # comments are skipped"""
    rows = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((number, line))
    if not rows:
        raise FormatError("empty input")

    header_line, header = rows[0]
    try:
        n, m, r = (int(tok) for tok in header.split())
    except ValueError:
        raise FormatError(f"header must be 'n m r', got {header!r}", header_line)

    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges but {len(body)} edge lines follow", header_line)

    edges = []
    for number, line in body:
        try:
            edge = [int(tok) for tok in line.split()]
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", number)
        if len(edge) != r:
            raise FormatError(f"expected {r} vertices, got {len(edge)}", number)
        edges.append(edge)

    try:
        return make_hypergraph(n, r, edges)
    except HypergraphError as e:
        line = body[e.edge_index][0] if e.edge_index is not None else None
        raise FormatError(str(e), line)


def to_json_dict(H: Hypergraph) -> Dict[str, Any]:
    return {"n": H.n, "r": H.r, "edges": [list(e) for e in H.edges]}


def from_json_dict(data: Dict[str, Any]) -> Hypergraph:
    if not isinstance(data, dict):
        raise FormatError("JSON hypergraph must be an object")
    missing = [key for key in ("n", "edges") if key not in data]
    if missing:
        raise FormatError(f"JSON hypergraph missing keys: {missing}")
    try:
        return make_hypergraph(int(data["n"]), int(data.get("r", 3)), data["edges"])
    except (HypergraphError, TypeError) as e:
        raise FormatError(f"invalid JSON hypergraph: {e}")


def format_json(H: Hypergraph) -> str:
    return json.dumps(to_json_dict(H), sort_keys=True) + "\n"


def parse_text(text: str) -> Hypergraph:
    """Parse either format, detected by the first non-blank character"""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON: {e.msg}", e.lineno)
        return from_json_dict(data)
    return parse_hg(text)


def load_hypergraph(path: Union[str, Path]) -> Hypergraph:
    with open(path, "r") as f:
        return parse_text(f.read())


def save_hypergraph(H: Hypergraph, path: Union[str, Path], as_json: bool = False) -> Path:
    path = Path(path)
    path.write_text(format_json(H) if as_json else format_hg(H))
    return path
