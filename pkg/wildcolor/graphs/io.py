"""
Reader and writer for the line-oriented .mg graph format.

    # comment
    p <n> <m>
    e <u> <v>      (exactly m times)
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

from wildcolor.core.exceptions import GraphFormatError, InputError
from wildcolor.core.logging import get_logger
from wildcolor.graphs.multigraph import MultiGraph

logger = get_logger(__name__)


def _parse_ints(tokens: List[str], line_number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphFormatError(
            f"expected integers, got {' '.join(tokens)!r}", line_number
        ) from None


def parse_graph(text: str) -> MultiGraph:
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    last_line = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header is None:
            if tokens[0] != "p" or len(tokens) != 3:
                raise GraphFormatError("expected header 'p <n> <m>'", line_number)
            n, m = _parse_ints(tokens[1:], line_number)
            if n < 0 or m < 0:
                raise GraphFormatError("vertex and edge counts must be nonnegative", line_number)
            header = (n, m)
            continue

        if tokens[0] != "e" or len(tokens) != 3:
            raise GraphFormatError("expected edge line 'e <u> <v>'", line_number)
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edges", line_number)
        u, v = _parse_ints(tokens[1:], line_number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n}", line_number)
        edges.append((u, v))

    if header is None:
        raise GraphFormatError("missing header 'p <n> <m>'", last_line or 1)
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"declared {m} edges, found {len(edges)}", last_line)
    return MultiGraph(n, edges)


def serialize_graph(graph: MultiGraph) -> str:
    lines = [f"p {graph.n} {graph.num_edges}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> MultiGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    graph = parse_graph(text)
    logger.debug("Loaded graph", extra={"path": str(path), "n": graph.n, "m": graph.num_edges})
    return graph


def write_graph(graph: MultiGraph, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_graph(graph), encoding="utf-8")
