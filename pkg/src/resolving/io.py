"""Plain-text edge-list serialization.

Format: the first non-comment line is the vertex count n; every following
non-comment line is an edge ``u v`` with 0 <= u < v < n. Lines whose first
non-blank character is ``#`` are comments; blank lines are ignored. The
canonical writer emits edges sorted lexicographically and ends with a
newline.
"""

from __future__ import annotations

from .errors import EdgeListParseError
from .graphs import build_graph


def parse_edge_list(text):
    """Parse edge-list text into a Graph."""
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise EdgeListParseError(line_no, "expected the vertex count alone")
            try:
                n = int(parts[0])
            except ValueError:
                raise EdgeListParseError(
                    line_no, f"vertex count is not an integer: {parts[0]!r}"
                ) from None
            if n < 1:
                raise EdgeListParseError(line_no, f"vertex count must be positive, got {n}")
            continue
        if len(parts) != 2:
            raise EdgeListParseError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < v < n):
            raise EdgeListParseError(
                line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}"
            )
        edges.append((u, v))
    if n is None:
        raise EdgeListParseError(1, "empty input: no vertex count line")
    return build_graph(n, edges)


def write_edge_list(g):
    """Canonical edge-list text for a graph (labels are not serialized)."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for (u, v) in sorted(g.edges()))
    return "\n".join(lines) + "\n"


def read_graph_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_graph_file(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_edge_list(g))
