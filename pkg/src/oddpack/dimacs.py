"""Reading and writing the edge-list exchange format.

The accepted dialect: one ``p edge <n> <m>`` header, ``e <u> <v>`` lines with
1-indexed endpoints, ``c ...`` comment lines anywhere.  Loops, duplicate
edges, out-of-range endpoints and malformed lines are rejected with the
offending line number.
"""

from __future__ import annotations

from .graphs import Graph

__all__ = ["DimacsError", "parse_dimacs", "format_dimacs"]


class DimacsError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsError("second problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsError("problem line must read 'p edge <n> <m>'", lineno)
            try:
                n, declared = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsError("problem line counts must be integers", lineno) from None
            if n < 0 or declared < 0:
                raise DimacsError("problem line counts must be nonnegative", lineno)
        elif fields[0] == "e":
            if n is None:
                raise DimacsError("edge before problem line", lineno)
            if len(fields) != 3:
                raise DimacsError("edge line must read 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise DimacsError(f"loop at vertex {u}", lineno)
            e = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if e in edges:
                raise DimacsError(f"duplicate edge {u} {v}", lineno)
            edges.add(e)
        else:
            raise DimacsError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line", 1)
    if len(edges) != declared:
        raise DimacsError(
            f"header declares {declared} edges but {len(edges)} were given",
            len(text.splitlines()) or 1)
    return Graph(n, frozenset(edges))


def format_dimacs(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"
