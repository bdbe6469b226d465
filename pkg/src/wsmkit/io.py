"""Graph file formats: 0-based edge lists, DIMACS, and DOT output."""

from __future__ import annotations

from pathlib import Path

from .errors import GraphParseError
from .graph import Graph


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v`` (0-based)."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphParseError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise GraphParseError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            header = (nums[0], nums[1], lineno)
            if nums[0] < 0 or nums[1] < 0:
                raise GraphParseError("negative count in header", lineno)
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at {u}", lineno)
        edges.append((u, v))
    if header is None:
        raise GraphParseError("missing 'n m' header")
    n, m, lineno = header
    if len(edges) != m:
        raise GraphParseError(f"header declares {m} edges, found {len(edges)}", lineno)
    return Graph.from_edges(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` (1-based) into a 0-based graph.

    Repeated edges (e.g. both orientations) are merged; the declared edge
    count is not enforced since DIMACS files disagree on how to count.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed problem line {line!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise GraphParseError("non-integer counts in problem line", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphParseError("non-integer endpoint", lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise GraphParseError(f"self-loop at {u + 1}", lineno)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge n m' line")
    return Graph.from_edges(n, edges)


def detect_format(path: str | Path, text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".col", ".dimacs", ".clq"):
        return "dimacs"
    if suffix in (".edges", ".el", ".txt"):
        return "edges"
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "dimacs" if line[0] in "cpe" else "edges"
    return "edges"


def load_graph(path: str | Path, fmt: str = "auto") -> Graph:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = detect_format(path, text)
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def format_dimacs(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def format_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_dict(data: dict | str) -> Graph:
    """Build a graph from ``{"n", "edges"}`` or from edge-list text."""
    if isinstance(data, str):
        return parse_edge_list(data)
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])
