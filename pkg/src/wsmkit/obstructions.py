"""Finite obstruction sets (forbidden induced subgraphs) and built-in classes."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .graph import (
    Graph,
    canonical_form,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    path_graph,
)
from .io import graph_from_dict, graph_to_dict


@dataclass(frozen=True)
class ObstructionSet:
    name: str
    obstructions: tuple[Graph, ...]

    def __post_init__(self):
        if not self.obstructions:
            raise ValueError("an obstruction set needs at least one graph")
        if any(h.n == 0 for h in self.obstructions):
            raise ValueError("obstructions must have at least one vertex")

    def to_json(self) -> dict:
        return {"name": self.name, "obstructions": [graph_to_dict(h) for h in self.obstructions]}

    @classmethod
    def from_json(cls, data: dict) -> "ObstructionSet":
        return cls(str(data["name"]), tuple(graph_from_dict(block) for block in data["obstructions"]))


@dataclass(frozen=True)
class Occurrence:
    """An induced copy of obstruction ``index``; ``embedding`` maps its vertices into the host."""

    index: int
    embedding: dict[int, int]

    @property
    def vertices(self) -> int:
        out = 0
        for v in self.embedding.values():
            out |= 1 << v
        return out


def find_obstruction(g: Graph, f: ObstructionSet, within: int | None = None) -> Occurrence | None:
    """First induced obstruction occurrence, scanning obstructions in list order."""
    for i, h in enumerate(f.obstructions):
        emb = contains_induced(g, h, within)
        if emb is not None:
            return Occurrence(i, emb)
    return None


def is_f_free(g: Graph, f: ObstructionSet, within: int | None = None) -> bool:
    return find_obstruction(g, f, within) is None


def _dedupe(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    seen = {}
    for h in graphs:
        seen.setdefault(canonical_form(h), h)
    return tuple(seen.values())


MAX_DEGREE_LIMIT = 4


def max_degree_obstructions(d: int) -> tuple[Graph, ...]:
    """All (d+2)-vertex graphs with a vertex adjacent to every other one, up to isomorphism.

    The enumeration is over 2^C(d+1, 2) graphs, so d is capped at MAX_DEGREE_LIMIT.
    """
    if not 0 <= d <= MAX_DEGREE_LIMIT:
        raise ValueError(f"max-degree class needs 0 <= d <= {MAX_DEGREE_LIMIT}, got {d}")
    n = d + 2
    spokes = [(0, i) for i in range(1, n)]
    others = list(combinations(range(1, n), 2))
    graphs = []
    for mask in range(1 << len(others)):
        extra = [others[j] for j in range(len(others)) if mask >> j & 1]
        graphs.append(Graph.from_edges(n, spokes + extra))
    return _dedupe(graphs)


def split_graphs() -> ObstructionSet:
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    return ObstructionSet("split-graphs", (two_k2, cycle_graph(4), cycle_graph(5)))


BUILTIN = {
    "split-graphs": split_graphs,
    "triangle-free": lambda: ObstructionSet("triangle-free", (complete_graph(3),)),
    "p5-free": lambda: ObstructionSet("p5-free", (path_graph(5),)),
    "edgeless": lambda: ObstructionSet("edgeless", (complete_graph(2),)),
}


def builtin_names() -> list[str]:
    return sorted(BUILTIN) + ["max-degree-<d>"]


def get_obstruction_set(name: str) -> ObstructionSet:
    if name in BUILTIN:
        return BUILTIN[name]()
    match = re.fullmatch(r"max-degree-(\d+)", name)
    if match:
        d = int(match.group(1))
        return ObstructionSet(name, max_degree_obstructions(d))
    raise KeyError(f"unknown graph class {name!r}; built-ins: {', '.join(builtin_names())}")


def load_obstruction_set(path: str | Path) -> ObstructionSet:
    return ObstructionSet.from_json(json.loads(Path(path).read_text()))
