"""Rank-decompositions and exact rank-width by subset dynamic programming.

``feasible_k(S)`` holds when ``S`` is a single vertex, or when ``S`` splits
into two nonempty parts that are both feasible and both have cut-rank at most
``k`` in the whole graph. Then ``rw(G) <= k`` iff ``feasible_k(V)``: the
rooted binary tree read off the witness partitions becomes a cubic tree once
the root is suppressed. The DP is run per connected component; component
trees are then chained together, since cuts between components have rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np
from numba import njit

from .config import LIMITS
from .errors import SizeCapExceeded, StructureError
from .gf2 import cut_rank, cut_rank_table
from .graph import Graph, as_mask, connected_components, induced_subgraph, iter_bits


@dataclass(frozen=True)
class RankDecomposition:
    """Unrooted subcubic tree plus the vertex -> leaf bijection.

    ``leaf_map[v]`` is the tree node holding vertex ``v``. Graphs with at most
    one vertex use the empty-tree convention (no edges).
    """

    edges: tuple[tuple[int, int], ...]
    leaf_map: tuple[int, ...]

    def nodes(self) -> set[int]:
        out = set(self.leaf_map)
        for a, b in self.edges:
            out.update((a, b))
        return out

    def to_json(self) -> dict:
        return {
            "edges": [list(e) for e in self.edges],
            "leaf_map": {str(v): node for v, node in enumerate(self.leaf_map)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "RankDecomposition":
        leaf = {int(v): int(node) for v, node in data["leaf_map"].items()}
        if sorted(leaf) != list(range(len(leaf))):
            raise StructureError("leaf_map keys must be the vertices 0..n-1")
        return cls(
            tuple((int(a), int(b)) for a, b in data["edges"]),
            tuple(leaf[v] for v in range(len(leaf))),
        )

    def to_dot(self, name: str = "T") -> str:
        lines = [f"graph {name} {{"]
        leaf_of = {node: v for v, node in enumerate(self.leaf_map)}
        for node in sorted(self.nodes()):
            if node in leaf_of:
                lines.append(f'  t{node} [label="{leaf_of[node]}", shape=box];')
            else:
                lines.append(f'  t{node} [label="", shape=point];')
        lines.extend(f"  t{a} -- t{b};" for a, b in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WidthReport:
    width: int
    widest_edge: tuple[int, int] | None


def _edge_sides(g: Graph, d: RankDecomposition) -> list[int]:
    """Validate ``d`` against ``g``; return, per edge, the vertex set on the ``b`` side."""
    n = g.n
    if len(d.leaf_map) != n:
        raise StructureError(f"decomposition has {len(d.leaf_map)} leaves, graph has {n} vertices")
    if len(set(d.leaf_map)) != n:
        raise StructureError("leaf_map is not injective")
    if n <= 1:
        if d.edges:
            raise StructureError("graphs with at most one vertex use the empty tree")
        return []
    nbrs: dict[int, list[int]] = {}
    for a, b in d.edges:
        if a == b:
            raise StructureError(f"loop at tree node {a}")
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    nodes = set(nbrs)
    leaves = set(d.leaf_map)
    if not leaves <= nodes:
        raise StructureError("some leaf is not a tree node")
    if len(d.edges) != len(nodes) - 1:
        raise StructureError("tree must have exactly |nodes| - 1 edges")
    for node, adj in nbrs.items():
        deg = len(adj)
        if node in leaves:
            if deg != 1:
                raise StructureError(f"leaf node {node} has degree {deg}")
        elif deg != 3:
            raise StructureError(f"internal node {node} has degree {deg}, expected 3")
    vertex_of = {node: v for v, node in enumerate(d.leaf_map)}
    # iterative DFS from one leaf: subtree vertex masks hanging below each node
    root = d.leaf_map[0]
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    if len(parent) != len(nodes):
        raise StructureError("tree is not connected")
    below = {x: 0 for x in nodes}
    for x in reversed(order):
        if x in vertex_of:
            below[x] |= 1 << vertex_of[x]
        p = parent[x]
        if p is not None:
            below[p] |= below[x]
    sides = []
    for a, b in d.edges:
        sides.append(below[b] if parent.get(b) == a else g.vertices & ~below[a])
    return sides


def decomposition_width(g: Graph, d: RankDecomposition) -> WidthReport:
    """Maximum cut-rank over the tree edges; ties go to the smallest edge index."""
    best, widest = 0, None
    for edge, side in zip(d.edges, _edge_sides(g, d)):
        w = cut_rank(g, side)
        if widest is None or w > best:
            best, widest = w, edge
    return WidthReport(best, widest)


@njit(cache=True)
def _min_width_kernel(cut, n):
    size = 1 << n
    w = np.full(size, 127, dtype=np.int8)
    for v in range(n):
        w[1 << v] = 0
    for s in range(1, size):
        if s & (s - 1) == 0:
            continue
        top = 1
        while top <= s:
            top <<= 1
        top >>= 1
        rest = s ^ top
        best = 127
        t = (0 - rest) & rest
        while t:
            u = s ^ t
            val = cut[t]
            if cut[u] > val:
                val = cut[u]
            if w[t] > val:
                val = w[t]
            if w[u] > val:
                val = w[u]
            if val < best:
                best = val
            t = (t - rest) & rest
        w[s] = best
    return w[size - 1]


@njit(cache=True)
def _feasible_kernel(cut, n, k):
    """choice[S] = lexicographically smallest witness part S1 of S, 0 for singletons, -1 if infeasible."""
    size = 1 << n
    choice = np.full(size, -1, dtype=np.int64)
    for v in range(n):
        choice[1 << v] = 0
    for s in range(1, size):
        if s & (s - 1) == 0:
            continue
        top = 1
        while top <= s:
            top <<= 1
        top >>= 1
        rest = s ^ top
        t = (0 - rest) & rest
        while t:
            u = s ^ t
            if cut[t] <= k and cut[u] <= k and choice[t] >= 0 and choice[u] >= 0:
                choice[s] = t
                break
            t = (t - rest) & rest
    return choice


def _check_cap(n: int, max_n: int | None) -> None:
    cap = LIMITS.max_exact_n if max_n is None else max_n
    if n > cap:
        raise SizeCapExceeded(f"component with {n} vertices exceeds the exact rank-width cap {cap}")


@lru_cache(maxsize=65536)
def _component_width(h: Graph) -> int:
    if h.n <= 1:
        return 0
    if h.m == 0:
        return 0
    if h.n == 2:
        return 1
    return int(_min_width_kernel(cut_rank_table(h), h.n))


@lru_cache(maxsize=8192)
def _component_choices(h: Graph, k: int) -> dict[int, int] | None:
    """Witness partitions (local masks) along the tree for ``feasible_k(V(h))``."""
    if h.n <= 1:
        return {}
    full = h.vertices
    choice = _feasible_kernel(cut_rank_table(h), h.n, k)
    if choice[full] < 0:
        return None
    out = {}
    stack = [full]
    while stack:
        s = stack.pop()
        if s & (s - 1) == 0:
            continue
        t = int(choice[s])
        out[s] = t
        stack.extend((t, s ^ t))
    return out


def _lift(mask: int, old: list[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << old[i]
    return out


def _tree_from_choices(n: int, choices: dict[int, int]) -> RankDecomposition:
    if n <= 1:
        return RankDecomposition((), tuple(range(n)))
    edges: list[tuple[int, int]] = []
    next_id = n

    def build(s: int) -> int:
        nonlocal next_id
        if s & (s - 1) == 0:
            return s.bit_length() - 1
        t = choices[s]
        node = next_id
        next_id += 1
        left, right = build(t), build(s ^ t)
        edges.append((node, left))
        edges.append((node, right))
        return node

    full = (1 << n) - 1
    t = choices[full]
    a, b = build(t), build(full ^ t)
    edges.append((a, b))
    return RankDecomposition(tuple(edges), tuple(range(n)))


def _components(g: Graph, max_n: int | None) -> list[tuple[int, Graph, list[int]]]:
    out = []
    for comp in connected_components(g):
        h, index = induced_subgraph(g, comp)
        _check_cap(h.n, max_n)
        out.append((comp, h, sorted(index)))
    return out


def _combine(g: Graph, parts: list[tuple[int, dict[int, int], list[int]]]) -> RankDecomposition:
    choices: dict[int, int] = {}
    for _, local, old in parts:
        for s, t in local.items():
            choices[_lift(s, old)] = _lift(t, old)
    acc = 0
    for comp, _, _ in parts:
        if acc:
            choices[acc | comp] = acc
        acc |= comp
    return _tree_from_choices(g.n, choices)


def rankwidth_at_most(
    g: Graph, k: int, max_n: int | None = None
) -> tuple[bool, RankDecomposition | None]:
    """Decide ``rw(g) <= k``; on success also return a witness of width <= k."""
    if k < 0:
        return False, None
    parts = []
    for comp, h, old in _components(g, max_n):
        if _component_width(h) > k:
            return False, None
        local = _component_choices(h, k)
        if local is None:
            return False, None
        parts.append((comp, local, old))
    return True, _combine(g, parts)


def rankwidth(g: Graph, max_n: int | None = None) -> tuple[int, RankDecomposition]:
    """Exact rank-width with an optimal decomposition (max over components)."""
    comps = _components(g, max_n)
    rw = max((_component_width(h) for _, h, _ in comps), default=0)
    parts = [(comp, _component_choices(h, rw), old) for comp, h, old in comps]
    return rw, _combine(g, parts)


def rankwidth_of(g: Graph, vertices: int | Iterable[int] | None = None, max_n: int | None = None) -> int:
    """Rank-width of ``g`` or of the induced subgraph ``g[vertices]`` (value only)."""
    if vertices is not None:
        g = induced_subgraph(g, as_mask(vertices))[0]
    comps = _components(g, max_n)
    return max((_component_width(h) for _, h, _ in comps), default=0)


def induced_rankwidth_at_most(g: Graph, vertices: int | Iterable[int], k: int, max_n: int | None = None) -> bool:
    return rankwidth_of(g, vertices, max_n) <= k
