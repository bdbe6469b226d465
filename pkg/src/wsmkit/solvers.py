"""Exact MinVC / MaxClq by branching over the signatures of a well-structured modulator."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable

from .config import LIMITS
from .errors import NotASplitGraph, SizeCapExceeded
from .graph import (
    Graph,
    complement,
    connected_components,
    induced_subgraph,
    is_clique,
    iter_bits,
    members,
    neighbors_of_set,
)
from .obstructions import ObstructionSet, find_obstruction, get_obstruction_set
from .split import frontier_of
from .wsm import wsn_search

VC, CLIQUE = "vc", "clique"
WSM_BRANCHING, LOW_RW_FALLBACK, CAP_FALLBACK = "wsm-branching", "low-rw-fallback", "cap-fallback"

MaskSolver = Callable[[Graph], int]


def _key(mask: int) -> tuple[int, list[int]]:
    return mask.bit_count(), members(mask)


def _lift(mask: int, old: list[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << old[i]
    return out


def _solve_on(g: Graph, part: int, solver: MaskSolver) -> int:
    """Run ``solver`` on ``g[part]`` and map the answer back to ``g``'s ids."""
    if not part:
        return 0
    h, _ = induced_subgraph(g, part)
    return _lift(solver(h), members(part))


# --- exact branch-and-bound ------------------------------------------------


def _check_bnb_cap(g: Graph) -> None:
    if g.n > LIMITS.max_bnb_n:
        raise SizeCapExceeded(f"{g.n} vertices exceeds the branch-and-bound cap {LIMITS.max_bnb_n}")


def _matching_bound(adj: tuple[int, ...], alive: int) -> int:
    size, free = 0, alive
    for v in iter_bits(alive):
        if free >> v & 1:
            nb = adj[v] & free & ~(1 << v)
            if nb:
                u = (nb & -nb).bit_length() - 1
                free &= ~(1 << v | 1 << u)
                size += 1
    return size


def bounded_rw_exact_vc(g: Graph) -> int:
    """Minimum vertex cover by degree branching (v, or all of N(v)) with a matching bound."""
    _check_bnb_cap(g)
    adj = g.adj
    if g.m == 0:
        return 0
    best = [g.vertices, g.n]

    def go(alive: int, cover: int, size: int) -> None:
        # forced moves: a degree-1 vertex is covered through its neighbour
        while True:
            pick = None
            top, top_deg = -1, 0
            for v in iter_bits(alive):
                d = (adj[v] & alive).bit_count()
                if d == 1:
                    pick = adj[v] & alive
                    break
                if d > top_deg:
                    top, top_deg = v, d
            if pick is None:
                break
            alive &= ~pick
            cover |= pick
            size += 1
        if top_deg == 0:
            if size < best[1]:
                best[0], best[1] = cover, size
            return
        if size + _matching_bound(adj, alive) >= best[1]:
            return
        v = top
        nb = adj[v] & alive
        go(alive & ~(1 << v), cover | 1 << v, size + 1)
        go(alive & ~nb & ~(1 << v), cover | nb, size + nb.bit_count())

    go(g.vertices, 0, 0)
    return best[0]


def bounded_rw_exact_clq(g: Graph) -> int:
    """Maximum clique by Bron-Kerbosch with Tomita pivoting and a size bound."""
    _check_bnb_cap(g)
    adj = g.adj
    best = [0]

    def better(c: int) -> bool:
        return _key(c)[0] > best[0].bit_count() or (
            c.bit_count() == best[0].bit_count() and members(c) < members(best[0])
        )

    def go(r: int, p: int, x: int) -> None:
        if not p and not x:
            if better(r):
                best[0] = r
            return
        if r.bit_count() + p.bit_count() < best[0].bit_count():
            return
        pivot = max(iter_bits(p | x), key=lambda u: (adj[u] & p).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            go(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        go(0, g.vertices, 0)
    return best[0]


# --- class solvers ---------------------------------------------------------


def split_partition(g: Graph) -> tuple[int, int]:
    """Clique / independent-set partition of a split graph from its degree sequence."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    size = 0
    for i, v in enumerate(order, start=1):
        if g.degree(v) >= i - 1:
            size = i
    clique = 0
    for v in order[:size]:
        clique |= 1 << v
    return clique, g.vertices & ~clique


def split_graph_min_vc(g: Graph) -> int:
    obstructions = get_obstruction_set("split-graphs")
    occ = find_obstruction(g, obstructions)
    if occ is not None:
        h = obstructions.obstructions[occ.index]
        name = ("2K2", "C4", "C5")[occ.index]
        raise NotASplitGraph(occ.embedding, f"{name} ({h.n} vertices)")
    if g.n == 0:
        return 0
    clique, indep = split_partition(g)
    if not is_clique(g, clique) or neighbors_of_set(g, indep) & indep:
        raise AssertionError("degree-sequence partition failed on a split graph")
    for v in iter_bits(clique):
        if not g.adj[v] & indep:
            return clique & ~(1 << v)
    return clique


def complement_clique_via_vc(g: Graph, vc_solver: MaskSolver = bounded_rw_exact_vc) -> int:
    """A maximum clique as the complement of a minimum cover of the complement graph."""
    if g.n == 0:
        return 0
    return g.vertices & ~vc_solver(complement(g))


@dataclass(frozen=True)
class ClassSolver:
    name: str
    solve_vc: MaskSolver
    solve_clq: MaskSolver


EXACT_SOLVER = ClassSolver("exact", bounded_rw_exact_vc, bounded_rw_exact_clq)

REGISTRY: dict[str, ClassSolver] = {
    # split graphs are closed under complement, so cliques reduce to covers
    "split-graphs": ClassSolver(
        "split-graphs", split_graph_min_vc, lambda h: complement_clique_via_vc(h, split_graph_min_vc)
    ),
}


def solver_for(f: ObstructionSet) -> ClassSolver:
    """The registered polynomial solver for ``f``, else the exact branch-and-bound."""
    return REGISTRY.get(f.name, EXACT_SOLVER)


# --- signature branching ---------------------------------------------------


@dataclass(frozen=True)
class Solution:
    problem: str
    vertices: int
    path: str
    signatures_explored: int
    k: int | None = None

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    def decide(self, m: int) -> bool:
        """Answer the decision version with target ``m``."""
        if m < 0:
            raise ValueError("m must be nonnegative")
        return self.size <= m if self.problem == VC else self.size >= m

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "size": self.size,
            "vertices": members(self.vertices),
            "path": self.path,
            "signatures_explored": self.signatures_explored,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Solution":
        verts = 0
        for v in data["vertices"]:
            verts |= 1 << int(v)
        if data["problem"] not in (VC, CLIQUE) or len(data["vertices"]) != data["size"]:
            raise ValueError("malformed solution")
        return cls(data["problem"], verts, data["path"], int(data["signatures_explored"]))


def _modulator_or_none(g: Graph, f: ObstructionSet, max_k: int | None):
    try:
        return wsn_search(g, f, max_k)
    except SizeCapExceeded:
        return None


def _check_class_input(g: Graph, part: int, f: ObstructionSet) -> None:
    if find_obstruction(g, f, part) is not None:
        raise AssertionError("class solver handed a graph outside its class")


def _vc_branching(g: Graph, modules: tuple[int, ...], f: ObstructionSet, solver: ClassSolver) -> tuple[int, int]:
    sides = []
    for x in modules:
        a = frontier_of(g, x)
        sides.append((a, neighbors_of_set(g, a) & ~x))
    best, explored = None, 0
    for choice in product((0, 1), repeat=len(modules)):
        explored += 1
        z = 0
        for (a, b), c in zip(sides, choice):
            z |= b if c else a
        cover = z
        for comp in connected_components(g, g.vertices & ~z):
            if any(comp & ~x == 0 for x in modules):
                cover |= _solve_on(g, comp, bounded_rw_exact_vc)
            else:
                _check_class_input(g, comp, f)
                cover |= _solve_on(g, comp, solver.solve_vc)
        if best is None or _key(cover) < _key(best):
            best = cover
    return best, explored


def _clq_branching(g: Graph, modules: tuple[int, ...], f: ObstructionSet, solver: ClassSolver) -> tuple[int, int]:
    x0 = g.vertices
    for x in modules:
        x0 &= ~x
    frontiers = [frontier_of(g, x) for x in modules]
    parts = [x0] + list(modules)
    best, explored = 0, 0

    def consider(c: int) -> None:
        nonlocal best
        if c.bit_count() > best.bit_count() or (c.bit_count() == best.bit_count() and members(c) < members(best)):
            best = c

    for s in range(1, 1 << len(parts)):
        explored += 1
        chosen = [i for i in range(len(parts)) if s >> i & 1]
        if len(chosen) == 1:
            i = chosen[0]
            if i == 0:
                _check_class_input(g, x0, f)
                consider(_solve_on(g, x0, solver.solve_clq))
            else:
                consider(_solve_on(g, parts[i], bounded_rw_exact_clq))
            continue
        mods = [i for i in chosen if i]
        fr = [frontiers[i - 1] for i in mods]
        # a module with an empty frontier cannot share a clique with any other part
        if any(a == 0 for a in fr):
            continue
        if any(not neighbors_of_set(g, fr[p]) & fr[q] for p in range(len(fr)) for q in range(p + 1, len(fr))):
            continue
        clique = 0
        if 0 in chosen:
            x0p = x0
            for a in fr:
                for v in iter_bits(a):
                    x0p &= g.adj[v]
            if not x0p:
                continue
            _check_class_input(g, x0p, f)
            clique |= _solve_on(g, x0p, solver.solve_clq)
        for a in fr:
            clique |= _solve_on(g, a, bounded_rw_exact_clq)
        consider(clique)
    return best, explored


def _solve(g: Graph, problem: str, f: ObstructionSet, solver: ClassSolver | None, max_k: int | None) -> Solution:
    solver = solver_for(f) if solver is None else solver
    fallback = bounded_rw_exact_vc if problem == VC else bounded_rw_exact_clq
    search = _modulator_or_none(g, f, max_k)
    if search is None:
        return Solution(problem, fallback(g), CAP_FALLBACK, 0)
    k = search.value
    if search.rankwidth <= k + 1:
        return Solution(problem, fallback(g), LOW_RW_FALLBACK, 0, k)
    branch = _vc_branching if problem == VC else _clq_branching
    found, explored = branch(g, search.modulator.modules, f, solver)
    return Solution(problem, found, WSM_BRANCHING, explored, k)


def min_vertex_cover(
    g: Graph, f: ObstructionSet, solver: ClassSolver | None = None, max_k: int | None = None
) -> Solution:
    return _solve(g, VC, f, solver, max_k)


def max_clique(
    g: Graph, f: ObstructionSet, solver: ClassSolver | None = None, max_k: int | None = None
) -> Solution:
    return _solve(g, CLIQUE, f, solver, max_k)


def solve(g: Graph, problem: str, f: ObstructionSet, solver: ClassSolver | None = None) -> Solution:
    if problem == VC:
        return min_vertex_cover(g, f, solver)
    if problem == CLIQUE:
        return max_clique(g, f, solver)
    raise ValueError(f"unknown problem {problem!r}")
