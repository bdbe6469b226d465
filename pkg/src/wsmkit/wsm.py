"""The ~_k equivalence, k-well-structured modulators and the two parameters wsn / mod."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .config import LIMITS
from .errors import PreconditionViolation, SizeCapExceeded
from .graph import Graph, as_mask, connected_components, induced_subgraph, iter_bits, lowest, members
from .obstructions import ObstructionSet, find_obstruction
from .rankdecomp import RankDecomposition, rankwidth, rankwidth_of
from .split import (
    SplitModule,
    enumerate_split_modules,
    frontier_of,
    is_split_module,
    minimal_split_modules_containing,
)


def require_high_rankwidth(g: Graph, k: int) -> int:
    """Raise unless rw(g) >= k + 2; returns rw(g)."""
    rw = rankwidth_of(g)
    if rw <= k + 1:
        raise PreconditionViolation(f"~_{k} needs rank-width >= {k + 2}, graph has rank-width {rw}")
    return rw


# --- the equivalence -------------------------------------------------------


def _witness_module(g: Graph, k: int, v: int, w: int) -> int | None:
    """A split-module of rank-width <= k holding v and w, if one exists."""
    if v == w:
        return 1 << v
    comps = connected_components(g)
    if not any(c >> v & 1 and c >> w & 1 for c in comps):
        return None
    for module in minimal_split_modules_containing(g, v, w):
        if rankwidth_of(g, module.vertices) <= k:
            return module.vertices
    return None


def sim_k_decide(g: Graph, k: int, v: int, w: int, check: bool = True) -> bool:
    if not (0 <= v < g.n and 0 <= w < g.n):
        raise ValueError("v and w must be vertices of g")
    if check:
        require_high_rankwidth(g, k)
    return _witness_module(g, k, v, w) is not None


@dataclass(frozen=True)
class EquivalenceClasses:
    k: int
    classes: tuple[int, ...]
    frontiers: tuple[int, ...]
    witnesses: tuple[RankDecomposition, ...]

    def class_of(self, v: int) -> int:
        for c in self.classes:
            if c >> v & 1:
                return c
        raise KeyError(v)

    def to_json(self) -> dict:
        return {"k": self.k, "classes": [members(c) for c in self.classes]}


def sim_k_classes(g: Graph, k: int) -> EquivalenceClasses:
    """Partition V(g) into ~_k classes by union-find over pairwise decisions."""
    require_high_rankwidth(g, k)
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for comp in connected_components(g):
        verts = members(comp)
        for i, v in enumerate(verts):
            for w in verts[i + 1:]:
                if find(v) == find(w):
                    continue
                module = _witness_module(g, k, v, w)
                if module is not None:
                    # everything in a witness module is equivalent to v
                    for u in iter_bits(module):
                        union(v, u)
    groups: dict[int, int] = {}
    for v in range(g.n):
        groups[find(v)] = groups.get(find(v), 0) | 1 << v
    classes = tuple(sorted(groups.values(), key=lowest))
    witnesses = []
    for c in classes:
        width, dec = rankwidth(induced_subgraph(g, c)[0])
        if width > k:
            raise AssertionError(f"class {members(c)} has rank-width {width} > {k}")
        witnesses.append(dec)
    return EquivalenceClasses(k, classes, tuple(frontier_of(g, c) for c in classes), tuple(witnesses))


# --- modulators ------------------------------------------------------------


@dataclass(frozen=True)
class WellStructuredModulator:
    k: int
    modules: tuple[int, ...]
    target: str

    @property
    def union(self) -> int:
        out = 0
        for m in self.modules:
            out |= m
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "modules": [members(m) for m in self.modules], "class": self.target}

    @classmethod
    def from_json(cls, data: dict) -> "WellStructuredModulator":
        return cls(int(data["k"]), tuple(as_mask(m) for m in data["modules"]), str(data["class"]))


def _wsm(k: int, modules: Iterable[int], f: ObstructionSet) -> WellStructuredModulator:
    return WellStructuredModulator(k, tuple(sorted(modules, key=lowest)), f.name)


def _branch_classes(g: Graph, k: int, f: ObstructionSet, classes: tuple[int, ...], alive: int) -> list[int] | None:
    occ = find_obstruction(g, f, alive)
    if occ is None:
        return []
    if k == 0:
        return None
    hit = occ.vertices
    for c in classes:
        if c & alive and c & hit:
            rest = _branch_classes(g, k - 1, f, classes, alive & ~c)
            if rest is not None:
                return rest + [c]
    return None


def find_wsm(
    g: Graph, k: int, f: ObstructionSet, classes: EquivalenceClasses | None = None
) -> WellStructuredModulator | None:
    """A k-well-structured modulator to F-free graphs, or None if none exists (needs rw >= k+2)."""
    if classes is None:
        classes = sim_k_classes(g, k)
    elif classes.k != k:
        raise ValueError("equivalence classes were computed for a different k")
    else:
        require_high_rankwidth(g, k)
    found = _branch_classes(g, k, f, classes.classes, g.vertices)
    return None if found is None else _wsm(k, found, f)


@dataclass(frozen=True)
class WsmCheck:
    ok: bool
    reason: str | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_wsm(g: Graph, cand: WellStructuredModulator, f: ObstructionSet) -> WsmCheck:
    """Verify the three modulator conditions plus disjointness; report the first failure."""
    if len(cand.modules) > cand.k:
        return WsmCheck(False, "too-many-modules", f"{len(cand.modules)} modules for k={cand.k}")
    seen = 0
    for m in cand.modules:
        if m & ~g.vertices:
            return WsmCheck(False, "not-in-graph", str(members(m)))
        if m & seen:
            return WsmCheck(False, "overlap", str(members(m & seen)))
        seen |= m
    for m in cand.modules:
        if is_split_module(g, m) is None:
            return WsmCheck(False, "not-split-module", str(members(m)))
        width = rankwidth_of(g, m)
        if width > cand.k:
            return WsmCheck(False, "rank-width", f"{members(m)} has rank-width {width}")
    occ = find_obstruction(g, f, g.vertices & ~seen)
    if occ is not None:
        return WsmCheck(False, "not-modulator", f"obstruction {occ.index} at {sorted(occ.embedding.values())}")
    return WsmCheck(True)


def as_split_modules(g: Graph, wsm: WellStructuredModulator) -> list[SplitModule]:
    out = []
    for m in wsm.modules:
        module = is_split_module(g, m)
        if module is None:
            raise ValueError(f"{members(m)} is not a split-module")
        out.append(module)
    return out


# --- parameters ------------------------------------------------------------


def _hit_with_modules(
    g: Graph, f: ObstructionSet, candidates: list[int], budget: int, removed: int
) -> list[int] | None:
    occ = find_obstruction(g, f, g.vertices & ~removed)
    if occ is None:
        return []
    if budget == 0:
        return None
    hit = occ.vertices
    for m in candidates:
        if m & hit and not m & removed:
            rest = _hit_with_modules(g, f, candidates, budget - 1, removed | m)
            if rest is not None:
                return rest + [m]
    return None


def _wsm_exhaustive(g: Graph, k: int, f: ObstructionSet) -> WellStructuredModulator | None:
    """Exact k-wsm search over all split-modules; used when rw(g) = k + 1."""
    small = mod_size(g, f, cap=k)
    if small is not None:
        return _wsm(k, [1 << v for v in iter_bits(small[1])], f)
    candidates = [m for m in enumerate_split_modules(g) if m and rankwidth_of(g, m) <= k]
    found = _hit_with_modules(g, f, candidates, k, 0)
    return None if found is None else _wsm(k, found, f)


@dataclass(frozen=True)
class WsnResult:
    value: int
    modulator: WellStructuredModulator
    regime: str  # "f-free", "find-wsm", "exhaustive" or "whole-graph"
    rankwidth: int


def wsn_search(g: Graph, f: ObstructionSet, max_k: int | None = None) -> WsnResult:
    """Smallest k admitting a k-wsm, with one witness and how it was obtained."""
    max_k = LIMITS.max_wsn_k if max_k is None else max_k
    if find_obstruction(g, f) is None:
        return WsnResult(0, _wsm(0, [], f), "f-free", rankwidth_of(g))
    rw = rankwidth_of(g)
    k = 1
    while True:
        if rw <= k:
            # {V(g)} is a k-wsm as soon as rw(g) <= k
            return WsnResult(k, _wsm(k, [g.vertices], f), "whole-graph", rw)
        if k > max_k:
            raise SizeCapExceeded(f"wsn search exceeds the k cap {max_k}")
        if rw >= k + 2:
            found, regime = find_wsm(g, k, f), "find-wsm"
        else:
            found, regime = _wsm_exhaustive(g, k, f), "exhaustive"
        if found is not None:
            return WsnResult(k, found, regime, rw)
        k += 1


def wsn(g: Graph, f: ObstructionSet) -> int:
    return wsn_search(g, f).value


def _branch_vertices(g: Graph, f: ObstructionSet, budget: int, removed: int) -> int | None:
    occ = find_obstruction(g, f, g.vertices & ~removed)
    if occ is None:
        return removed
    if budget == 0:
        return None
    for v in sorted(occ.embedding.values()):
        found = _branch_vertices(g, f, budget - 1, removed | 1 << v)
        if found is not None:
            return found
    return None


def mod_size(g: Graph, f: ObstructionSet, cap: int | None = None) -> tuple[int, int] | None:
    """(size, witness mask) of a minimum modulator; None if larger than an explicit ``cap``.

    With the default cap, running past ``LIMITS.max_modulator`` raises instead.
    """
    limit = LIMITS.max_modulator if cap is None else cap
    for size in range(limit + 1):
        found = _branch_vertices(g, f, size, 0)
        if found is not None:
            return size, found
    if cap is not None:
        return None
    raise SizeCapExceeded(f"no modulator of size <= {limit}")
