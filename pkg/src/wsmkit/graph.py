"""Simple undirected graphs with bitset adjacency rows.

Vertices are the dense indices ``0..n-1``. A vertex set is an ``int`` bitmask
(bit ``v`` set means ``v`` is a member); every public function that takes a
vertex set also accepts any iterable of vertex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

VertexSet = int


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def as_mask(vertices: int | Iterable[int]) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighbors_of_set(g: Graph, a: int | Iterable[int]) -> int:
    """N(a): vertices outside ``a`` adjacent to some vertex of ``a``."""
    a = as_mask(a)
    out = 0
    for v in iter_bits(a):
        out |= g.adj[v]
    return out & ~a


def induced_subgraph(g: Graph, a: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``g[a]`` reindexed densely (in increasing order) and the old->new map."""
    old = members(as_mask(a))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in iter_bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                row |= 1 << j
        adj.append(row)
    return Graph(len(old), tuple(adj)), index


def delete_vertices(g: Graph, a: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``g - a`` with the old->new index map."""
    return induced_subgraph(g, g.vertices & ~as_mask(a))


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    within = g.vertices if within is None else within
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Components of ``g`` (or of ``g[within]``), ordered by smallest vertex."""
    rest = g.vertices if within is None else as_mask(within)
    comps = []
    while rest:
        comp = component_of(g, lowest(rest), rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    within = g.vertices if within is None else within
    if not within:
        return True
    return component_of(g, lowest(within), within) == within


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def contains_induced(g: Graph, h: Graph, within: int | None = None) -> dict[int, int] | None:
    """Find an induced copy of ``h`` in ``g`` (restricted to ``within``).

    Returns a map ``V(h) -> V(g)`` or ``None``. Exhaustive backtracking that
    checks both adjacency and non-adjacency for every assigned pair.
    """
    pool = g.vertices if within is None else as_mask(within)
    if h.n == 0:
        return {}
    if h.n > pool.bit_count():
        return None
    # connected-first order so adjacency constraints prune early
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        rest = h.vertices & ~placed
        touching = rest & neighbors_of_set(h, placed) if placed else 0
        cand = touching or rest
        v = max(iter_bits(cand), key=lambda x: (h.adj[x].bit_count(), -x))
        order.append(v)
        placed |= 1 << v
    degs = [h.adj[v].bit_count() for v in range(h.n)]
    img = [-1] * h.n

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        x = order[i]
        cand = pool & ~used
        for j in range(i):
            y = order[j]
            if h.adj[x] >> y & 1:
                cand &= g.adj[img[y]]
            else:
                cand &= ~g.adj[img[y]]
            if not cand:
                return False
        for u in iter_bits(cand):
            if (g.adj[u] & pool).bit_count() < degs[x]:
                continue
            img[x] = u
            if extend(i + 1, used | 1 << u):
                return True
        img[x] = -1
        return False

    if extend(0, 0):
        return {x: img[x] for x in range(h.n)}
    return None


def canonical_form(g: Graph) -> tuple[tuple[int, int], ...]:
    """Lexicographically smallest sorted edge list over all relabelings (tiny graphs only)."""
    from itertools import permutations

    best = None
    edges = g.edges()
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def is_vertex_cover(g: Graph, cover: int | Iterable[int]) -> bool:
    cover = as_mask(cover)
    return all(cover >> u & 1 or cover >> v & 1 for u, v in g.edges())


def is_clique(g: Graph, clique: int | Iterable[int]) -> bool:
    clique = as_mask(clique)
    return all(g.adj[u] & clique == clique & ~(1 << u) for u in iter_bits(clique))


# Small named graphs used for obstructions and tests.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
