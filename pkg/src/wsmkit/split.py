"""Splits, split-modules and split trees (reduced graph-labeled trees).

A :class:`SplitTree` here is a graph-labeled *forest*: one tree per connected
component of the host graph, isolated vertices being bare leaves. Leaves are
the host vertex ids ``0..n-1``; marker vertices get ids ``>= n``. ``link``
pairs every endpoint with the one across its tree edge, so a leaf maps to the
marker it is associated with and a marker maps to a leaf or another marker.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import DisconnectedGraphError, StructureError
from .graph import (
    Graph,
    as_mask,
    connected_components,
    induced_subgraph,
    is_connected,
    iter_bits,
    lowest,
    members,
    neighbors_of_set,
)

PRIME, CLIQUE, STAR, MIXED = "prime", "clique", "star", "mixed"
DEGENERATE = (CLIQUE, STAR)


# --- splits and split-modules ---------------------------------------------


@dataclass(frozen=True)
class Split:
    a: int
    b: int
    frontier_a: int
    frontier_b: int

    @property
    def nontrivial(self) -> bool:
        return self.a.bit_count() >= 2 and self.b.bit_count() >= 2


@dataclass(frozen=True)
class SplitModule:
    vertices: int
    component: int | None
    frontier: int

    def members(self) -> list[int]:
        return members(self.vertices)


def _split_within(g: Graph, a: int, b: int) -> Split | None:
    fa = neighbors_of_set(g, b) & a
    fb = neighbors_of_set(g, a) & b
    for x in iter_bits(fa):
        if g.adj[x] & b != fb:
            return None
    return Split(a, b, fa, fb)


def is_split(g: Graph, a: int | Iterable[int]) -> Split | None:
    """Return the split ``{a, V \\ a}`` of the connected graph ``g``, or ``None``."""
    if not is_connected(g):
        raise DisconnectedGraphError("splits are defined for connected graphs")
    a = as_mask(a)
    if not a or a & ~g.vertices or a == g.vertices:
        raise ValueError("a must be a nonempty proper subset of V(g)")
    return _split_within(g, a, g.vertices & ~a)


def frontier_of(g: Graph, a: int) -> int:
    """Vertices of ``a`` with a neighbor outside ``a``."""
    return neighbors_of_set(g, g.vertices & ~a) & a


def is_split_module(g: Graph, a: int | Iterable[int]) -> SplitModule | None:
    a = as_mask(a)
    if a & ~g.vertices:
        raise ValueError("a must be a subset of V(g)")
    if a == 0 or a == g.vertices:
        comps = connected_components(g)
        comp = 0 if a and len(comps) == 1 else None
        return SplitModule(a, comp, 0)
    for i, comp in enumerate(connected_components(g)):
        if comp & a:
            if a & ~comp:
                return None
            if a == comp:
                return SplitModule(a, i, 0)
            split = _split_within(g, a, comp & ~a)
            if split is None:
                return None
            return SplitModule(a, i, split.frontier_a)
    raise AssertionError("unreachable")


def find_nontrivial_split(g: Graph) -> int | None:
    """Some side ``A`` of a non-trivial split of the connected graph ``g``.

    For an oriented edge ``(a, b)`` and a further vertex ``x``, the smallest
    side containing ``a`` and ``x`` with ``a`` on the frontier and ``b`` across
    is a closure: a vertex ``u`` on the ``a`` side must see either nothing on
    the far side (if ``u`` misses ``b``) or exactly what ``a`` sees (if ``u``
    sees ``b``), which forces the offending vertices onto the ``a`` side.
    """
    n = g.n
    if n < 4:
        return None
    full = g.vertices
    adj = g.adj
    for a in range(n):
        na = adj[a]
        for b in iter_bits(na):
            for x in range(n):
                if x == a or x == b:
                    continue
                side = (1 << a) | (1 << x)
                work = side
                ok = True
                while work:
                    u = lowest(work)
                    work &= work - 1
                    force = (adj[u] ^ na) if adj[u] >> b & 1 else adj[u]
                    new = force & ~side
                    if new >> b & 1:
                        ok = False
                        break
                    side |= new
                    work |= new
                if not ok:
                    continue
                if (full & ~side).bit_count() >= 2:
                    return side
    return None


# --- graph-labeled trees ---------------------------------------------------


@dataclass(frozen=True)
class LabelNode:
    kind: str
    markers: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    center: int | None = None

    def adjacency(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {q: set() for q in self.markers}
        for x, y in self.edges:
            out[x].add(y)
            out[y].add(x)
        return out

    def as_graph(self) -> tuple[Graph, list[int]]:
        index = {q: i for i, q in enumerate(self.markers)}
        return Graph.from_edges(len(self.markers), ((index[x], index[y]) for x, y in self.edges)), list(self.markers)


def _edge(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


def classify_label(markers: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[str, int | None]:
    """Tag a label graph as clique, star (with its center), prime or mixed."""
    markers = tuple(sorted(markers))
    edges = frozenset(_edge(x, y) for x, y in edges)
    d = len(markers)
    deg = {q: 0 for q in markers}
    for x, y in edges:
        deg[x] += 1
        deg[y] += 1
    if len(edges) == d * (d - 1) // 2:
        return CLIQUE, None
    if len(edges) == d - 1:
        centers = [q for q in markers if deg[q] == d - 1]
        if centers:
            return STAR, centers[0]
    node = LabelNode(MIXED, markers, edges)
    h, _ = node.as_graph()
    if is_connected(h) and find_nontrivial_split(h) is None:
        return PRIME, None
    return MIXED, None


def _is_degenerate(h: Graph) -> bool:
    m = h.m
    if m == h.n * (h.n - 1) // 2:
        return True
    return m == h.n - 1 and any(h.degree(v) == h.n - 1 for v in range(h.n))


def make_label(markers: Iterable[int], edges: Iterable[tuple[int, int]]) -> LabelNode:
    markers = tuple(sorted(markers))
    edges = frozenset(_edge(x, y) for x, y in edges)
    kind, center = classify_label(markers, edges)
    return LabelNode(kind, markers, edges, center)


@dataclass(frozen=True)
class SplitTree:
    n: int
    nodes: dict[int, LabelNode] = field(hash=False)
    link: dict[int, int] = field(hash=False)

    def owner(self) -> dict[int, int]:
        return {q: u for u, node in self.nodes.items() for q in node.markers}

    def is_leaf(self, x: int) -> bool:
        return x < self.n

    def tree_edges(self) -> list[tuple[int, int]]:
        """Marker pairs joining two internal nodes."""
        return sorted((x, y) for x, y in self.link.items() if x < y and x >= self.n)

    def leaves_beyond(self) -> dict[int, int]:
        """For each marker ``q``: the leaf set on the far side of ``q``'s tree edge."""
        owner = self.owner()
        memo: dict[int, int] = {}

        def far(x: int) -> int:
            # leaves reachable from endpoint x without passing back through link[x]
            if x < self.n:
                return 1 << x
            if x in memo:
                return memo[x]
            out = 0
            for r in self.nodes[owner[x]].markers:
                if r != x:
                    out |= far(self.link[r])
            memo[x] = out
            return out

        return {q: far(self.link[q]) for q in owner}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [
                {
                    "id": u,
                    "kind": node.kind,
                    "center": node.center,
                    "markers": list(node.markers),
                    "label_edges": sorted(list(e) for e in node.edges),
                }
                for u, node in sorted(self.nodes.items())
            ],
            "edge_map": {str(q): self.link[q] for q in sorted(self.owner())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "SplitTree":
        n = int(data["n"])
        nodes = {}
        for item in data["nodes"]:
            center = item.get("center")
            nodes[int(item["id"])] = LabelNode(
                item["kind"],
                tuple(int(q) for q in item["markers"]),
                frozenset(_edge(int(x), int(y)) for x, y in item["label_edges"]),
                None if center is None else int(center),
            )
        link = {}
        for q, x in data["edge_map"].items():
            link[int(q)] = int(x)
            link[int(x)] = int(q)
        tree = cls(n, nodes, link)
        validate_tree(tree)
        return tree

    def to_dot(self, name: str = "ST") -> str:
        lines = [f"graph {name} {{", "  compound=true;"]
        for u, node in sorted(self.nodes.items()):
            lines.append(f"  subgraph cluster_{u} {{")
            lines.append(f'    label="{node.kind} #{u}";')
            for q in node.markers:
                shape = "doublecircle" if q == node.center else "circle"
                lines.append(f'    m{q} [label="", shape={shape}, width=0.15];')
            lines.extend(f"    m{x} -- m{y};" for x, y in sorted(node.edges))
            lines.append("  }")
        for v in range(self.n):
            lines.append(f'  v{v} [label="{v}", shape=box];')
        for x, y in sorted(self.link.items()):
            if x < y:
                a = f"v{x}" if x < self.n else f"m{x}"
                lines.append(f"  {a} -- m{y} [style=bold];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def validate_tree(t: SplitTree) -> None:
    owner: dict[int, int] = {}
    for u, node in t.nodes.items():
        for q in node.markers:
            if q < t.n:
                raise StructureError(f"marker id {q} collides with a leaf id")
            if q in owner:
                raise StructureError(f"marker {q} appears in two nodes")
            owner[q] = u
        for x, y in node.edges:
            if x not in node.markers or y not in node.markers:
                raise StructureError(f"label edge ({x}, {y}) leaves node {u}")
    for x, y in t.link.items():
        if t.link.get(y) != x:
            raise StructureError(f"link {x} -> {y} is not symmetric")
        if x >= t.n and x not in owner:
            raise StructureError(f"endpoint {x} is neither a leaf nor a marker")
    for q in owner:
        if q not in t.link:
            raise StructureError(f"marker {q} has no tree edge")
    for x in t.link:
        if x < t.n and t.link[x] < t.n:
            raise StructureError("two leaves linked directly")
    # acyclic: |tree edges| between internal nodes must form a forest
    parent = {u: u for u in t.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in t.tree_edges():
        rx, ry = find(owner[x]), find(owner[y])
        if rx == ry:
            raise StructureError("tree edges contain a cycle")
        parent[rx] = ry


def accessibility_graph(t: SplitTree) -> Graph:
    """Gr(T, F): leaves joined iff linked by a path alternating tree and label edges."""
    validate_tree(t)
    owner = t.owner()
    adjs = {u: node.adjacency() for u, node in t.nodes.items()}
    rows = [0] * t.n
    for v in range(t.n):
        q = t.link.get(v)
        if q is None:
            continue
        stack = [q]
        while stack:
            entry = stack.pop()
            for r in adjs[owner[entry]][entry]:
                x = t.link[r]
                if x < t.n:
                    rows[v] |= 1 << x
                else:
                    stack.append(x)
    return Graph(t.n, tuple(rows))


def _next_marker(t: SplitTree) -> int:
    return max([t.n - 1, *t.link.keys()]) + 1


def node_join(t: SplitTree, marker: int) -> SplitTree:
    """Merge the two internal nodes joined by the tree edge at ``marker``."""
    owner = t.owner()
    if marker not in owner:
        raise StructureError(f"{marker} is not a marker")
    other = t.link[marker]
    if other < t.n:
        raise StructureError("node_join needs a tree edge between two internal nodes")
    u, w = owner[marker], owner[other]
    nu, nw = t.nodes[u], t.nodes[w]
    au, aw = nu.adjacency(), nw.adjacency()
    edges = {e for e in nu.edges if marker not in e} | {e for e in nw.edges if other not in e}
    edges |= {_edge(x, y) for x in au[marker] for y in aw[other]}
    markers = [q for q in nu.markers if q != marker] + [q for q in nw.markers if q != other]
    nodes = {k: v for k, v in t.nodes.items() if k not in (u, w)}
    nodes[min(u, w)] = make_label(markers, edges)
    link = {k: v for k, v in t.link.items() if k not in (marker, other)}
    return SplitTree(t.n, nodes, link)


def node_split(t: SplitTree, node: int, part: Iterable[int]) -> tuple[SplitTree, int]:
    """Split ``node`` along the marker bipartition ``(part, rest)``.

    ``part`` must be one side of a split of the label with both sides of size
    at least 2 (every such bipartition qualifies for clique and star labels).
    Returns the new tree and the marker, kept in ``node``, of the new tree edge.
    """
    if node not in t.nodes:
        raise StructureError(f"unknown node {node}")
    label = t.nodes[node]
    part = set(part)
    rest = set(label.markers) - part
    if not part <= set(label.markers) or len(part) < 2 or len(rest) < 2:
        raise StructureError("node_split needs a marker bipartition with both sides of size >= 2")
    adj = label.adjacency()
    frontier_p = {x for x in part if adj[x] & rest}
    frontier_r = {y for y in rest if adj[y] & part}
    for x in frontier_p:
        if adj[x] & rest != frontier_r:
            raise StructureError("bipartition is not a split of the label")
    q1 = _next_marker(t)
    q2 = q1 + 1
    e1 = {e for e in label.edges if e[0] in part and e[1] in part} | {_edge(q1, x) for x in frontier_p}
    e2 = {e for e in label.edges if e[0] in rest and e[1] in rest} | {_edge(q2, y) for y in frontier_r}
    nodes = dict(t.nodes)
    nodes[node] = make_label(part | {q1}, e1)
    nodes[max(t.nodes) + 1] = make_label(rest | {q2}, e2)
    link = dict(t.link)
    link[q1], link[q2] = q2, q1
    return SplitTree(t.n, nodes, link), q1


def _joinable(t: SplitTree, q: int, owner: dict[int, int]) -> bool:
    r = t.link[q]
    a, b = t.nodes[owner[q]], t.nodes[owner[r]]
    if a.kind == CLIQUE and b.kind == CLIQUE:
        return True
    if a.kind == STAR and b.kind == STAR:
        return (a.center == q) != (b.center == r)
    return False


def is_reduced(t: SplitTree) -> bool:
    for node in t.nodes.values():
        kind, center = classify_label(node.markers, node.edges)
        if kind == MIXED or kind != node.kind:
            return False
        if kind == STAR and len(node.markers) > 2 and center != node.center:
            return False
    owner = t.owner()
    return not any(_joinable(t, q, owner) for q, _ in t.tree_edges())


def reduce_tree(t: SplitTree) -> SplitTree:
    """Apply clique-clique and center-to-leaf star-star node-joins until none remain."""
    while True:
        owner = t.owner()
        for q, _ in t.tree_edges():
            if _joinable(t, q, owner):
                t = node_join(t, q)
                break
        else:
            return t


def _build_component(g: Graph, comp: int, next_id: int, nodes: dict, link: dict) -> int:
    # pieces: (slot ids, local graph over slots); leaves are their own slot ids
    h, index = induced_subgraph(g, comp)
    pieces = [(sorted(index), h)]
    partner: dict[int, int] = {}
    finished: list[tuple[list[int], Graph]] = []
    while pieces:
        slots, piece = pieces.pop()
        side = None
        if piece.n >= 4 and not _is_degenerate(piece):
            side = find_nontrivial_split(piece)
        if side is None:
            finished.append((slots, piece))
            continue
        other = piece.vertices & ~side
        sa, sb = next_id, next_id + 1
        next_id += 2
        partner[sa], partner[sb] = sb, sa
        for keep, across, marker in ((side, other, sa), (other, side, sb)):
            frontier = neighbors_of_set(piece, across) & keep
            sub, sub_index = induced_subgraph(piece, keep)
            k = sub.n
            edges = sub.edges() + [(sub_index[x], k) for x in iter_bits(frontier)]
            new_slots = [slots[i] for i in sorted(sub_index)] + [marker]
            pieces.append((new_slots, Graph.from_edges(k + 1, edges)))
    for slots, piece in finished:
        markers = []
        for s in slots:
            if s < g.n:
                markers.append(next_id)
                link[next_id], link[s] = s, next_id
                next_id += 1
            else:
                markers.append(s)
                link[s] = partner[s]
        edges = [(markers[x], markers[y]) for x, y in piece.edges()]
        nodes[max(nodes, default=-1) + 1] = make_label(markers, edges)
    return next_id


@lru_cache(maxsize=4096)
def build_split_tree(g: Graph) -> SplitTree:
    """The reduced split forest of ``g``: one split tree per connected component."""
    nodes: dict[int, LabelNode] = {}
    link: dict[int, int] = {}
    next_id = g.n
    for comp in connected_components(g):
        if comp.bit_count() >= 2:
            next_id = _build_component(g, comp, next_id, nodes, link)
    return _renumber(reduce_tree(SplitTree(g.n, nodes, link)))


def _renumber(t: SplitTree) -> SplitTree:
    """Canonical ids: nodes ordered by smallest leaf reachable through them, markers densely."""
    beyond = t.leaves_beyond()

    def node_key(u):
        return sorted(lowest(beyond[q]) for q in t.nodes[u].markers)

    order = sorted(t.nodes, key=node_key)
    remap_node = {u: i for i, u in enumerate(order)}
    remap_marker = {}
    nxt = t.n
    for u in order:
        for q in sorted(t.nodes[u].markers, key=lambda q: lowest(beyond[q])):
            remap_marker[q] = nxt
            nxt += 1

    def m(x):
        return x if x < t.n else remap_marker[x]

    nodes = {}
    for u, node in t.nodes.items():
        nodes[remap_node[u]] = LabelNode(
            node.kind,
            tuple(sorted(m(q) for q in node.markers)),
            frozenset(_edge(m(x), m(y)) for x, y in node.edges),
            None if node.center is None else m(node.center),
        )
    link = {m(x): m(y) for x, y in t.link.items()}
    return SplitTree(t.n, nodes, link)


def canonical_tree(t: SplitTree, perm: list[int] | None = None) -> frozenset:
    """Id-free description of ``t``; ``perm`` renames leaves first."""
    beyond = t.leaves_beyond()

    def rename(mask: int) -> int:
        if perm is None:
            return mask
        return as_mask(perm[v] for v in iter_bits(mask))

    out = set()
    for node in t.nodes.values():
        sides = {q: rename(beyond[q]) for q in node.markers}
        out.add(
            (
                node.kind,
                frozenset(sides.values()),
                frozenset(frozenset((sides[x], sides[y])) for x, y in node.edges),
                None if node.center is None else sides[node.center],
            )
        )
    return frozenset(out)


def _component_of_leaf(g: Graph, v: int) -> tuple[int, int]:
    for i, comp in enumerate(connected_components(g)):
        if comp >> v & 1:
            return i, comp
    raise ValueError(f"vertex {v} not in graph")


def _tree_path(t: SplitTree, v: int, w: int) -> list[tuple[int, int, int]] | None:
    """Internal nodes between leaves ``v`` and ``w`` as (node, entry marker, exit marker)."""
    owner = t.owner()
    start = t.link.get(v)
    if start is None:
        return None
    # DFS over (entry marker) states; tree, so the path is unique
    stack = [(start, [])]
    while stack:
        entry, path = stack.pop()
        u = owner[entry]
        for q in t.nodes[u].markers:
            if q == entry:
                continue
            x = t.link[q]
            step = path + [(u, entry, q)]
            if x == w:
                return step
            if x >= t.n:
                stack.append((x, step))
    return None


def minimal_split_modules_containing(g: Graph, v: int, w: int) -> list[SplitModule]:
    """Inclusion-minimal split-modules containing both ``v`` and ``w``.

    Walk the split-tree path between the two leaves. A degenerate node on the
    path, split down to its entry, exit and one marker for everything else,
    contributes the module obtained by cutting off all its off-path branches;
    a prime node contributes one module per off-path branch.
    """
    if v == w:
        raise ValueError("v and w must be distinct")
    ci, comp = _component_of_leaf(g, v)
    if not comp >> w & 1:
        raise DisconnectedGraphError(f"{v} and {w} lie in different components")
    t = build_split_tree(g)
    beyond = t.leaves_beyond()
    modules = set()
    for u, entry, exit_ in _tree_path(t, v, w):
        node = t.nodes[u]
        off = [q for q in node.markers if q not in (entry, exit_)]
        if not off:
            continue
        if node.kind in DEGENERATE:
            cut = 0
            for q in off:
                cut |= beyond[q]
            modules.add(comp & ~cut)
        else:
            for q in off:
                modules.add(comp & ~beyond[q])
    if not modules:
        modules.add(comp)
    return [SplitModule(m, ci, frontier_of(g, m) if m != comp else 0) for m in sorted(modules)]


def tree_splits(t: SplitTree) -> set[int]:
    """Sides of every split read off ``t``: internal tree edges plus degenerate node-splits.

    Each split is reported once, by the side that contains the smaller vertex;
    only the leaves of the corresponding tree are involved.
    """
    beyond = t.leaves_beyond()
    owner = t.owner()
    out = set()

    def add(side: int, whole: int):
        other = whole & ~side
        out.add(side if lowest(side) < lowest(other) else other)

    comp_of_node: dict[int, int] = {}
    for u, node in t.nodes.items():
        whole = 0
        for q in node.markers:
            whole |= beyond[q]
        comp_of_node[u] = whole
    for q, _ in t.tree_edges():
        add(beyond[q], comp_of_node[owner[q]])
    for u, node in t.nodes.items():
        if node.kind not in DEGENERATE or len(node.markers) < 4:
            continue
        first, *others = node.markers
        d = len(node.markers)
        for size in range(1, d - 2):
            for extra in combinations(others, size):
                side = beyond[first]
                for q in extra:
                    side |= beyond[q]
                add(side, comp_of_node[u])
    return out


def enumerate_split_modules(g: Graph) -> list[int]:
    """Every split-module of ``g`` (as masks), read off the split forest."""
    t = build_split_tree(g)
    out = {0, g.vertices}
    for comp in connected_components(g):
        out.add(comp)
        for v in iter_bits(comp):
            out.add(1 << v)
            out.add(comp & ~(1 << v))
    comp_of = {}
    for comp in connected_components(g):
        for v in iter_bits(comp):
            comp_of[v] = comp
    for side in tree_splits(t):
        comp = comp_of[lowest(side)]
        out.add(side)
        out.add(comp & ~side)
    return sorted(out)
