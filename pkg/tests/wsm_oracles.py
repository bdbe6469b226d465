"""Brute-force references for the ~_k relation and modulator parameters."""

from __future__ import annotations

from itertools import combinations

from oracles import induced_copies, modulator_ok, split_modules_oracle
from wsmkit.graph import Graph, as_mask
from wsmkit.rankdecomp import rankwidth_of


def small_modules(g: Graph, k: int) -> list[frozenset]:
    """Nonempty split-modules inducing rank-width at most k."""
    return sorted(
        (m for m in split_modules_oracle(g) if m and rankwidth_of(g, as_mask(m)) <= k),
        key=lambda m: (len(m), sorted(m)),
    )


def sim_classes_oracle(g: Graph, k: int) -> set[frozenset]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for m in small_modules(g, k):
        first, *rest = sorted(m)
        for u in rest:
            ra, rb = find(first), find(u)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(c) for c in groups.values()}


def wsm_exists_over_classes(g: Graph, k: int, obstructions, classes: list[frozenset]) -> bool:
    copies = induced_copies(g, obstructions)
    for size in range(k + 1):
        for pick in combinations(classes, size):
            if modulator_ok(copies, set().union(*pick)):
                return True
    return False


def wsn_oracle(g: Graph, obstructions) -> int:
    copies = induced_copies(g, obstructions)
    if not copies:
        return 0
    k = 1
    while True:
        mods = small_modules(g, k)
        for size in range(1, k + 1):
            for pick in combinations(mods, size):
                union = set().union(*pick)
                if sum(len(m) for m in pick) == len(union) and modulator_ok(copies, union):
                    return k
        k += 1
