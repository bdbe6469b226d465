"""GF(2) matrices as lists of int row bitsets, and the cut-rank function."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

from .graph import Graph, as_mask, iter_bits


@dataclass(frozen=True)
class Gf2Matrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        bound = 1 << self.ncols
        for i, row in enumerate(self.rows):
            if row < 0 or row >= bound:
                raise ValueError(f"row {i} has bits outside {self.ncols} columns")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "Gf2Matrix":
        """Column ``j`` of a 0/1 list row maps to bit ``j``."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        bits = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            bits.append(sum(1 << j for j, x in enumerate(row) if x & 1))
        return cls(tuple(bits), ncols)


def gf2_rank(m: Gf2Matrix | Iterable[int]) -> int:
    """Rank over GF(2) by XOR elimination, pivoting on each row's lowest set bit."""
    rows = list(m.rows if isinstance(m, Gf2Matrix) else m)
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        low = pivot & -pivot
        rank += 1
        rows = [r ^ pivot if r & low else r for r in rows]
    return rank


def adjacency_submatrix(g: Graph, u: int | Iterable[int], w: int | Iterable[int]) -> Gf2Matrix:
    """A_g[u, w]: one row per vertex of ``u`` (increasing), columns = vertices of ``w``."""
    u, w = as_mask(u), as_mask(w)
    cols = list(iter_bits(w))
    rows = []
    for v in iter_bits(u):
        row = g.adj[v]
        rows.append(sum(1 << j for j, c in enumerate(cols) if row >> c & 1))
    return Gf2Matrix(tuple(rows), len(cols))


def cut_rank(g: Graph, u: int | Iterable[int]) -> int:
    """rho_g(u) = rank of A_g[u, V \\ u]."""
    u = as_mask(u) & g.vertices
    rest = g.vertices & ~u
    # column positions only matter up to a bijection, so the raw masks suffice
    return gf2_rank([g.adj[v] & rest for v in iter_bits(u)])


@njit(cache=True)
def _cut_rank_table(adj, n):
    size = 1 << n
    full = size - 1
    out = np.zeros(size, dtype=np.int8)
    rows = np.zeros(n, dtype=np.int64)
    for s in range(1, full):
        rest = full & ~s
        cnt = 0
        for v in range(n):
            if (s >> v) & 1:
                r = adj[v] & rest
                if r:
                    rows[cnt] = r
                    cnt += 1
        rank = 0
        for i in range(cnt):
            piv = rows[i]
            if piv == 0:
                continue
            low = piv & -piv
            rank += 1
            for j in range(i + 1, cnt):
                if rows[j] & low:
                    rows[j] ^= piv
        out[s] = rank
    return out


def cut_rank_table(g: Graph) -> np.ndarray:
    """rho_g(S) for every subset S, indexed by the bitmask of S."""
    if g.n == 0:
        return np.zeros(1, dtype=np.int8)
    return _cut_rank_table(np.array(g.adj, dtype=np.int64), g.n)
