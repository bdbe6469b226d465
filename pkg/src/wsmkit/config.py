"""Process-wide caps for the exponential exact computations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Limits:
    # largest connected component handed to the rank-width subset DP
    max_exact_n: int = 18
    # largest modulator size explored by mod_size
    max_modulator: int = 12
    # largest k tried by the wsn search before giving up
    max_wsn_k: int = 6
    # largest component solved by the exact branch-and-bound solvers
    max_bnb_n: int = 64


LIMITS = Limits()

