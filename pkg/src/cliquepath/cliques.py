"""Exact clique counts ``N_1..N_omega`` and the neighbourhood double-counting sum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, DomainError
from .graph import Graph, neighborhood_subgraph, to_graph6

DEFAULT_CLIQUE_BUDGET = 10**9


@dataclass(frozen=True)
class CliqueProfile:
    counts: tuple[int, ...]  # counts[j-1] = N_j

    @property
    def omega(self) -> int:
        return len(self.counts)

    def count(self, j: int) -> int:
        """``N_j``; zero outside ``1..omega`` (``N_0`` is taken as 1)."""
        if j == 0:
            return 1
        if 1 <= j <= len(self.counts):
            return self.counts[j - 1]
        return 0

    def to_json(self) -> dict:
        return {"omega": self.omega, "counts": [str(c) for c in self.counts]}

    @classmethod
    def from_json(cls, data: dict) -> CliqueProfile:
        counts = tuple(int(c) for c in data["counts"])
        if len(counts) != data["omega"]:
            raise DomainError("omega does not match the number of counts")
        return cls(counts)


def clique_profile(g: Graph, budget: int = DEFAULT_CLIQUE_BUDGET) -> CliqueProfile:
    counts = np.zeros(_kernels.MAX_DEPTH, dtype=np.int64)
    if g.n == 0:
        return CliqueProfile(())
    nodes = _kernels.count_cliques(g.adj_array, np.int64(g.vertices), budget, counts)
    if nodes < 0:
        raise BudgetExceeded(f"clique enumeration exceeded {budget} nodes on {to_graph6(g)}")
    vals = [int(c) for c in counts[1:]]
    omega = max((j for j, c in enumerate(vals, start=1) if c), default=0)
    return CliqueProfile(tuple(vals[:omega]))


def neighborhood_clique_sum(g: Graph, k: int, budget: int = DEFAULT_CLIQUE_BUDGET) -> int:
    """Sum over vertices ``x`` of ``N_{k-1}`` of the subgraph induced by ``N(x)``.

    Each k-clique is seen once from each of its k vertices, so the result
    equals ``k * N_k(g)``.
    """
    if k < 2:
        raise DomainError("k must be at least 2")
    total = 0
    for x in range(g.n):
        total += clique_profile(neighborhood_subgraph(g, x), budget).count(k - 1)
    return total
