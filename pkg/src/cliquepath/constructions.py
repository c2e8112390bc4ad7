"""Extremal graph families used as tightness certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import DomainError, UnsupportedSizeError
from .graph import MAX_ORDER, Graph


class Kind(enum.Enum):
    HNKC = "hnkc"
    DISJOINT_CLIQUES = "disjoint-cliques"
    SHARED_VERTEX_CLIQUES = "shared-cliques"
    CLIQUE_PLUS_PENDANTS = "clique-pendants"


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise UnsupportedSizeError(f"order {n} exceeds {MAX_ORDER}")


def build_hnkc(n: int, k: int, c: int) -> Graph:
    """``K_{c-k}`` on ``0..c-k-1`` plus ``n-(c-k)`` outside vertices each joined to ``0..k-1``."""
    if not c > k >= 1:
        raise DomainError(f"need c > k >= 1, got k={k}, c={c}")
    core = c - k
    if n < core:
        raise DomainError(f"need n >= c - k = {core}, got n={n}")
    if k > core:
        raise DomainError(f"attachment set of size {k} does not fit in K_{core}")
    _check_order(n)
    edges = [(i, j) for j in range(core) for i in range(j)]
    edges += [(a, v) for v in range(core, n) for a in range(k)]
    return Graph.from_edges(n, edges)


def build_disjoint_cliques(n: int, l: int) -> Graph:
    """``n/(l-1)`` disjoint copies of ``K_{l-1}``."""
    if l < 2 or n % (l - 1):
        raise DomainError(f"need l >= 2 and (l-1) | n, got n={n}, l={l}")
    _check_order(n)
    size = l - 1
    edges = [(b + i, b + j) for b in range(0, n, size) for j in range(size) for i in range(j)]
    return Graph.from_edges(n, edges)


def build_shared_vertex_cliques(n: int, l: int) -> Graph:
    """``(n-1)/(l-2)`` copies of ``K_{l-1}`` glued at vertex 0."""
    if l < 3 or (n - 1) % (l - 2) or n < 1:
        raise DomainError(f"need l >= 3 and (l-2) | (n-1), got n={n}, l={l}")
    _check_order(n)
    size = l - 2
    edges = []
    for b in range(1, n, size):
        block = [0, *range(b, b + size)]
        edges += [(block[i], block[j]) for j in range(len(block)) for i in range(j)]
    return Graph.from_edges(n, edges)


def build_clique_plus_pendants(n: int) -> Graph:
    """``K_{n-2}`` on ``0..n-3`` with two pendant vertices hanging off vertex 0."""
    if n < 5:
        raise DomainError(f"need n >= 5, got {n}")
    _check_order(n)
    edges = [(i, j) for j in range(n - 2) for i in range(j)]
    edges += [(0, n - 2), (0, n - 1)]
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    params: dict[str, int] = field(default_factory=dict)

    def build(self) -> Graph:
        p = self.params
        try:
            if self.kind is Kind.HNKC:
                return build_hnkc(p["n"], p["k"], p["c"])
            if self.kind is Kind.DISJOINT_CLIQUES:
                return build_disjoint_cliques(p["n"], p["l"])
            if self.kind is Kind.SHARED_VERTEX_CLIQUES:
                return build_shared_vertex_cliques(p["n"], p["l"])
            return build_clique_plus_pendants(p["n"])
        except KeyError as exc:
            raise DomainError(f"{self.kind.value} is missing parameter {exc.args[0]!r}") from None

    @property
    def inherited(self) -> dict[str, int]:
        """Parameters a theorem check can pick up from the construction (all but ``n``)."""
        return {k: v for k, v in self.params.items() if k != "n"}
