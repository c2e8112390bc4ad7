"""Exact longest path, circumference, cycle spectrum and wheel subgraphs.

Graphs up to ``Limits.dp_cap`` vertices go through a subset DP over
``(vertex set, end vertex)``; up to ``Limits.bb_cap`` a depth-first branch
and bound with reachability pruning takes over; anything larger raises
``BudgetExceeded``. Path lengths count edges, ``P_l`` has ``l`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .errors import BudgetExceeded, DomainError
from .graph import Graph, connectivity_profile, members, neighborhood_subgraph, to_graph6
from .records import Theorem, Verdict


@dataclass(frozen=True)
class Limits:
    dp_cap: int = 18
    bb_cap: int = 24
    bb_budget: int = 10**8


DEFAULT_LIMITS = Limits()


@dataclass(frozen=True)
class PathCycleProfile:
    longest_path_edges: int
    circumference: int
    spectrum: frozenset[int]
    path_witness: tuple[int, ...]
    cycle_witness: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "longest_path_edges": self.longest_path_edges,
            "circumference": self.circumference,
            "spectrum": sorted(self.spectrum),
            "path_witness": list(self.path_witness),
            "cycle_witness": None if self.cycle_witness is None else list(self.cycle_witness),
        }


@dataclass(frozen=True)
class WheelWitness:
    """A path on ``l`` vertices inside ``N(center)``, i.e. a copy of ``P_l`` joined to ``K_1``."""

    center: int
    path: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.path)

    def to_json(self) -> dict:
        return {"center": self.center, "path": list(self.path), "l": self.l}


def _lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def _spectrum_set(mask: int) -> frozenset[int]:
    return frozenset(members(int(mask)))


def _from_tables(g: Graph) -> PathCycleProfile:
    size = 1 << g.n
    any_end = np.zeros(size, dtype=np.int64)
    low_end = np.zeros(size, dtype=np.int64)
    adj = g.adj_array
    _kernels.fill_path_tables(adj, g.n, any_end, low_end)
    longest, circ, spectrum = _kernels.summarize_tables(adj, g.n, any_end, low_end)

    counts = _popcounts(g.n)
    best = int(np.flatnonzero((any_end != 0) & (counts == longest + 1))[0])
    v = _lowbit(int(any_end[best]))
    path = [v]
    mask = best
    while mask & (mask - 1):
        mask ^= 1 << v
        v = _lowbit(int(any_end[mask]) & g.adj[v])
        path.append(v)

    cycle = None
    if circ:
        hits = np.flatnonzero((counts == circ) & ((low_end & _low_adj(g)) != 0))
        mask = int(hits[0])
        start = _lowbit(mask)
        v = _lowbit(int(low_end[mask]) & g.adj[start])
        cycle = [v]
        while mask & (mask - 1):
            mask ^= 1 << v
            v = _lowbit(int(low_end[mask]) & g.adj[v])
            cycle.append(v)
        cycle.reverse()
    return PathCycleProfile(int(longest), int(circ), _spectrum_set(spectrum), tuple(path),
                            None if cycle is None else tuple(cycle))


def _popcounts(n: int) -> np.ndarray:
    counts = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        counts[1 << b:2 << b] = counts[:1 << b] + 1
    return counts


def _low_adj(g: Graph) -> np.ndarray:
    out = np.zeros(1 << g.n, dtype=np.int64)
    for b in range(g.n):
        # sets whose least vertex is b: (odd multiple of 2^b)
        out[1 << b::2 << b] = g.adj[b]
    return out


def _from_search(g: Graph, limits: Limits) -> PathCycleProfile:
    adj = g.adj_array
    out = np.zeros(g.n, dtype=np.int64)
    longest, nodes = _kernels.longest_path_bb(adj, g.n, limits.bb_budget, out)
    if nodes < 0:
        raise BudgetExceeded(f"longest-path search exceeded {limits.bb_budget} nodes on {to_graph6(g)}")
    path = tuple(int(v) for v in out[:longest + 1])
    circ, nodes = _kernels.longest_cycle_bb(adj, g.n, limits.bb_budget, out)
    if nodes < 0:
        raise BudgetExceeded(f"circumference search exceeded {limits.bb_budget} nodes on {to_graph6(g)}")
    cycle = tuple(int(v) for v in out[:circ]) if circ else None
    spectrum, nodes = _kernels.cycle_spectrum_bb(adj, g.n, limits.bb_budget)
    if nodes < 0:
        raise BudgetExceeded(f"cycle-spectrum search exceeded {limits.bb_budget} nodes on {to_graph6(g)}")
    return PathCycleProfile(int(longest), int(circ), _spectrum_set(spectrum), path, cycle)


@lru_cache(maxsize=1024)
def path_cycle_profile(g: Graph, limits: Limits = DEFAULT_LIMITS) -> PathCycleProfile:
    if g.n == 0:
        return PathCycleProfile(0, 0, frozenset(), (), None)
    if g.n <= limits.dp_cap:
        prof = _from_tables(g)
    elif g.n <= limits.bb_cap:
        prof = _from_search(g, limits)
    else:
        raise BudgetExceeded(f"order {g.n} exceeds the exact-search cap {limits.bb_cap}")
    _check_witnesses(g, prof)
    return prof


def _check_witnesses(g: Graph, prof: PathCycleProfile) -> None:
    if not is_path(g, prof.path_witness) or len(prof.path_witness) != prof.longest_path_edges + 1:
        raise AssertionError(f"invalid path witness {prof.path_witness} on {to_graph6(g)}")
    if prof.circumference:
        cyc = prof.cycle_witness
        if (cyc is None or len(cyc) != prof.circumference or not is_path(g, cyc)
                or not g.has_edge(cyc[0], cyc[-1])):
            raise AssertionError(f"invalid cycle witness {cyc} on {to_graph6(g)}")
        if prof.circumference not in prof.spectrum or max(prof.spectrum) != prof.circumference:
            raise AssertionError(f"spectrum disagrees with circumference on {to_graph6(g)}")
    elif prof.spectrum:
        raise AssertionError(f"nonempty spectrum on acyclic {to_graph6(g)}")


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists distinct vertices with consecutive ones adjacent."""
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def longest_path(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[int, tuple[int, ...]]:
    if g.n < 1:
        raise DomainError("longest path needs at least one vertex")
    prof = path_cycle_profile(g, limits)
    return prof.longest_path_edges, prof.path_witness


def circumference(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[int, tuple[int, ...] | None]:
    prof = path_cycle_profile(g, limits)
    return prof.circumference, prof.cycle_witness


def cycle_spectrum(g: Graph, limits: Limits = DEFAULT_LIMITS) -> frozenset[int]:
    return path_cycle_profile(g, limits).spectrum


def max_wheel(g: Graph, limits: Limits = DEFAULT_LIMITS) -> WheelWitness | None:
    """Largest ``P_l v K_1``: the longest path found inside any vertex neighbourhood."""
    best = None
    for v in range(g.n):
        if not g.adj[v]:
            continue
        if best is not None and g.degree(v) <= best.l:
            continue
        _, local = longest_path(neighborhood_subgraph(g, v), limits)
        labels = members(g.adj[v])
        cand = WheelWitness(v, tuple(labels[i] for i in local))
        if best is None or cand.l > best.l:
            best = cand
    return best


def kopylov_lemma_check(g: Graph, path: Sequence[int], limits: Limits = DEFAULT_LIMITS) -> Verdict:
    """Longest cycle versus ``min(m + 1, d_P(x) + d_P(y))`` for a path with ends ``x``, ``y``.

    ``d_P(v)`` counts the neighbours of ``v`` on the path.
    """
    path = tuple(int(v) for v in path)
    params = {"path": list(path)}
    if not is_path(g, path) or len(path) < 2:
        return Verdict(Theorem.KOPYLOV_LEMMA, params, False, reason="not a path with at least one edge")
    if not connectivity_profile(g)[1]:
        return Verdict(Theorem.KOPYLOV_LEMMA, params, False, reason="graph is not 2-connected")
    on_path = 0
    for v in path:
        on_path |= 1 << v
    x, y = path[0], path[-1]
    dx = (g.adj[x] & on_path).bit_count()
    dy = (g.adj[y] & on_path).bit_count()
    bound = min(len(path), dx + dy)
    circ, cycle = circumference(g, limits)
    return Verdict(
        Theorem.KOPYLOV_LEMMA, params, True,
        bound=Fraction(bound), observed=circ,
        holds=circ >= bound, tight=circ == bound,
        witness={"cycle": list(cycle) if cycle else None, "d_P(x)": dx, "d_P(y)": dy},
    )
