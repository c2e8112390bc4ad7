"""Brute-force reference computations, deliberately independent of the bitset kernels."""

from __future__ import annotations

from itertools import combinations

import numpy as np


def adjacency_lists(g) -> list[set[int]]:
    nbrs = [set() for _ in range(g.n)]
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def clique_counts(g) -> list[int]:
    """``[N_1, ..., N_omega]`` by testing every vertex subset."""
    nbrs = adjacency_lists(g)
    counts = []
    for size in range(1, g.n + 1):
        c = sum(1 for sub in combinations(range(g.n), size)
                if all(b in nbrs[a] for a, b in combinations(sub, 2)))
        if c == 0:
            break
        counts.append(c)
    return counts


def paths_and_cycles(g) -> tuple[int, int, set[int]]:
    """Longest path (edges), circumference and cycle lengths by walking every simple path."""
    nbrs = adjacency_lists(g)
    longest = 0
    lengths: set[int] = set()

    def walk(path: list[int], on: set[int]) -> None:
        nonlocal longest
        longest = max(longest, len(path) - 1)
        end = path[-1]
        if len(path) >= 3 and path[0] in nbrs[end]:
            lengths.add(len(path))
        for u in nbrs[end]:
            if u not in on:
                path.append(u)
                on.add(u)
                walk(path, on)
                on.discard(u)
                path.pop()

    for s in range(g.n):
        walk([s], {s})
    return longest, max(lengths, default=0), lengths


def two_connected(g) -> bool:
    def connected(keep: list[int]) -> bool:
        if not keep:
            return False
        nbrs = adjacency_lists(g)
        seen = {keep[0]}
        stack = [keep[0]]
        allowed = set(keep)
        while stack:
            v = stack.pop()
            for u in nbrs[v] & allowed:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == allowed

    verts = list(range(g.n))
    if g.n < 3 or not connected(verts):
        return False
    return all(connected([u for u in verts if u != v]) for v in verts)


def spectral_radius(g) -> float:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return float(np.linalg.eigvalsh(a)[-1]) if g.n else 0.0


def greedy_maximal_path(g, start: int) -> list[int]:
    """Extend from ``start`` by the smallest unused neighbour, then the same from the other end."""
    nbrs = adjacency_lists(g)
    path = [start]
    used = {start}
    for _ in range(2):
        while True:
            nxt = [u for u in nbrs[path[-1]] if u not in used]
            if not nxt:
                break
            u = min(nxt)
            path.append(u)
            used.add(u)
        path.reverse()
    return path
