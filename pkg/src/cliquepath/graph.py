"""Immutable bitset graphs, graph6 / edge-list I/O and structural transforms.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set iff ``v`` is in the
set), which keeps intersections and unions cheap and makes every value
hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import DomainError, ParseError, UnsupportedSizeError

MAX_ORDER = 62

VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise UnsupportedSizeError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise DomainError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise UnsupportedSizeError(f"order {n} outside 0..{MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def min_degree(self) -> int:
        return min((row.bit_count() for row in self.adj), default=0)

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in members(self.adj[v] & ((1 << v) - 1)):
                yield u, v

    def with_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, [*self.edges(), (u, v)])

    @cached_property
    def adj_array(self) -> np.ndarray:
        """Adjacency rows as ``int64`` for the compiled kernels."""
        return np.array(self.adj, dtype=np.int64)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


# -- graph6 ---------------------------------------------------------------

def _pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 upper-triangle column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 record (``n <= 62``)."""
    data = text.rstrip("\r\n")
    if not data:
        raise ParseError("empty graph6 record", offset=0)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside graph6 range", offset=pos)
    n = ord(data[0]) - 63
    if n > MAX_ORDER:
        raise ParseError("long-form graph6 header is not supported", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated: expected {nbytes} data bytes", offset=len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 record", offset=1 + nbytes)
    adj = [0] * n
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=len(data) - 1)
    bits >>= pad
    k = nbits - 1
    for i, j in _pairs(n):
        if bits >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k -= 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise UnsupportedSizeError(f"order {g.n} exceeds {MAX_ORDER}")
    bits = []
    for i, j in _pairs(g.n):
        bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# -- edge list ------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    lines = text.splitlines()
    body = [(no, ln.split()) for no, ln in enumerate(lines, start=1) if ln.strip()]
    if not body:
        raise ParseError("missing vertex count", line=1)
    no, head = body[0]
    if len(head) != 1 or not _is_int(head[0]):
        raise ParseError("first line must hold the vertex count", line=no)
    n = int(head[0])
    if not 0 <= n <= MAX_ORDER:
        raise ParseError(f"vertex count {n} outside 0..{MAX_ORDER}", line=no)
    adj = [0] * n
    for no, toks in body[1:]:
        if len(toks) != 2 or not all(_is_int(t) for t in toks):
            raise ParseError("expected two integer vertex ids", line=no)
        u, v = int(toks[0]), int(toks[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", line=no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=no)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _is_int(tok: str) -> bool:
    return tok.lstrip("+-").isdigit()


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n), *(f"{u} {v}" for u, v in g.edges())]) + "\n"


# -- transforms -----------------------------------------------------------

def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled by ascending original index."""
    if s < 0 or s >> g.n:
        raise DomainError(f"vertex set has bits outside 0..{g.n - 1}")
    keep = members(s)
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), tuple(adj))


def neighborhood_subgraph(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} not in graph of order {g.n}")
    return induced_subgraph(g, g.adj[v])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` (``h`` shifted by ``g.n``) plus all cross edges."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise UnsupportedSizeError(f"join order {n} exceeds {MAX_ORDER}")
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    adj = [row | right for row in g.adj] + [(row << g.n) | left for row in h.adj]
    return Graph(n, tuple(adj))


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of the subgraph induced by ``within``."""
    rest = g.vertices if within is None else within
    comps = []
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(g: Graph, within: VertexSet | None = None) -> bool:
    return len(components(g, within)) <= 1


def connectivity_profile(g: Graph) -> tuple[bool, bool]:
    """``(connected, two_connected)``; 2-connected needs ``n >= 3`` and no cut vertex.

    The empty graph counts as disconnected.
    """
    if g.n == 0:
        return False, False
    connected = is_connected(g)
    if not connected or g.n < 3:
        return connected, False
    full = g.vertices
    two = all(is_connected(g, full & ~(1 << v)) for v in range(g.n))
    return connected, two


def disintegrate(g: Graph, alpha: int) -> tuple[Graph, VertexSet]:
    """Repeatedly strip vertices of degree ``<= alpha``; returns the core and its vertex set."""
    if alpha < 0:
        raise DomainError("alpha must be nonnegative")
    alive = g.vertices
    while True:
        doomed = 0
        for v in members(alive):
            if (g.adj[v] & alive).bit_count() <= alpha:
                doomed |= 1 << v
        if not doomed:
            break
        alive &= ~doomed
    return induced_subgraph(g, alive), alive


# -- named graphs ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_ORDER:
        raise UnsupportedSizeError(f"union order {n} exceeds {MAX_ORDER}")
    return Graph(n, g.adj + tuple(row << g.n for row in h.adj))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is the bitmask ``mask`` over graph6 pair order."""
    adj = [0] * n
    for k, (i, j) in enumerate(_pairs(n)):
        if mask >> k & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def pair_list(n: int) -> list[tuple[int, int]]:
    return list(_pairs(n))
