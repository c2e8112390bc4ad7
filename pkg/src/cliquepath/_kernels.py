"""Compiled inner loops over ``int64`` adjacency bitsets.

Everything here is allocation-light and returns plain numbers or fills
caller-provided arrays; the public modules wrap these with validation,
witnesses and budget errors. A negative node count means the work budget
ran out.
"""

import numpy as np
from numba import njit

MAX_DEPTH = 64

# Column layout of the batch fact table produced by ``analyze_masks``.
COL_N = 0
COL_M = 1
COL_MINDEG = 2
COL_CONNECTED = 3
COL_TWO_CONNECTED = 4
COL_OMEGA = 5
COL_COUNTS = 6  # N_1..N_7
COL_LONGEST = 13
COL_CIRCUMFERENCE = 14
COL_SPECTRUM = 15  # bit t set iff a t-cycle exists
COL_WHEEL = 16
COL_NBR_SUMS = 17  # sum_x N_{k-1}(G_x) for k = 2..8
N_COLS = 24
BATCH_MAX_ORDER = 7


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def lowbit_index(x):
    # x must be nonzero
    i = 0
    if not x & 0xFFFFFFFF:
        x >>= 32
        i += 32
    if not x & 0xFFFF:
        x >>= 16
        i += 16
    if not x & 0xFF:
        x >>= 8
        i += 8
    if not x & 0xF:
        x >>= 4
        i += 4
    if not x & 0x3:
        x >>= 2
        i += 2
    if not x & 0x1:
        i += 1
    return i


@njit(cache=True)
def reach(adj, start, allowed):
    """Vertices of ``allowed`` reachable from ``start`` through ``allowed`` (``start`` excluded)."""
    seen = np.int64(0)
    frontier = adj[start] & allowed
    while frontier:
        seen |= frontier
        nxt = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[lowbit_index(low)]
            f ^= low
        frontier = nxt & allowed & ~seen
    return seen


@njit(cache=True)
def is_connected(adj, alive):
    if alive == 0:
        return False
    s = lowbit_index(alive)
    return (reach(adj, s, alive) | (np.int64(1) << s)) == alive


@njit(cache=True)
def is_two_connected(adj, n):
    if n < 3:
        return False
    full = (np.int64(1) << n) - 1
    if not is_connected(adj, full):
        return False
    for v in range(n):
        if not is_connected(adj, full & ~(np.int64(1) << v)):
            return False
    return True


@njit(cache=True)
def count_cliques(adj, root, budget, counts):
    """Add the number of j-cliques inside ``root`` to ``counts[j]`` (``counts[0]`` gets the empty clique).

    Each clique is reached once, by adding vertices in increasing order.
    Returns the number of search nodes, or -1 past ``budget``.
    """
    stack = np.zeros(MAX_DEPTH, dtype=np.int64)
    stack[0] = root
    counts[0] += 1
    nodes = 1
    depth = 0
    while depth >= 0:
        c = stack[depth]
        if c == 0:
            depth -= 1
            continue
        low = c & -c
        rest = c ^ low
        stack[depth] = rest
        depth += 1
        stack[depth] = rest & adj[lowbit_index(low)]
        counts[depth] += 1
        nodes += 1
        if nodes > budget:
            return -1
    return nodes


@njit(cache=True)
def fill_path_tables(adj, n, any_end, low_end):
    """Subset DP over vertex sets.

    ``any_end[S]`` holds the possible end vertices of paths visiting exactly
    ``S``; ``low_end[S]`` the same for paths that start at the least vertex
    of ``S``.
    """
    full = np.int64(1) << n
    any_end[:] = 0
    low_end[:] = 0
    for v in range(n):
        any_end[np.int64(1) << v] = np.int64(1) << v
        low_end[np.int64(1) << v] = np.int64(1) << v
    for mask in range(1, full):
        e = any_end[mask]
        if e:
            for u in range(n):
                bit = np.int64(1) << u
                if not mask & bit and adj[u] & e:
                    any_end[mask | bit] |= bit
        e = low_end[mask]
        if e:
            lo = lowbit_index(mask)
            for u in range(lo + 1, n):
                bit = np.int64(1) << u
                if not mask & bit and adj[u] & e:
                    low_end[mask | bit] |= bit


@njit(cache=True)
def summarize_tables(adj, n, any_end, low_end):
    """Return ``(longest path edges, circumference, spectrum bitmask)`` from filled tables."""
    longest = 0
    circ = 0
    spectrum = np.int64(0)
    full = np.int64(1) << n
    for mask in range(1, full):
        if any_end[mask]:
            k = popcount(mask)
            if k - 1 > longest:
                longest = k - 1
            if k >= 3 and low_end[mask] & adj[lowbit_index(mask)]:
                spectrum |= np.int64(1) << k
                if k > circ:
                    circ = k
    return longest, circ, spectrum


@njit(cache=True)
def longest_path_bb(adj, n, budget, out):
    """Depth-first branch and bound; ``out`` receives a longest path.

    Returns ``(edges, nodes)`` with ``nodes == -1`` on budget exhaustion.
    """
    full = (np.int64(1) << n) - 1
    path = np.zeros(max(n, 1), dtype=np.int64)
    cand = np.zeros(max(n, 1), dtype=np.int64)
    best = -1
    nodes = 0
    for s in range(n):
        comp = reach(adj, s, full)
        if popcount(comp) <= best:
            continue
        if best < 0:
            best = 0
            out[0] = s
        path[0] = s
        visited = np.int64(1) << s
        cand[0] = adj[s]
        depth = 0
        while depth >= 0:
            nodes += 1
            if nodes > budget:
                return best, -1
            c = cand[depth] & ~visited
            if c == 0:
                visited ^= np.int64(1) << path[depth]
                depth -= 1
                continue
            low = c & -c
            cand[depth] = c ^ low
            u = lowbit_index(low)
            nv = visited | low
            r = popcount(reach(adj, u, full & ~nv))
            if depth + 1 + r <= best:
                continue
            depth += 1
            path[depth] = u
            visited = nv
            cand[depth] = adj[u]
            if depth > best:
                best = depth
                for i in range(depth + 1):
                    out[i] = path[i]
                if best == n - 1:
                    return best, nodes
    return best, nodes


@njit(cache=True)
def longest_cycle_bb(adj, n, budget, out):
    """Longest cycle by depth-first search from each least vertex; ``out`` receives it.

    Returns ``(length, nodes)``; length 0 for forests.
    """
    path = np.zeros(max(n, 1), dtype=np.int64)
    cand = np.zeros(max(n, 1), dtype=np.int64)
    best = 0
    nodes = 0
    for s in range(n):
        allowed = ((np.int64(1) << n) - 1) & ~((np.int64(1) << s) - 1)
        if popcount(allowed) <= best:
            break
        sbit = np.int64(1) << s
        path[0] = s
        visited = sbit
        cand[0] = adj[s] & allowed
        depth = 0
        while depth >= 0:
            nodes += 1
            if nodes > budget:
                return best, -1
            c = cand[depth] & ~visited
            if c == 0:
                visited ^= np.int64(1) << path[depth]
                depth -= 1
                continue
            low = c & -c
            cand[depth] = c ^ low
            u = lowbit_index(low)
            nv = visited | low
            r = popcount(reach(adj, u, allowed & ~nv))
            if depth + 2 + r <= best:
                continue
            depth += 1
            path[depth] = u
            visited = nv
            cand[depth] = adj[u] & allowed
            if depth >= 2 and adj[u] & sbit and depth + 1 > best:
                best = depth + 1
                for i in range(depth + 1):
                    out[i] = path[i]
                if best == n:
                    return best, nodes
    return best, nodes


@njit(cache=True)
def cycle_spectrum_bb(adj, n, budget):
    """Bitmask of cycle lengths, pruning branches that cannot add a new length."""
    path = np.zeros(max(n, 1), dtype=np.int64)
    cand = np.zeros(max(n, 1), dtype=np.int64)
    found = np.int64(0)
    nodes = 0
    for s in range(n):
        allowed = ((np.int64(1) << n) - 1) & ~((np.int64(1) << s) - 1)
        size = popcount(allowed)
        if size < 3:
            break
        wanted = ((np.int64(1) << (size + 1)) - 1) & ~np.int64(7)
        if wanted & ~found == 0:
            continue
        sbit = np.int64(1) << s
        path[0] = s
        visited = sbit
        cand[0] = adj[s] & allowed
        depth = 0
        while depth >= 0:
            nodes += 1
            if nodes > budget:
                return found, -1
            c = cand[depth] & ~visited
            if c == 0:
                visited ^= np.int64(1) << path[depth]
                depth -= 1
                continue
            low = c & -c
            cand[depth] = c ^ low
            u = lowbit_index(low)
            nv = visited | low
            if depth >= 1 and adj[u] & sbit:
                found |= np.int64(1) << (depth + 2)
            r = popcount(reach(adj, u, allowed & ~nv))
            if r == 0:
                continue
            # lengths still reachable by extending past u: depth+3 .. depth+2+r
            lo = depth + 3
            hi = depth + 2 + r
            span = ((np.int64(1) << (hi + 1)) - 1) & ~((np.int64(1) << lo) - 1)
            if span & ~found == 0:
                continue
            depth += 1
            path[depth] = u
            visited = nv
            cand[depth] = adj[u] & allowed
    return found, nodes


@njit(cache=True)
def analyze_masks(n, masks, pair_i, pair_j, out):
    """Fill one fact row of ``out`` per edge bitmask in ``masks`` (``n <= 7``)."""
    full = (np.int64(1) << n) - 1
    size = np.int64(1) << n
    any_end = np.zeros(size, dtype=np.int64)
    low_end = np.zeros(size, dtype=np.int64)
    adj = np.zeros(n, dtype=np.int64)
    counts = np.zeros(MAX_DEPTH, dtype=np.int64)
    ncounts = np.zeros(MAX_DEPTH, dtype=np.int64)
    npairs = pair_i.shape[0]
    for g in range(masks.shape[0]):
        mask = masks[g]
        adj[:] = 0
        for k in range(npairs):
            if mask >> k & 1:
                adj[pair_i[k]] |= np.int64(1) << pair_j[k]
                adj[pair_j[k]] |= np.int64(1) << pair_i[k]
        row = out[g]
        row[:] = 0
        row[COL_N] = n
        row[COL_M] = popcount(mask)
        mindeg = n
        for v in range(n):
            d = popcount(adj[v])
            if d < mindeg:
                mindeg = d
        row[COL_MINDEG] = mindeg if n > 0 else 0
        row[COL_CONNECTED] = 1 if is_connected(adj, full) else 0
        row[COL_TWO_CONNECTED] = 1 if is_two_connected(adj, n) else 0

        counts[:] = 0
        count_cliques(adj, full, np.int64(1) << 62, counts)
        omega = 0
        for j in range(1, n + 1):
            row[COL_COUNTS + j - 1] = counts[j]
            if counts[j] > 0:
                omega = j
        row[COL_OMEGA] = omega

        ncounts[:] = 0
        for x in range(n):
            count_cliques(adj, adj[x], np.int64(1) << 62, ncounts)
        for k in range(2, n + 2):
            row[COL_NBR_SUMS + k - 2] = ncounts[k - 1]

        fill_path_tables(adj, n, any_end, low_end)
        longest, circ, spectrum = summarize_tables(adj, n, any_end, low_end)
        row[COL_LONGEST] = longest
        row[COL_CIRCUMFERENCE] = circ
        row[COL_SPECTRUM] = spectrum

        wheel = 0
        for v in range(n):
            nb = adj[v]
            sub = nb
            while sub:
                if any_end[sub]:
                    k = popcount(sub)
                    if k > wheel:
                        wheel = k
                sub = (sub - 1) & nb
        row[COL_WHEEL] = wheel
