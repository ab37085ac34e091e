"""Brute-force reference implementations.

Nothing here imports the package's search code: graphs are turned into
networkx graphs and every quantity is recomputed from its definition by
exhaustive enumeration. Keep inputs small.
"""

from __future__ import annotations

import itertools
import math
import random

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    return [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]


def simple_paths_from(h: nx.Graph, v: int, max_len: int):
    """Every simple path starting at v with at most max_len edges (including the trivial one)."""
    stack = [[v]]
    while stack:
        p = stack.pop()
        yield p
        if len(p) - 1 < max_len:
            for w in h[p[-1]]:
                if w not in p:
                    stack.append(p + [w])


def _cap(x, n):
    return n if x is None or x == math.inf else x


def greach(g, pos, v, k, l):
    """k-hop l-reach straight from the definition: enumerate simple paths from v."""
    h = to_nx(g)
    k, l = _cap(k, g.n), _cap(l, g.n)
    out = set()
    for p in simple_paths_from(h, v, l):
        u = p[-1]
        if any(pos[u] >= pos[x] for x in p[:-1]):
            continue
        hops, low = 0, pos[p[0]]
        for x in p[1:]:
            if pos[x] < low:
                hops += 1
                low = pos[x]
        if hops <= k:
            out.add(u)
    return out


def strong_reach(g, pos, v, l):
    """Shortest paths through vertices above v, then one step down."""
    h = to_nx(g)
    above = [x for x in h if pos[x] > pos[v]] + [v]
    dist = nx.single_source_shortest_path_length(h.subgraph(above), v, cutoff=max(0, _cap(l, g.n) - 1))
    out = {v}
    for w in dist:
        out.update(u for u in h[w] if pos[u] < pos[v])
    return out


def weak_reach(g, pos, v, l):
    """u is weakly reached when v reaches it inside the vertices not below u."""
    h = to_nx(g)
    l = _cap(l, g.n)
    out = set()
    for u in h:
        if pos[u] > pos[v]:
            continue
        sub = h.subgraph([x for x in h if pos[x] >= pos[u]])
        try:
            if nx.shortest_path_length(sub, v, u) <= l:
                out.add(u)
        except nx.NetworkXNoPath:
            pass
    return out


def subreach(g, pos, y, k):
    """Semi-weak reach: paths x..y of length <= k, x minimal, late vertices not below y."""
    h = to_nx(g)
    half = -(-k // 2)
    out = set()
    for p in simple_paths_from(h, y, k):
        z = p[::-1]  # z_0 = x, z_s = y
        x, s = z[0], len(z) - 1
        if any(pos[w] < pos[x] for w in z):
            continue
        if all(pos[z[i]] >= pos[y] for i in range(half, s + 1)):
            out.add(x)
    return out


def gcol_of(g, pos, k, l):
    return max((len(greach(g, pos, v, k, l)) for v in range(g.n)), default=0)


def exact_gcol(g, k, l):
    best = None
    for perm in itertools.permutations(range(g.n)):
        pos = [0] * g.n
        for i, v in enumerate(perm):
            pos[v] = i
        val = gcol_of(g, pos, k, l)
        best = val if best is None else min(best, val)
    return best if best is not None else 0


def is_cluster(h: nx.Graph, vertices) -> bool:
    sub = h.subgraph(vertices)
    return all(sub.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2 for c in nx.connected_components(sub))


def _set_partitions(n: int):
    """Restricted growth strings: each partition of range(n) exactly once."""
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield list(a)
            return
        for c in range(m + 1):
            a[i] = c
            yield from rec(i + 1, max(m, c + 1))

    if n == 0:
        yield []
    else:
        yield from rec(0, 0)


def subchromatic(g) -> int:
    """Minimum number of classes over all set partitions whose classes induce disjoint cliques."""
    h = to_nx(g)
    best = g.n
    for a in _set_partitions(g.n):
        k = max(a, default=-1) + 1
        if k >= best and g.n:
            continue
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(a):
            classes.setdefault(c, []).append(v)
        if all(is_cluster(h, vs) for vs in classes.values()):
            best = k
    return best


def chromatic(g) -> int:
    for k in range(0 if g.n == 0 else 1, g.n + 1):
        for colour in itertools.product(range(k), repeat=g.n):
            if all(colour[u] != colour[v] for u, v in g.edges()):
                return k
    return g.n


def treewidth(g) -> int:
    """Exact treewidth by the elimination-ordering subset recurrence (n <= ~14)."""
    h = to_nx(g)
    n = g.n
    if n == 0:
        return -1

    def q(s: frozenset, v: int) -> int:
        # vertices outside s + v reachable from v through s
        seen = {v}
        stack = [v]
        found = set()
        while stack:
            x = stack.pop()
            for w in h[x]:
                if w in seen:
                    continue
                seen.add(w)
                if w in s:
                    stack.append(w)
                else:
                    found.add(w)
        return len(found)

    tw = {frozenset(): -1}
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = frozenset(combo)
            tw[s] = min(max(tw[s - {v}], q(s - {v}, v)) for v in s)
    return tw[frozenset(range(n))]


def geodesics(g, allowed, a, b):
    h = to_nx(g).subgraph(allowed)
    try:
        return sorted(list(p) for p in nx.all_shortest_paths(h, a, b))
    except nx.NetworkXNoPath:
        return []


def girth(g):
    cycles = nx.minimum_cycle_basis(to_nx(g))
    return min((len(c) for c in cycles), default=math.inf)


def is_isometric_path_decomposition(g, parts) -> bool:
    """Parts partition V; each part is a shortest path in G minus the earlier parts."""
    h = to_nx(g)
    seen = set()
    for p in parts:
        if seen & set(p) or len(set(p)) != len(p):
            return False
        rest = h.subgraph(set(h) - seen)
        if any(not rest.has_edge(a, b) for a, b in zip(p, p[1:])):
            return False
        try:
            if nx.shortest_path_length(rest, p[0], p[-1]) != len(p) - 1:
                return False
        except nx.NetworkXNoPath:
            return False
        seen |= set(p)
    return seen == set(h)


def decomposition_width(g, parts) -> int:
    h = to_nx(g)
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    width = 0
    for i in range(len(parts)):
        later = [v for v in h if part_of[v] > i]
        for comp in nx.connected_components(h.subgraph(later)):
            adj = {part_of[w] for v in comp for w in h[v] if part_of[w] <= i}
            width = max(width, len(adj))
    return width
