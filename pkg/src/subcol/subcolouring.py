"""Clusterings of graph powers, the greedy subcolouring they induce, and an exact solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bounds import power_radius
from .errors import BudgetExceeded, GraphError
from .graph import Graph, bfs_distances, graph_power
from .orderings import VertexOrdering, gcol_of_ordering, semiweak_of_ordering


@dataclass(frozen=True)
class Clustering:
    """Blocks are numbered in increasing order of their representative."""

    block_of: tuple[int, ...]
    representative: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class Subcolouring:
    colour: tuple[int, ...]

    @property
    def palette(self) -> int:
        return len(set(self.colour))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colour):
            out.setdefault(c, []).append(v)
        return out


@dataclass(frozen=True)
class PowerStats:
    d: int
    l: int
    colours_used: int
    quotient_col: int
    semiweak_bound: int | None
    gcol_bound: int | None

    @property
    def chain_holds(self) -> bool:
        vals = [self.colours_used, self.quotient_col, self.semiweak_bound, self.gcol_bound]
        vals = [v for v in vals if v is not None]
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def as_dict(self) -> dict:
        return {
            "colours_used": self.colours_used,
            "quotient_col": self.quotient_col,
            "semiweak_bound": self.semiweak_bound,
            "gcol_bound": self.gcol_bound,
            "d": self.d,
            "l": self.l,
        }


def cluster(g: Graph, sigma: VertexOrdering, d: int) -> Clustering:
    """Group vertices by the sigma-least vertex within distance floor(d/2)."""
    if d < 1:
        raise GraphError("d must be positive")
    if sigma.n != g.n:
        raise GraphError("ordering and graph sizes differ")
    r = d // 2
    pos = sigma.position
    m = []
    for u in range(g.n):
        ball = bfs_distances(g, u, limit=r) if r else {u: 0}
        m.append(min(ball, key=pos.__getitem__))
    reps = sorted(set(m), key=pos.__getitem__)
    bid = {rep: i for i, rep in enumerate(reps)}
    block_of = tuple(bid[x] for x in m)
    members: list[list[int]] = [[] for _ in reps]
    for u, b in enumerate(block_of):
        members[b].append(u)
    return Clustering(block_of, tuple(reps), tuple(tuple(b) for b in members))


def quotient_with_order(gd: Graph, x: Clustering) -> tuple[Graph, VertexOrdering]:
    """Quotient of ``gd`` by the blocks, ordered by representative (block id order)."""
    for b, members in enumerate(x.blocks):
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not gd.has_edge(u, v):
                    raise GraphError(f"block {b} is not a clique: {u} and {v} non-adjacent")
    edges = set()
    for u, v in gd.edges():
        a, b = x.block_of[u], x.block_of[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(x.size, edges), VertexOrdering.identity(x.size)


def greedy_colouring(g: Graph, sigma: VertexOrdering) -> tuple[list[int], int]:
    """First-fit colouring along sigma; also returns col(g, sigma)."""
    pos = sigma.position
    colour = [-1] * g.n
    col = 1 if g.n else 0
    for v in sigma.order:
        back = [colour[u] for u in g.adj[v] if pos[u] < pos[v]]
        col = max(col, len(back) + 1)
        used = set(back)
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    return colour, col


def subcolour_power(g: Graph, sigma: VertexOrdering, d: int, with_bounds: bool = True) -> tuple[Subcolouring, PowerStats]:
    """Subcolouring of the d-th power from the clustering induced by ``sigma``.

    With ``with_bounds`` the stats also carry semiweak_l(g, sigma) and
    gcol_{d,l}(g, sigma) for l = 2d (d even) or 2d-1 (d odd).
    """
    gd = graph_power(g, d)
    x = cluster(g, sigma, d)
    q, tau = quotient_with_order(gd, x)
    block_colour, qcol = greedy_colouring(q, tau)
    colour = tuple(block_colour[b] for b in x.block_of)
    l = power_radius(d)
    sw = semiweak_of_ordering(g, sigma, l) if with_bounds else None
    gc = gcol_of_ordering(g, sigma, (l + 1) // 2, l) if with_bounds else None
    f = Subcolouring(colour)
    return f, PowerStats(d, l, f.palette, qcol, sw, gc)


def verify_subcolouring(h: Graph, f: Subcolouring | Sequence[int]) -> tuple[bool, tuple[int, int, int] | None]:
    """Check every colour class induces disjoint cliques; returns a bad path u-v-w if not."""
    colour = f.colour if isinstance(f, Subcolouring) else tuple(f)
    if len(colour) != h.n:
        raise GraphError("colouring does not cover the graph")
    for v in range(h.n):
        same = [u for u in h.adj[v] if colour[u] == colour[v]]
        for i, u in enumerate(same):
            nu = h.nbr_sets[u]
            for w in same[i + 1:]:
                if w not in nu:
                    return False, (u, v, w)
    return True, None


def is_cluster_graph(h: Graph) -> bool:
    return verify_subcolouring(h, [0] * h.n)[0]


class _Search:
    def __init__(self, h: Graph, node_budget: int | None):
        self.h = h
        n = h.n
        order = []  # BFS from max-degree vertices so conflicts surface early
        seen = [False] * n
        for s in sorted(range(n), key=lambda v: (-h.degree(v), v)):
            if seen[s]:
                continue
            seen[s] = True
            queue = [s]
            for x in queue:
                order.append(x)
                for y in sorted(h.adj[x], key=lambda v: (-h.degree(v), v)):
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
        self.order = order
        self.nmask = [0] * n
        for v in range(n):
            for u in h.adj[v]:
                self.nmask[v] |= 1 << u
        self.left = -1 if node_budget is None else node_budget

    def solve(self, k: int) -> list[int] | None:
        n = self.h.n
        self.colour = [-1] * n
        self.cliques: list[list[int]] = [[] for _ in range(k)]
        self.k = k
        return list(self.colour) if self._rec(0, 0) else None

    def _rec(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        if self.left >= 0:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("subchromatic search exceeded its node budget")
        v = self.order[i]
        nv = self.nmask[v]
        bit = 1 << v
        for c in range(min(used + 1, self.k)):
            cl = self.cliques[c]
            hit = -1
            ok = True
            for j, mask in enumerate(cl):
                if mask & nv:
                    if hit >= 0 or mask & ~nv:
                        ok = False
                        break
                    hit = j
            if not ok:
                continue
            if hit >= 0:
                cl[hit] |= bit
            else:
                cl.append(bit)
            self.colour[v] = c
            if self._rec(i + 1, max(used, c + 1)):
                return True
            if hit >= 0:
                cl[hit] &= ~bit
            else:
                cl.pop()
            self.colour[v] = -1
        return False


def exact_subchromatic(h: Graph, max_n: int = 18, node_budget: int | None = None) -> tuple[int, Subcolouring]:
    """Minimum palette of a subcolouring, by iterative deepening and backtracking."""
    n = h.n
    if n > max_n:
        raise BudgetExceeded(f"exact subchromatic solver limited to {max_n} vertices, graph has {n}")
    if n == 0:
        return 0, Subcolouring(())
    search = _Search(h, node_budget)
    k = 1
    while True:
        found = search.solve(k)
        if found is not None:
            return k, Subcolouring(tuple(found))
        k += 1
