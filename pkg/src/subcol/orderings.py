"""Vertex orderings, reachability sets and the colouring numbers built on them."""

from __future__ import annotations

import itertools
import math
from array import array
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import BudgetExceeded, GraphError, InvalidConstruction
from .graph import Graph

Radius = int | float | None  # None and math.inf both mean unbounded


@dataclass(frozen=True)
class VertexOrdering:
    """A linear order on ``0..n-1``; ``order[i]`` is the vertex of rank ``i``."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.order)
        seen = bytearray(n)
        for v in self.order:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise GraphError(f"ordering is not a permutation of 0..{n - 1}")
            seen[v] = 1

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)))

    @classmethod
    def from_positions(cls, position: Sequence[int]) -> "VertexOrdering":
        order = [0] * len(position)
        for v, p in enumerate(position):
            if not 0 <= p < len(position):
                raise GraphError(f"position {p} out of range")
            order[p] = v
        return cls(tuple(order))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)

    @cached_property
    def pos_array(self) -> array:
        return array("i", self.position)

    def less(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]


@dataclass(frozen=True)
class KTreeConstruction:
    """Build sequence of a k-tree: a base (k+1)-clique, then one vertex per step."""

    base_clique: tuple[int, ...]
    additions: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def k(self) -> int:
        return len(self.base_clique) - 1

    @property
    def n(self) -> int:
        return len(self.base_clique) + len(self.additions)

    def replay(self) -> Graph:
        """Rebuild the graph, checking every attachment is a k-clique of earlier vertices."""
        k = self.k
        if k < 1:
            raise InvalidConstruction("base clique needs at least 2 vertices")
        n = self.n
        present = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for v in self.base_clique:
            if not 0 <= v < n or v in present:
                raise InvalidConstruction(f"bad base vertex {v}")
            present.add(v)
        for a, b in itertools.combinations(self.base_clique, 2):
            adj[a].add(b)
            adj[b].add(a)
        for v, clique in self.additions:
            if not 0 <= v < n or v in present:
                raise InvalidConstruction(f"vertex {v} added twice or out of range")
            if len(clique) != k or len(set(clique)) != k:
                raise InvalidConstruction(f"attachment of {v} is not a {k}-set")
            for a in clique:
                if a not in present:
                    raise InvalidConstruction(f"attachment vertex {a} of {v} not yet present")
            for a, b in itertools.combinations(clique, 2):
                if b not in adj[a]:
                    raise InvalidConstruction(f"attachment of {v} is not a clique: {a} {b}")
            for a in clique:
                adj[a].add(v)
                adj[v].add(a)
            present.add(v)
        return Graph(tuple(tuple(sorted(s)) for s in adj))

    def check_against(self, g: Graph) -> None:
        if self.replay() != g:
            raise InvalidConstruction("construction does not reproduce the graph's edge set")


def _radius(x: Radius, n: int) -> int:
    if x is None or x == math.inf:
        return max(n, 1)
    if not isinstance(x, int) or x < 1:
        raise GraphError(f"radius/hop parameter must be a positive integer or infinity, got {x!r}")
    return x


def _budget(budget: int | None) -> int:
    return -1 if budget is None else int(budget)


def _check_ordering(g: Graph, sigma: VertexOrdering) -> None:
    if sigma.n != g.n:
        raise GraphError(f"ordering has {sigma.n} vertices, graph has {g.n}")


def greach(g: Graph, sigma: VertexOrdering, v: int, k: Radius, l: Radius, budget: int | None = None) -> frozenset[int]:
    """Vertices k-hop l-reachable from ``v`` under ``sigma``, including ``v``."""
    g.check_vertex(v)
    _check_ordering(g, sigma)
    indptr, indices = g.csr
    kk, ll = _radius(k, g.n), _radius(l, g.n)
    return frozenset(kernels.greach(indptr, indices, sigma.pos_array, v, kk, ll, _budget(budget)))


def strong_reach(g: Graph, sigma: VertexOrdering, v: int, l: Radius) -> frozenset[int]:
    return greach(g, sigma, v, 1, l)


def weak_reach(g: Graph, sigma: VertexOrdering, v: int, l: Radius) -> frozenset[int]:
    ll = _radius(l, g.n)
    return greach(g, sigma, v, ll, ll)


def subreach(g: Graph, sigma: VertexOrdering, y: int, k: int, budget: int | None = None) -> frozenset[int]:
    """Vertices semi-weakly k-reached by ``y`` under ``sigma``, including ``y``."""
    g.check_vertex(y)
    _check_ordering(g, sigma)
    indptr, indices = g.csr
    kk = _radius(k, g.n)
    return frozenset(kernels.subreach(indptr, indices, sigma.pos_array, y, kk, _budget(budget)))


def greach_sets(g: Graph, sigma: VertexOrdering, k: Radius, l: Radius, budget: int | None = None) -> list[frozenset[int]]:
    _check_ordering(g, sigma)
    indptr, indices = g.csr
    kk, ll = _radius(k, g.n), _radius(l, g.n)
    return [frozenset(s) for s in kernels.greach_all(indptr, indices, sigma.pos_array, kk, ll, _budget(budget))]


def subreach_sets(g: Graph, sigma: VertexOrdering, k: int, budget: int | None = None) -> list[frozenset[int]]:
    _check_ordering(g, sigma)
    indptr, indices = g.csr
    return [frozenset(s) for s in kernels.subreach_all(indptr, indices, sigma.pos_array, _radius(k, g.n), _budget(budget))]


def gcol_of_ordering(g: Graph, sigma: VertexOrdering, k: Radius, l: Radius, budget: int | None = None) -> int:
    _check_ordering(g, sigma)
    if g.n == 0:
        return 0
    indptr, indices = g.csr
    kk, ll = _radius(k, g.n), _radius(l, g.n)
    return kernels.gcol_value(indptr, indices, sigma.pos_array, kk, ll, -1, _budget(budget))


def semiweak_of_ordering(g: Graph, sigma: VertexOrdering, k: int, budget: int | None = None) -> int:
    _check_ordering(g, sigma)
    if g.n == 0:
        return 0
    indptr, indices = g.csr
    return kernels.semiweak_value(indptr, indices, sigma.pos_array, _radius(k, g.n), -1, _budget(budget))


def exact_gcol(g: Graph, k: Radius, l: Radius, max_n: int = 8) -> tuple[int, VertexOrdering]:
    """Minimum of gcol_{k,l} over all orderings, by exhaustive search with a running cutoff."""
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"exact_gcol limited to {max_n} vertices, graph has {n}")
    if n == 0:
        return 0, VertexOrdering(())
    indptr, indices = g.csr
    kk, ll = _radius(k, n), _radius(l, n)
    best, witness = n + 1, None
    for perm in itertools.permutations(range(n)):
        pos = array("i", [0] * n)
        for i, v in enumerate(perm):
            pos[v] = i
        val = kernels.gcol_value(indptr, indices, pos, kk, ll, best - 1, -1)
        if val < best:
            best, witness = val, perm
            if best == 1:
                break
    return best, VertexOrdering(tuple(witness))


def simplicial_ordering(c: KTreeConstruction) -> VertexOrdering:
    """Base clique in ascending id order, then vertices in order of addition."""
    c.replay()
    return VertexOrdering(tuple(sorted(c.base_clique)) + tuple(v for v, _ in c.additions))


def _bisection(lo: int, hi: int, out: list[int]) -> None:
    # middle first, then both halves; every run's middle precedes the run
    if lo > hi:
        return
    mid = (lo + hi) // 2
    out.append(mid)
    _bisection(lo, mid - 1, out)
    _bisection(mid + 1, hi, out)


def path_ordering(n: int, k: int) -> VertexOrdering:
    """Ordering of the path ``0-1-...-(n-1)`` tuned for k-hop reachability.

    For k >= 2 the vertices ``i = 0 mod k`` come first in index order; each
    gap between them is then ordered by recursive bisection.
    """
    if n < 1 or k < 1:
        raise GraphError("path_ordering needs n >= 1 and k >= 1")
    if k == 1:
        return VertexOrdering.identity(n)
    head = list(range(0, n, k))
    tail: list[int] = []
    for start in head:
        _bisection(start + 1, min(start + k - 1, n - 1), tail)
    return VertexOrdering(tuple(head + tail))


def decomposition_ordering(g: Graph, h) -> VertexOrdering:
    """Parts in order; inside a part, farther from its root first, ties by id."""
    from .decomposition import decomposition_ordering as impl

    return impl(g, h)


def ordering_from_sequence(vertices: Iterable[int]) -> VertexOrdering:
    return VertexOrdering(tuple(vertices))
