"""Simple undirected graphs on dense integer vertices, plane graphs, layerings.

Vertices are always ``0..n-1``. Every structure here is immutable once built,
so queries can be shared freely between threads.
"""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, NotAPathError

INF = math.inf


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency tuples.

    ``labels`` optionally maps the dense ids back to the identifiers used in an
    input file; algorithms never look at it.
    """

    adj: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n = len(self.adj)
        for v, nbrs in enumerate(self.adj):
            prev = -1
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if u <= prev:
                    raise GraphError(f"adjacency of {v} not strictly increasing")
                prev = u
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if v not in self.nbr_sets[u]:
                    raise GraphError(f"asymmetric adjacency: {v}->{u} without {u}->{v}")
        if self.labels is not None and len(self.labels) != n:
            raise GraphError("label table length differs from vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        if n < 0:
            raise GraphError("negative vertex count")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in sets), labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(tuple(() for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def csr(self) -> tuple[array, array]:
        """Compressed adjacency ``(indptr, indices)`` as int32 arrays."""
        indptr = array("i", [0])
        indices = array("i")
        for nbrs in self.adj:
            indices.extend(nbrs)
            indptr.append(len(indices))
        return indptr, indices

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"invalid vertex {v!r} for graph on {self.n} vertices")

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the old ids."""
        old = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old)}
        adj = tuple(
            tuple(sorted(new_id[u] for u in self.adj[v] if u in new_id)) for v in old
        )
        return Graph(adj), old


def bfs_distances(
    g: Graph,
    source: int | Iterable[int],
    allowed: frozenset[int] | set[int] | None = None,
    limit: int | None = None,
) -> dict[int, int]:
    """Unit-weight distances from ``source`` (a vertex or a set of vertices).

    Only vertices in ``allowed`` are entered when it is given; ``limit`` caps
    the search radius.
    """
    sources = [source] if isinstance(source, int) else list(source)
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if limit is not None and dx >= limit:
            continue
        for y in g.adj[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dx + 1
                queue.append(y)
    return dist


def distance(g: Graph, u: int, v: int) -> float:
    """Shortest-path length, ``math.inf`` across components."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    return bfs_distances(g, u).get(v, INF)


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    g.check_vertex(v)
    if r < 0:
        raise GraphError("radius must be non-negative")
    return frozenset(bfs_distances(g, v, limit=r))


def graph_power(g: Graph, d: int) -> Graph:
    """The d-th power: uv is an edge iff 0 < dist(u, v) <= d."""
    if d < 1:
        raise GraphError("power must be >= 1")
    if d == 1:
        return g
    adj = []
    for v in range(g.n):
        reach = bfs_distances(g, v, limit=d)
        del reach[v]
        adj.append(tuple(sorted(reach)))
    return Graph(tuple(adj))


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def check_path(g: Graph, p: Sequence[int]) -> None:
    if len(p) == 0:
        raise NotAPathError("empty vertex sequence")
    for v in p:
        g.check_vertex(v)
    if len(set(p)) != len(p):
        raise NotAPathError("repeated vertex in path")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise NotAPathError(f"{a} and {b} are consecutive but not adjacent")


def is_isometric_path(g: Graph, p: Sequence[int], allowed=None) -> bool:
    """True iff ``p`` is a path whose length equals the endpoint distance.

    With ``allowed`` the distance is measured in the subgraph induced on it.
    """
    check_path(g, p)
    if len(p) == 1:
        return True
    dist = bfs_distances(g, p[0], allowed=allowed, limit=len(p) - 1)
    return dist.get(p[-1], INF) == len(p) - 1


def components(g: Graph, allowed: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted lists, ordered by their smallest vertex)."""
    pool = set(range(g.n)) if allowed is None else set(allowed)
    seen: set[int] = set()
    out = []
    for s in sorted(pool):
        if s in seen:
            continue
        comp = list(bfs_distances(g, s, allowed=pool))
        seen.update(comp)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class Layering:
    layers: tuple[tuple[int, ...], ...]
    assignment: tuple[int, ...]

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "Layering":
        t = max(assignment, default=-1)
        layers: list[list[int]] = [[] for _ in range(t + 1)]
        for v, i in enumerate(assignment):
            layers[i].append(v)
        return cls(tuple(tuple(layer) for layer in layers), tuple(assignment))

    def violations(self, g: Graph) -> list[str]:
        out = []
        if len(self.assignment) != g.n:
            return [f"assignment covers {len(self.assignment)} of {g.n} vertices"]
        seen = set()
        for i, layer in enumerate(self.layers):
            for v in layer:
                if v in seen:
                    out.append(f"vertex {v} in more than one layer")
                seen.add(v)
                if self.assignment[v] != i:
                    out.append(f"vertex {v} listed in layer {i} but assigned {self.assignment[v]}")
        if len(seen) != g.n:
            out.append("layers do not cover every vertex")
        for u, v in g.edges():
            if abs(self.assignment[u] - self.assignment[v]) > 1:
                out.append(f"edge {u}-{v} spans layers {self.assignment[u]} and {self.assignment[v]}")
        return out


def bfs_layering(g: Graph, root: int | None = None) -> Layering:
    """Layer i holds the vertices at distance i from their component's root.

    ``root`` fixes the root of its own component; every other component is
    rooted at its smallest vertex. Layers of different components share indices.
    """
    if root is not None:
        g.check_vertex(root)
    assignment = [-1] * g.n
    roots = [root] if root is not None else []
    roots += list(range(g.n))
    for r in roots:
        if assignment[r] != -1:
            continue
        for v, dv in bfs_distances(g, r).items():
            assignment[v] = dv
    return Layering.from_assignment(assignment)


@dataclass(frozen=True)
class PlaneGraph:
    """A graph with a rotation system and a dart on its outer face.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic order. Faces are
    traced by the rule: after dart ``(u, v)`` comes ``(v, w)`` where ``w``
    follows ``u`` in ``rotation[v]``.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer_face: tuple[int, int] | None

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise GraphError("rotation system size differs from vertex count")
        for v in range(g.n):
            if sorted(self.rotation[v]) != list(g.adj[v]):
                raise GraphError(f"rotation at {v} is not a permutation of its neighbours")
        if self.outer_face is not None:
            u, v = self.outer_face
            g.check_vertex(u)
            g.check_vertex(v)
            if not g.has_edge(u, v):
                raise GraphError(f"outer dart {u}->{v} is not an edge")

    @cached_property
    def _rot_index(self) -> tuple[dict[int, int], ...]:
        return tuple({u: i for i, u in enumerate(r)} for r in self.rotation)

    def succ(self, v: int, u: int) -> int:
        """Neighbour following ``u`` in the rotation at ``v``."""
        r = self.rotation[v]
        return r[(self._rot_index[v][u] + 1) % len(r)]

    def pred(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(self._rot_index[v][u] - 1) % len(r)]

    def next_dart(self, u: int, v: int) -> tuple[int, int]:
        return v, self.succ(v, u)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Face boundary walks, each starting from its smallest-sorted dart."""
        seen: set[tuple[int, int]] = set()
        out = []
        for u in range(self.graph.n):
            for v in self.rotation[u]:
                if (u, v) in seen:
                    continue
                walk = []
                dart = (u, v)
                while dart not in seen:
                    seen.add(dart)
                    walk.append(dart[0])
                    dart = self.next_dart(*dart)
                out.append(tuple(walk))
        return tuple(out)

    @cached_property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        out = {}
        for fi, walk in enumerate(self.faces):
            for a, b in zip(walk, walk[1:] + walk[:1]):
                out[(a, b)] = fi
        return out

    def face_walk(self, u: int, v: int) -> list[int]:
        walk = []
        dart = (u, v)
        while True:
            walk.append(dart[0])
            dart = self.next_dart(*dart)
            if dart == (u, v):
                return walk

    @cached_property
    def outer_walk(self) -> tuple[int, ...]:
        if self.outer_face is None:
            raise GraphError("no outer face designated")
        return tuple(self.face_walk(*self.outer_face))

    def euler_violations(self) -> list[str]:
        """Check n - m + f = 2 on every connected component."""
        g = self.graph
        comp_of = {}
        comps = components(g)
        for ci, comp in enumerate(comps):
            for v in comp:
                comp_of[v] = ci
        faces_per = [0] * len(comps)
        for walk in self.faces:
            faces_per[comp_of[walk[0]]] += 1
        out = []
        for ci, comp in enumerate(comps):
            nc = len(comp)
            mc = sum(len(g.adj[v]) for v in comp) // 2
            fc = faces_per[ci] if mc else 1
            if nc - mc + fc != 2:
                out.append(f"component of vertex {comp[0]}: n-m+f = {nc - mc + fc}")
        return out

    def is_triangulation(self) -> bool:
        return (
            self.graph.n >= 3
            and not self.euler_violations()
            and len(components(self.graph)) == 1
            and all(len(f) == 3 for f in self.faces)
        )
