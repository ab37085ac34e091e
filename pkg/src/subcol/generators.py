"""Seeded instance generators.

Every generator is deterministic in ``(kind, params, seed)``; randomness comes
from a private ``random.Random(seed)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from .errors import GraphError
from .graph import Graph, PlaneGraph
from .orderings import KTreeConstruction

KINDS = (
    "path",
    "cycle",
    "grid",
    "random-tree",
    "gnp",
    "random-k-tree",
    "random-plane-triangulation",
    "subdivided-triangulation",
)


@dataclass(frozen=True)
class Instance:
    kind: str
    params: dict[str, Any]
    seed: int
    graph: Graph
    plane: PlaneGraph | None = None
    construction: KTreeConstruction | None = None
    meta: dict[str, Any] = field(default_factory=dict)


def path_graph(n: int) -> PlaneGraph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    return PlaneGraph(g, g.adj, (0, 1) if n > 1 else None)


def cycle_graph(n: int) -> PlaneGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    g = Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    rot = tuple(((i - 1) % n, (i + 1) % n) for i in range(n))
    return PlaneGraph(g, rot, (0, 1))


def grid_graph(rows: int, cols: int) -> PlaneGraph:
    if rows < 1 or cols < 1:
        raise GraphError("grid needs positive dimensions")
    vid = lambda i, j: i * cols + j  # noqa: E731
    edges = []
    rot = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((vid(i, j), vid(i, j + 1)))
            if i + 1 < rows:
                edges.append((vid(i, j), vid(i + 1, j)))
            around = []
            for di, dj in ((-1, 0), (0, 1), (1, 0), (0, -1)):
                a, b = i + di, j + dj
                if 0 <= a < rows and 0 <= b < cols:
                    around.append(vid(a, b))
            rot.append(tuple(around))
    g = Graph.from_edges(rows * cols, edges)
    if g.m == 0:
        return PlaneGraph(g, tuple(rot), None)
    probe = PlaneGraph(g, tuple(rot), None)
    longest = max(probe.faces, key=len)
    outer = (longest[0], longest[1 % len(longest)])
    return PlaneGraph(g, tuple(rot), outer)


def random_tree(n: int, rng: random.Random) -> PlaneGraph:
    if n < 1:
        raise GraphError("tree needs n >= 1")
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    g = Graph.from_edges(n, edges)
    return PlaneGraph(g, g.adj, (edges[0][1], edges[0][0]) if edges else None)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError("gnp needs n >= 0 and 0 <= p <= 1")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_k_tree(k: int, n: int, rng: random.Random) -> tuple[Graph, KTreeConstruction]:
    """Grow a k-tree from K_{k+1} by attaching each new vertex to a random k-clique."""
    if k < 1 or n < k + 1:
        raise GraphError("random k-tree needs k >= 1 and n >= k + 1")
    base = tuple(range(k + 1))
    edges = [(a, b) for a in base for b in base if a < b]
    cliques = [tuple(c for c in base if c != x) for x in base]
    additions = []
    for v in range(k + 1, n):
        clique = rng.choice(cliques)
        additions.append((v, clique))
        edges.extend((u, v) for u in clique)
        for x in clique:
            cliques.append(tuple(sorted([u for u in clique if u != x] + [v])))
    return Graph.from_edges(n, edges), KTreeConstruction(base, tuple(additions))


def _rotation_from_faces(n: int, faces) -> tuple[tuple[int, ...], ...]:
    # face (x, y, z) traversed x->y->z means z follows x in the rotation at y
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for x, y, z in faces:
        succ[y][x] = z
        succ[z][y] = x
        succ[x][z] = y
    rot = []
    for v in range(n):
        start = min(succ[v])
        order = [start]
        nxt = succ[v][start]
        while nxt != start:
            order.append(nxt)
            nxt = succ[v][nxt]
        rot.append(tuple(order))
    return tuple(rot)


def random_plane_triangulation(n: int, flips: int, rng: random.Random) -> PlaneGraph:
    """Stacked insertions into uniformly random inner faces, then random flips.

    Not uniform over triangulations. The outer face stays the triangle on
    vertices 0, 1, 2 throughout; flips never touch its edges.
    """
    if n < 3:
        raise GraphError("triangulation needs n >= 3")
    outer = (0, 2, 1)
    faces: list[tuple[int, int, int]] = [(0, 1, 2)]
    for w in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, w)
        faces.append((b, c, w))
        faces.append((c, a, w))
    if flips and n >= 5:
        dart_face: dict[tuple[int, int], int] = {}
        for fi, (a, b, c) in enumerate(faces):
            dart_face[(a, b)] = fi
            dart_face[(b, c)] = fi
            dart_face[(c, a)] = fi
        adj = [set() for _ in range(n)]
        for a, b, c in faces:
            adj[a] |= {b, c}
            adj[b] |= {a, c}
            adj[c] |= {a, b}
        outer_edges = {frozenset(e) for e in ((0, 1), (1, 2), (0, 2))}
        done = 0
        attempts = 0
        while done < flips and attempts < 20 * flips:
            attempts += 1
            fi = rng.randrange(len(faces))
            tri = faces[fi]
            r = rng.randrange(3)
            a, b, c = tri[r], tri[(r + 1) % 3], tri[(r + 2) % 3]
            if frozenset((a, b)) in outer_edges:
                continue
            gi = dart_face[(b, a)]
            other = faces[gi]
            s = other.index(b)
            d = other[(s + 2) % 3]
            if c == d or d in adj[c] or len(adj[a]) <= 3 or len(adj[b]) <= 3:
                continue
            new_f = (c, a, d)
            new_g = (d, b, c)
            for x, y in ((a, b), (b, c), (c, a), (b, a), (a, d), (d, b)):
                dart_face.pop((x, y), None)
            faces[fi] = new_f
            faces[gi] = new_g
            for x, y in ((c, a), (a, d), (d, c)):
                dart_face[(x, y)] = fi
            for x, y in ((d, b), (b, c), (c, d)):
                dart_face[(x, y)] = gi
            adj[a].discard(b)
            adj[b].discard(a)
            adj[c].add(d)
            adj[d].add(c)
            done += 1
    all_faces = faces + [outer]
    edges = {tuple(sorted(p)) for f in all_faces for p in ((f[0], f[1]), (f[1], f[2]), (f[0], f[2]))}
    g = Graph.from_edges(n, edges)
    return PlaneGraph(g, _rotation_from_faces(n, all_faces), (0, 2))


def subdivide(pg: PlaneGraph, s: int) -> PlaneGraph:
    """Replace every edge by a path with ``s`` internal vertices, keeping the embedding."""
    if s < 0:
        raise GraphError("subdivision count must be >= 0")
    if s == 0:
        return pg
    g = pg.graph
    n = g.n
    chain: dict[tuple[int, int], list[int]] = {}
    nxt = n
    edges = []
    for a, b in g.edges():
        mids = list(range(nxt, nxt + s))
        nxt += s
        seq = [a, *mids, b]
        edges.extend(zip(seq, seq[1:]))
        chain[(a, b)] = mids
        chain[(b, a)] = mids[::-1]
    rot: list[tuple[int, ...]] = [()] * nxt
    for v in range(n):
        rot[v] = tuple(chain[(v, u)][0] for u in pg.rotation[v])
    for (a, b), mids in chain.items():
        if a < b:
            seq = [a, *mids, b]
            for i in range(1, len(seq) - 1):
                rot[seq[i]] = (seq[i - 1], seq[i + 1])
    outer = None
    if pg.outer_face is not None:
        u, v = pg.outer_face
        outer = (u, chain[(u, v)][0])
    return PlaneGraph(Graph.from_edges(nxt, edges), tuple(rot), outer)


def generate(kind: str, params: dict[str, Any] | None = None, seed: int = 0) -> Instance:
    """Build an instance of family ``kind``.

    ``params`` by kind: path/cycle ``n``; grid ``rows, cols``; random-tree ``n``;
    gnp ``n, p``; random-k-tree ``k, n``; random-plane-triangulation ``n``
    (``flips`` defaults to ``n``); subdivided-triangulation ``n, s``
    (``flips`` as above).
    """
    params = dict(params or {})
    rng = random.Random(seed)

    def need(*names):
        missing = [x for x in names if x not in params]
        if missing:
            raise GraphError(f"{kind} requires parameters {missing}")
        return [params[x] for x in names]

    if kind == "path":
        (n,) = need("n")
        pg = path_graph(int(n))
        return Instance(kind, params, seed, pg.graph, pg)
    if kind == "cycle":
        (n,) = need("n")
        pg = cycle_graph(int(n))
        return Instance(kind, params, seed, pg.graph, pg)
    if kind == "grid":
        rows, cols = need("rows", "cols")
        pg = grid_graph(int(rows), int(cols))
        return Instance(kind, params, seed, pg.graph, pg)
    if kind == "random-tree":
        (n,) = need("n")
        pg = random_tree(int(n), rng)
        return Instance(kind, params, seed, pg.graph, pg)
    if kind == "gnp":
        n, p = need("n", "p")
        return Instance(kind, params, seed, gnp(int(n), float(p), rng))
    if kind == "random-k-tree":
        k, n = need("k", "n")
        g, c = random_k_tree(int(k), int(n), rng)
        return Instance(kind, params, seed, g, construction=c)
    if kind == "random-plane-triangulation":
        (n,) = need("n")
        flips = int(params.setdefault("flips", int(n)))
        pg = random_plane_triangulation(int(n), flips, rng)
        return Instance(kind, params, seed, pg.graph, pg)
    if kind == "subdivided-triangulation":
        n, s = need("n", "s")
        flips = int(params.setdefault("flips", int(n)))
        base = random_plane_triangulation(int(n), flips, rng)
        pg = subdivide(base, int(s))
        return Instance(kind, params, seed, pg.graph, pg, meta={"base_n": int(n), "girth_lower": 3 * (int(s) + 1)})
    raise GraphError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")
