"""Decompositions into induced connected parts: reductions of plane triangulations,
neat isometric-path decompositions of plane graphs, verification and contraction.

Parts are stored in order. Path parts list their vertices along the path,
starting at the endpoint ``w`` recorded in the part's metadata.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError, InvalidDecomposition, NotAPathError
from .graph import Graph, PlaneGraph, bfs_distances, check_path, is_isometric_path
from .orderings import VertexOrdering

GEODESIC_CAP = 4096


@dataclass(frozen=True)
class PartMeta:
    endpoints: tuple[int, int]
    bosses: tuple[int, ...] = ()
    root: int | None = None
    leaves: int = 1
    interior: int | None = None  # tie-break score of the chosen path, reductions only


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[tuple[int, ...], ...]
    meta: tuple[PartMeta, ...]

    def __post_init__(self) -> None:
        if len(self.parts) != len(self.meta):
            raise InvalidDecomposition("one metadata record per part required")

    @classmethod
    def from_parts(cls, parts: Iterable[Sequence[int]], roots: Sequence[int] | None = None) -> "Decomposition":
        ps = tuple(tuple(p) for p in parts)
        meta = []
        for i, p in enumerate(ps):
            if not p:
                raise InvalidDecomposition(f"part {i} is empty")
            root = roots[i] if roots is not None else p[-1]
            meta.append(PartMeta(endpoints=(p[0], p[-1]), root=root))
        return cls(ps, tuple(meta))

    def __len__(self) -> int:
        return len(self.parts)

    def part_of(self, n: int) -> list[int]:
        owner = [-1] * n
        for i, p in enumerate(self.parts):
            for v in p:
                if 0 <= v < n:
                    owner[v] = i
        return owner


@dataclass
class DecompositionReport:
    is_valid: bool
    is_isometric_path_decomp: bool
    is_neat: bool
    is_reduction: bool | None  # None when no embedding was supplied
    width: int
    bosses: list[tuple[int, ...]]
    leaves: list[int]
    violations: dict[str, list[str]] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def all_violations(self) -> list[str]:
        return [f"{k}: {m}" for k in sorted(self.violations) for m in self.violations[k]]


# ---------------------------------------------------------------- helpers


def _components(g: Graph, verts: Iterable[int]) -> list[list[int]]:
    left = set(verts)
    out = []
    for s in sorted(left):
        if s not in left:
            continue
        left.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in left:
                    left.discard(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def _adjacent_parts(g: Graph, comp: Iterable[int], owner: Sequence[int]) -> set[int]:
    seen = set()
    for x in comp:
        for y in g.adj[x]:
            if owner[y] >= 0:
                seen.add(owner[y])
    return seen


def _lex_geodesic(g: Graph, allowed: set[int], a: int, b: int) -> list[int]:
    """Lexicographically smallest shortest a-b path inside ``allowed``."""
    dist = bfs_distances(g, b, allowed=allowed)
    if a not in dist:
        raise InvalidDecomposition(f"{a} and {b} not connected in the remaining graph")
    path = [a]
    x = a
    while x != b:
        x = min(y for y in g.adj[x] if dist.get(y, -1) == dist[x] - 1)
        path.append(x)
    return path


def _swept_geodesic(pg: PlaneGraph, allowed: set[int], a: int, ref: int, b: int, direction: int) -> list[int]:
    """Shortest a-b path in ``allowed`` that turns as early as possible.

    At ``a`` the rotation is scanned from ``ref`` in ``direction`` (+1 for
    successor, -1 for predecessor); at later vertices from the incoming
    neighbour. The first neighbour one step closer to ``b`` is taken.
    """
    g = pg.graph
    dist = bfs_distances(g, b, allowed=allowed)
    if a not in dist:
        raise InvalidDecomposition(f"{a} and {b} not connected in the remaining graph")
    step = pg.succ if direction > 0 else pg.pred
    path = [a]
    x, back = a, ref
    while x != b:
        y = back
        for _ in range(g.degree(x)):
            y = step(x, y)
            if dist.get(y, -1) == dist[x] - 1:
                break
        else:
            raise InvalidDecomposition("rotation scan found no geodesic successor")
        path.append(y)
        x, back = y, x
    return path


def all_geodesics(g: Graph, allowed: set[int], a: int, b: int, cap: int = GEODESIC_CAP) -> list[list[int]] | None:
    """Every shortest a-b path inside ``allowed`` in lexicographic order, or None beyond ``cap``."""
    dist = bfs_distances(g, b, allowed=allowed)
    if a not in dist:
        return []
    out: list[list[int]] = []
    path = [a]

    def rec(x):
        if len(out) > cap:
            return
        if x == b:
            out.append(list(path))
            return
        for y in g.adj[x]:
            if dist.get(y, -1) == dist[x] - 1:
                path.append(y)
                rec(y)
                path.pop()

    rec(a)
    return None if len(out) > cap else out


def interior_count(g: Graph, comp: set[int], path: Sequence[int], side: set[int]) -> int:
    """Vertices of ``comp - path`` in components that touch ``side``."""
    rest = comp.difference(path)
    total = 0
    for c in _components(g, rest):
        if any(y in side for x in c for y in g.adj[x]):
            total += len(c)
    return total


def _outer_edge(pg: PlaneGraph) -> tuple[int, int]:
    walk = pg.outer_walk
    return min(tuple(sorted((walk[i], walk[(i + 1) % len(walk)]))) for i in range(len(walk)))


# ---------------------------------------------------------------- reductions


def triangulation_reduction(pg: PlaneGraph) -> Decomposition:
    """Reduction of a plane triangulation, built part by part.

    Each new path joins the two corner vertices of its component by the
    geodesic that hugs the lower-index boss, which minimises the number of
    vertices left between the two.
    """
    g = pg.graph
    n = g.n
    if n < 3 or pg.outer_face is None:
        raise GraphError("reduction needs a triangulation on at least 3 vertices with an outer face")
    if not pg.is_triangulation():
        raise GraphError("input is not a plane triangulation")
    outer = pg.outer_walk
    x, y = _outer_edge(pg)
    (third,) = [v for v in outer if v not in (x, y)]
    parts: list[tuple[int, ...]] = [(x, y), (third,)]
    meta = [PartMeta((x, y), (), y), PartMeta((third, third), (0,), third)]
    owner = [-1] * n
    owner[x] = owner[y] = 0
    owner[third] = 1
    queue = deque(_components(g, [v for v in range(n) if owner[v] < 0]))
    faces3 = [f for f in pg.faces if len(f) == 3]
    faces_at: dict[int, list[tuple[int, ...]]] = {}
    for f in faces3:
        for v in f:
            faces_at.setdefault(v, []).append(f)

    while queue:
        comp = queue.popleft()
        cset = set(comp)
        adj_parts = sorted(_adjacent_parts(g, comp, owner))
        if len(adj_parts) != 2:
            raise InvalidDecomposition(f"component {comp[:5]}... touches parts {adj_parts}, expected two")
        h, j = adj_parts
        corners = []
        seen_faces = set()
        for w in comp:
            for f in faces_at.get(w, ()):
                others = [v for v in f if v != w]
                if f in seen_faces or len(others) != 2:
                    continue
                o = {owner[v] for v in others}
                if o == {h, j}:
                    seen_faces.add(f)
                    v_h = others[0] if owner[others[0]] == h else others[1]
                    v_j = others[1] if v_h == others[0] else others[0]
                    corners.append((w, v_h, v_j))
        if len(corners) != 2:
            raise InvalidDecomposition(f"component at {comp[0]} has {len(corners)} corner faces, expected 2")
        corners.sort()
        (w, v, z), (w2, _, _) = corners
        direction = 1 if pg.succ(w, z) == v else -1
        path = _swept_geodesic(pg, cset, w, v, w2, direction)
        hside = set(parts[h])
        k = len(parts)
        parts.append(tuple(path))
        meta.append(PartMeta((path[0], path[-1]), (h, j), path[-1], 1, interior_count(g, cset, path, hside)))
        for p in path:
            owner[p] = k
        queue.extend(_components(g, cset.difference(path)))
    return Decomposition(tuple(parts), tuple(meta))


def _neat_ok(g: Graph, comp: set[int], path: Sequence[int], owner: list[int], k: int) -> bool:
    rest = comp.difference(path)
    if not rest:
        return True
    saved = {p: owner[p] for p in path}
    for p in path:
        owner[p] = k
    try:
        return all(len(_adjacent_parts(g, c, owner)) <= 2 for c in _components(g, rest))
    finally:
        for p, o in saved.items():
            owner[p] = o


def _neat_candidates(pg: PlaneGraph, comp: list[int], cset: set[int], owner: list[int], parts, bosses):
    """Candidate paths for the next part, in the order they are tried."""
    g = pg.graph
    touch: dict[int, list[int]] = {b: [] for b in bosses}  # K-vertices adjacent to each boss
    for u in comp:
        hit = {owner[y] for y in g.adj[u] if owner[y] >= 0}
        for b in hit:
            touch[b].append(u)
    if len(bosses) == 2:
        heavy = [b for b in bosses if len(touch[b]) >= 2]
        if heavy:
            b = heavy[0]
            idx = {v: i for i, v in enumerate(parts[b])}
            att = sorted({idx[y] for u in touch[b] for y in g.adj[u] if owner[y] == b})
            xa, ya = parts[b][att[0]], parts[b][att[-1]]
            xs = sorted(u for u in g.adj[xa] if u in cset)
            ys = sorted(u for u in g.adj[ya] if u in cset)
            for x1 in xs:
                for y1 in ys:
                    yield _swept_geodesic(pg, cset, x1, xa, y1, 1)
                    yield _swept_geodesic(pg, cset, x1, xa, y1, -1)
                    yield _lex_geodesic(g, cset, x1, y1)
            for x1 in xs:
                for y1 in ys:
                    geos = all_geodesics(g, cset, x1, y1)
                    yield from geos or ()
            return
        (x1,), (y1,) = touch[bosses[0]], touch[bosses[1]]
        yield _lex_geodesic(g, cset, x1, y1)
        return
    att = sorted(touch[bosses[0]])
    if len(att) >= 2:
        yield _lex_geodesic(g, cset, att[0], att[1])
    else:
        yield _lex_geodesic(g, cset, att[0], comp[0])


def neat_reduction(pg: PlaneGraph) -> Decomposition:
    """Isometric-path decomposition in which every later path sees at most two earlier ones."""
    g = pg.graph
    n = g.n
    if n == 0:
        return Decomposition((), ())
    if len(_components(g, range(n))) != 1:
        raise GraphError("neat_reduction needs a connected graph")
    owner = [-1] * n
    if n == 1:
        return Decomposition(((0,),), (PartMeta((0, 0), (), 0),))
    x, y = _outer_edge(pg)
    parts: list[tuple[int, ...]] = [(x, y)]
    meta = [PartMeta((x, y), (), y)]
    owner[x] = owner[y] = 0

    # second part: walk on along the outer face away from the first edge
    walk = pg.outer_walk
    L = len(walk)
    second = None
    for i in range(L):
        if walk[i] != x:
            continue
        for step in (-1, 1):
            a = walk[(i + step) % L]
            if owner[a] >= 0:
                continue
            b = walk[(i + 2 * step) % L]
            second = (a, b) if owner[b] < 0 and b != a else (a,)
            break
        if second:
            break
    if second is not None:
        parts.append(second)
        meta.append(PartMeta((second[0], second[-1]), (0,), second[-1]))
        for v in second:
            owner[v] = 1

    queue = deque(_components(g, [v for v in range(n) if owner[v] < 0]))
    while queue:
        comp = queue.popleft()
        cset = set(comp)
        bosses = tuple(sorted(_adjacent_parts(g, comp, owner)))
        if not 1 <= len(bosses) <= 2:
            raise InvalidDecomposition(f"component at {comp[0]} touches {len(bosses)} earlier parts")
        k = len(parts)
        chosen = None
        tried = set()
        for cand in _neat_candidates(pg, comp, cset, owner, parts, bosses):
            key = tuple(cand)
            if key in tried:
                continue
            tried.add(key)
            if _neat_ok(g, cset, cand, owner, k):
                chosen = cand
                break
        if chosen is None:
            raise InvalidDecomposition(f"no admissible path for component at {comp[0]}")
        parts.append(tuple(chosen))
        meta.append(PartMeta((chosen[0], chosen[-1]), bosses, chosen[-1]))
        for p in chosen:
            owner[p] = k
        queue.extend(_components(g, cset.difference(chosen)))
    return Decomposition(tuple(parts), tuple(meta))


# ---------------------------------------------------------------- verification


def _bfs_leaves(g: Graph, part: Sequence[int], root: int) -> int:
    pset = set(part)
    dist = bfs_distances(g, root, allowed=pset)
    has_child = set()
    for v in part:
        if v == root:
            continue
        parent = min(u for u in g.adj[v] if dist.get(u, -2) == dist[v] - 1)
        has_child.add(parent)
    leaves = sum(1 for v in part if v != root and v not in has_child)
    return max(leaves, 1)


def _face_containing(pg: PlaneGraph, inside: set[int], u: int, a: int) -> list[int]:
    """Boundary walk of the face of G[inside] that contains the edge a-u (u outside)."""
    p = u
    for _ in range(pg.graph.degree(a)):
        p = pg.pred(a, p)
        if p in inside:
            break
    else:
        return [a]
    walk = []
    x, y = p, a
    start = (x, y)
    while True:
        walk.append(y)
        z = y
        q = x
        for _ in range(pg.graph.degree(z)):
            q = pg.succ(z, q)
            if q in inside:
                break
        x, y = z, q
        if (x, y) == start or len(walk) > 4 * pg.graph.m + 4:
            break
    return walk


def _check_boundary_form(walk: list[int], owner: list[int], parts) -> str | None:
    L = len(walk)
    owners = [owner[v] for v in walk]
    distinct = sorted(set(owners))
    if len(distinct) != 2:
        return f"face boundary meets parts {distinct}, expected two"
    changes = sum(1 for i in range(L) if owners[i] != owners[i - 1])
    if changes != 2:
        return f"face boundary alternates between parts {changes} times"
    for i in range(L):
        a, b = walk[i], walk[(i + 1) % L]
        if owner[a] == owner[b] and a != b:
            idx = {v: t for t, v in enumerate(parts[owner[a]])}
            if abs(idx[a] - idx[b]) != 1:
                return f"face boundary leaves path {owner[a]} between {a} and {b}"
    for part_id in distinct:
        run = [v for v in walk if owner[v] == part_id]
        if len(run) != len(set(run)):
            return f"face boundary revisits part {part_id}"
    return None


def _reduction_violations(pg: PlaneGraph, h: Decomposition, owner: list[int], notes: list[str]) -> list[str]:
    g = pg.graph
    out: list[str] = []
    if not pg.is_triangulation():
        return ["embedding is not a triangulation"]
    if len(h.parts) < 2 or len(h.parts[0]) != 2 or len(h.parts[1]) != 1:
        out.append("first part must have two vertices and second part one")
    tri_faces = [f for f in pg.faces if len(f) == 3]
    # property 2
    for k in range(2, len(h.parts)):
        part = h.parts[k]
        earlier = sorted(p for p in _adjacent_parts(g, part, owner) if p < k)
        if len(earlier) != 2:
            out.append(f"part {k} adjacent to earlier parts {earlier}, expected two")
            continue
        hh, jj = earlier
        pattern_at: dict[int, list[tuple[int, tuple]]] = {}
        for f in tri_faces:
            os = [owner[v] for v in f]
            if sorted(os) != sorted([hh, jj, k]):
                continue
            i = os.index(k)
            cyc = tuple(os[(i + t) % 3] for t in range(3))
            pattern_at.setdefault(f[i], []).append((f, cyc))
        e1, e2 = part[0], part[-1]
        ok = False
        for f1, c1 in pattern_at.get(e1, ()):
            for f2, c2 in pattern_at.get(e2, ()):
                if f1 != f2 and c1 != c2:
                    ok = True
        if not ok:
            out.append(f"part {k} lacks corner faces at its endpoints {e1}, {e2}")
            continue
        # property 3: no competing geodesic leaves fewer vertices next to the lower boss
        remaining = {v for v in range(g.n) if owner[v] >= k}
        comp = set(bfs_distances(g, part[0], allowed=remaining))
        if len(part) - 1 != bfs_distances(g, e1, allowed=comp).get(e2, -1):
            out.append(f"part {k} is not a shortest path between its corners")
            continue
        geos = all_geodesics(g, comp, e1, e2)
        if geos is None:
            notes.append(f"part {k}: more than {GEODESIC_CAP} geodesics, tie-break not rechecked")
            continue
        side = set(h.parts[hh])
        mine = interior_count(g, comp, part, side)
        best = min(interior_count(g, comp, p, side) for p in geos)
        if mine > best:
            out.append(f"part {k} leaves {mine} vertices next to part {hh}, a competing path leaves {best}")
    # property 4
    n = g.n
    for k in range(1, len(h.parts)):
        inside = {v for v in range(n) if 0 <= owner[v] <= k}
        for comp in _components(g, [v for v in range(n) if owner[v] > k]):
            u = comp[0]
            a = next((y for x in comp for y in g.adj[x] if y in inside), None)
            if a is None:
                out.append(f"component at {u} after part {k} touches no earlier part")
                continue
            u = next(x for x in comp if a in g.nbr_sets[x])
            walk = _face_containing(pg, inside, u, a)
            msg = _check_boundary_form(walk, owner, h.parts)
            if msg:
                out.append(f"after part {k}, component at {comp[0]}: {msg}")
    return out


def verify(g: Graph, h: Decomposition, pg: PlaneGraph | None = None) -> DecompositionReport:
    """Check a decomposition and measure its width; never raises on bad input."""
    n = g.n
    v_valid: list[str] = []
    v_iso: list[str] = []
    v_neat: list[str] = []
    notes: list[str] = []
    owner = [-1] * n
    for i, part in enumerate(h.parts):
        if not part:
            v_valid.append(f"part {i} is empty")
        for v in part:
            if not isinstance(v, int) or not 0 <= v < n:
                v_valid.append(f"part {i} has invalid vertex {v!r}")
            elif owner[v] >= 0:
                v_valid.append(f"vertex {v} in parts {owner[v]} and {i}")
            else:
                owner[v] = i
    missing = [v for v in range(n) if owner[v] < 0]
    if missing:
        v_valid.append(f"{len(missing)} vertices uncovered, e.g. {missing[:5]}")
    bosses: list[tuple[int, ...]] = []
    leaves: list[int] = []
    width = 0
    if not v_valid:
        for i, part in enumerate(h.parts):
            if len(_components(g, part)) != 1:
                v_valid.append(f"part {i} does not induce a connected subgraph")
            remaining = {v for v in range(n) if owner[v] >= i}
            try:
                if not is_isometric_path(g, part, allowed=remaining):
                    v_iso.append(f"part {i} is not isometric in the remaining graph")
            except NotAPathError as exc:
                v_iso.append(f"part {i} is not a path: {exc}")
            earlier = tuple(sorted(p for p in _adjacent_parts(g, part, owner) if p < i))
            bosses.append(earlier)
            if i >= 1 and not 1 <= len(earlier) <= 2:
                v_neat.append(f"part {i} adjacent to {len(earlier)} earlier parts")
            root = h.meta[i].root if i < len(h.meta) and h.meta[i].root is not None else part[-1]
            if root not in part:
                v_valid.append(f"root {root} of part {i} lies outside the part")
                leaves.append(0)
                continue
            dist_rem = bfs_distances(g, root, allowed=remaining)
            dist_part = bfs_distances(g, root, allowed=set(part))
            if any(dist_part.get(v) != dist_rem.get(v) for v in part):
                notes.append(f"part {i} is not a BFS subtree of the remaining graph from {root}")
            leaves.append(_bfs_leaves(g, part, root) if len(dist_part) == len(part) else 0)
        for i in range(len(h.parts) - 1):
            for comp in _components(g, [v for v in range(n) if owner[v] > i]):
                s = len({p for p in _adjacent_parts(g, comp, owner) if p <= i})
                width = max(width, s)
    else:
        v_iso.append("not a valid decomposition")
        v_neat.append("not a valid decomposition")
    violations = {"valid": v_valid, "isometric": v_iso, "neat": v_neat}
    is_reduction = None
    if pg is not None:
        if pg.graph != g:
            v_red = ["embedding belongs to a different graph"]
        elif v_valid or v_iso:
            v_red = ["not a valid isometric-path decomposition"]
        else:
            v_red = _reduction_violations(pg, h, owner, notes)
        violations["reduction"] = v_red
        is_reduction = not v_red
    return DecompositionReport(
        is_valid=not v_valid,
        is_isometric_path_decomp=not v_iso,
        is_neat=not v_neat,
        is_reduction=is_reduction,
        width=width,
        bosses=bosses,
        leaves=leaves,
        violations=violations,
        notes=notes,
    )


def contract(g: Graph, h: Decomposition) -> Graph:
    """Quotient graph with one vertex per part."""
    rep = verify(g, h)
    if not rep.is_valid:
        raise InvalidDecomposition("; ".join(rep.violations["valid"]))
    owner = h.part_of(g.n)
    edges = {(min(owner[u], owner[v]), max(owner[u], owner[v])) for u, v in g.edges() if owner[u] != owner[v]}
    return Graph.from_edges(len(h.parts), edges)


def reduction_ordering(h: Decomposition, g: Graph | None = None) -> VertexOrdering:
    """Parts in order, each along its path from the stored first endpoint."""
    if g is not None:
        for i, part in enumerate(h.parts):
            try:
                check_path(g, part)
            except NotAPathError as exc:
                raise NotAPathError(f"part {i}: {exc}") from None
    return VertexOrdering(tuple(v for part in h.parts for v in part))


def decomposition_ordering(g: Graph, h: Decomposition) -> VertexOrdering:
    """Parts in order; inside a part, farther from its root first, ties by id."""
    rep = verify(g, h)
    if not rep.is_valid:
        raise InvalidDecomposition("; ".join(rep.violations["valid"]))
    order: list[int] = []
    for part, meta in zip(h.parts, h.meta):
        root = meta.root if meta.root is not None else part[-1]
        dist = bfs_distances(g, root, allowed=set(part))
        order.extend(sorted(part, key=lambda v: (-dist[v], v)))
    return VertexOrdering(tuple(order))
