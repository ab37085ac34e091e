"""Text formats for graphs, embeddings, orderings, constructions, decompositions and colourings.

Every reader takes the file contents as a string plus an optional ``source``
name used in line-numbered :class:`ParseError` messages.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Iterator

from .errors import GraphError, ParseError
from .graph import Graph, Layering, PlaneGraph
from .orderings import KTreeConstruction, VertexOrdering


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(tokens, no, source) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", no, source) from None


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# edge lists


def parse_edge_list(text: str, source: str | None = None) -> Graph:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty edge list, expected header 'n m'", 1, source)
    no, head = lines[0]
    hv = _ints(head.split(), no, source)
    if len(hv) != 2 or hv[0] < 0 or hv[1] < 0:
        raise ParseError("header must be 'n m' with nonnegative integers", no, source)
    n, m = hv
    edges = []
    seen = set()
    for no, line in lines[1:]:
        uv = _ints(line.split(), no, source)
        if len(uv) != 2:
            raise ParseError("edge line must hold exactly two vertices", no, source)
        u, v = uv
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", no, source)
        if u == v:
            raise ParseError(f"self-loop at {u}", no, source)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", no, source)
        seen.add(key)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", lines[0][0], source)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


# rotation systems


def parse_rotation(text: str, source: str | None = None) -> PlaneGraph:
    rot: dict[int, list[int]] = {}
    outer = None
    for no, line in _lines(text):
        if ":" not in line:
            raise ParseError("expected 'v: n1 n2 ...' or 'outer: u v'", no, source)
        head, rest = line.split(":", 1)
        head = head.strip()
        if head == "outer":
            uv = _ints(rest.split(), no, source)
            if len(uv) != 2:
                raise ParseError("outer line needs a directed edge 'u v'", no, source)
            outer = (uv[0], uv[1])
            continue
        (v,) = _ints([head], no, source)
        if v in rot:
            raise ParseError(f"rotation of {v} given twice", no, source)
        rot[v] = _ints(rest.split(), no, source)
    n = max(rot) + 1 if rot else 0
    if set(rot) != set(range(n)):
        raise ParseError(f"rotation must list every vertex 0..{n - 1}", None, source)
    try:
        g = Graph(tuple(tuple(sorted(rot[v])) for v in range(n)))
        return PlaneGraph(g, tuple(tuple(rot[v]) for v in range(n)), outer)
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None


def format_rotation(pg: PlaneGraph) -> str:
    out = [f"{v}: {' '.join(map(str, r))}".rstrip() for v, r in enumerate(pg.rotation)]
    if pg.outer_face is not None:
        out.append(f"outer: {pg.outer_face[0]} {pg.outer_face[1]}")
    return "\n".join(out) + "\n"


# orderings and k-tree constructions


def parse_ordering(text: str, source: str | None = None) -> VertexOrdering:
    order = []
    for no, line in _lines(text):
        order.extend(_ints(line.split(), no, source))
    try:
        return VertexOrdering(tuple(order))
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None


def format_ordering(sigma: VertexOrdering) -> str:
    return "".join(f"{v}\n" for v in sigma.order)


def parse_ktree(text: str, source: str | None = None) -> KTreeConstruction:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty construction file", 1, source)
    no, first = lines[0]
    base = tuple(_ints(first.split(), no, source))
    additions = []
    for no, line in lines[1:]:
        if ":" not in line:
            raise ParseError("expected 'v: c1 ... ck'", no, source)
        head, rest = line.split(":", 1)
        (v,) = _ints([head.strip()], no, source)
        clique = tuple(_ints(rest.split(), no, source))
        if len(clique) != len(base) - 1:
            raise ParseError(f"attachment must have {len(base) - 1} vertices", no, source)
        additions.append((v, clique))
    return KTreeConstruction(base, tuple(additions))


def format_ktree(c: KTreeConstruction) -> str:
    out = [" ".join(map(str, c.base_clique))]
    out.extend(f"{v}: {' '.join(map(str, cl))}" for v, cl in c.additions)
    return "\n".join(out) + "\n"


# decompositions


def parse_decomposition(text: str, source: str | None = None):
    from .decomposition import Decomposition, PartMeta

    parts: list[tuple[int, ...]] = []
    metas: list[PartMeta] = []
    for no, line in _lines(text):
        fields = [f.strip() for f in line.split(";")]
        if ":" not in fields[0]:
            raise ParseError("expected 'i: v1 v2 ... ; root=r ; bosses=h,j'", no, source)
        head, rest = fields[0].split(":", 1)
        (i,) = _ints([head.strip()], no, source)
        if i != len(parts):
            raise ParseError(f"part index {i} out of sequence, expected {len(parts)}", no, source)
        verts = tuple(_ints(rest.split(), no, source))
        if not verts:
            raise ParseError("empty part", no, source)
        root = None
        bosses: tuple[int, ...] = ()
        for f in fields[1:]:
            if "=" not in f:
                raise ParseError(f"malformed field {f!r}", no, source)
            key, val = (x.strip() for x in f.split("=", 1))
            if key == "root":
                (root,) = _ints([val], no, source)
            elif key == "bosses":
                bosses = tuple(_ints([b for b in val.split(",") if b.strip()], no, source))
            else:
                raise ParseError(f"unknown field {key!r}", no, source)
        parts.append(verts)
        metas.append(PartMeta(endpoints=(verts[0], verts[-1]), bosses=bosses, root=verts[-1] if root is None else root))
    return Decomposition(tuple(parts), tuple(metas))


def format_decomposition(h) -> str:
    out = []
    for i, (part, meta) in enumerate(zip(h.parts, h.meta)):
        out.append(f"{i}: {' '.join(map(str, part))} ; root={meta.root} ; bosses={','.join(map(str, meta.bosses))}")
    return "\n".join(out) + "\n"


# subcolourings


def parse_subcolouring(text: str, n: int | None = None, source: str | None = None) -> list[int]:
    colour: dict[int, int] = {}
    for no, line in _lines(text):
        vc = _ints(line.split(), no, source)
        if len(vc) != 2 or vc[1] < 0:
            raise ParseError("expected 'v colour'", no, source)
        if vc[0] in colour:
            raise ParseError(f"vertex {vc[0]} coloured twice", no, source)
        colour[vc[0]] = vc[1]
    size = n if n is not None else (max(colour) + 1 if colour else 0)
    if set(colour) != set(range(size)):
        raise ParseError(f"colouring must cover exactly 0..{size - 1}", None, source)
    return [colour[v] for v in range(size)]


def format_subcolouring(colour) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(colour))


# canonical JSON


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(d: dict) -> Graph:
    return Graph.from_edges(d["n"], [tuple(e) for e in d["edges"]])


def layering_to_json(lay: Layering) -> dict:
    return {"layers": [sorted(layer) for layer in lay.layers]}


def instance_to_json(inst) -> dict:
    d: dict[str, Any] = {
        "kind": inst.kind,
        "params": inst.params,
        "seed": inst.seed,
        "graph": graph_to_json(inst.graph),
    }
    if inst.plane is not None:
        d["rotation"] = [list(r) for r in inst.plane.rotation]
        d["outer"] = list(inst.plane.outer_face) if inst.plane.outer_face else None
    if inst.construction is not None:
        d["construction"] = {
            "base": list(inst.construction.base_clique),
            "additions": [[v, list(c)] for v, c in inst.construction.additions],
        }
    if inst.meta:
        d["meta"] = inst.meta
    return d


def instance_from_json(d: dict):
    from .generators import Instance

    g = graph_from_json(d["graph"])
    plane = None
    if "rotation" in d:
        outer = tuple(d["outer"]) if d.get("outer") else None
        plane = PlaneGraph(g, tuple(tuple(r) for r in d["rotation"]), outer)
    c = None
    if "construction" in d:
        c = KTreeConstruction(tuple(d["construction"]["base"]), tuple((v, tuple(cl)) for v, cl in d["construction"]["additions"]))
    return Instance(d["kind"], d["params"], d["seed"], g, plane, c, d.get("meta", {}))
