"""Certification runs: build an ordering for an instance, measure, compare to a formula."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from .bounds import (
    PLANAR_CUBE,
    BoundSpec,
    gcol_bfs_bound,
    gcol_bound,
    path_bound,
    path_bound_floor,
    planar_square_bound,
)
from .decomposition import decomposition_ordering, neat_reduction, reduction_ordering, triangulation_reduction, verify
from .errors import SubcolError
from .generators import Instance, generate
from .graph import graph_power, girth
from .orderings import (
    VertexOrdering,
    gcol_of_ordering,
    path_ordering,
    semiweak_of_ordering,
    simplicial_ordering,
)
from .subcolouring import subcolour_power, verify_subcolouring

COLUMNS = ("instance", "class", "params", "ordering", "quantity", "computed", "bound", "pass", "hard", "seed", "n")

FAMILY_ALIASES = {
    "plane-triangulation": "random-plane-triangulation",
    "triangulation": "random-plane-triangulation",
    "k-tree": "random-k-tree",
    "subdivided": "subdivided-triangulation",
}


@dataclass
class Certification:
    instance: str
    cls: str
    params: str
    ordering: str
    quantity: str
    computed: int
    bound: int
    passed: bool
    hard: bool = True
    seed: int = 0
    n: int = 0
    runtime: float = field(default=0.0, compare=False)

    def row(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "class": self.cls,
            "params": self.params,
            "ordering": self.ordering,
            "quantity": self.quantity,
            "computed": self.computed,
            "bound": self.bound,
            "pass": self.passed,
            "hard": self.hard,
            "seed": self.seed,
            "n": self.n,
        }


def _params(d: dict) -> str:
    return ",".join(f"{k}={d[k]}" for k in sorted(d))


def _cert(inst: Instance, cls: str, params: dict, ordering: str, quantity: str, computed: int, bound: int, hard=True, t0=0.0) -> Certification:
    return Certification(
        instance=f"{inst.kind}[{_params(inst.params)}]#{inst.seed}",
        cls=cls,
        params=_params(params),
        ordering=ordering,
        quantity=quantity,
        computed=int(computed),
        bound=int(bound),
        passed=computed <= bound,
        hard=hard,
        seed=inst.seed,
        n=inst.graph.n,
        runtime=time.perf_counter() - t0,
    )


def planar_ordering(inst: Instance) -> tuple[VertexOrdering, str, Any]:
    """Reduction ordering for triangulations, neat-reduction ordering otherwise."""
    if inst.plane is None:
        raise SubcolError(f"{inst.kind} instance carries no embedding")
    if inst.plane.is_triangulation():
        h = triangulation_reduction(inst.plane)
        return reduction_ordering(h), "reduction", h
    h = neat_reduction(inst.plane)
    return reduction_ordering(h), "neat-reduction", h


# one function per theorem; each returns a list of certifications


def cert_treewidth(inst: Instance, k: int = 2, l: int | None = None, **_) -> list[Certification]:
    if inst.construction is None:
        raise SubcolError("treewidth certification needs a k-tree construction")
    t0 = time.perf_counter()
    t = inst.construction.k
    l = k if l is None else l
    sigma = simplicial_ordering(inst.construction)
    val = gcol_of_ordering(inst.graph, sigma, k, l)
    bound = gcol_bound(BoundSpec("treewidth", t=t, k=k, l=l))
    return [_cert(inst, "treewidth", {"t": t, "k": k, "l": l}, "simplicial", f"gcol_{k},{l}", val, bound, t0=t0)]


def cert_girth_bounds(inst: Instance, **_) -> list[Certification]:
    t0 = time.perf_counter()
    sigma, source, _h = planar_ordering(inst)
    gr = girth(inst.graph)
    bound = planar_square_bound(gr)
    val = semiweak_of_ordering(inst.graph, sigma, 4)
    gtxt = "inf" if gr == float("inf") else int(gr)
    return [_cert(inst, "planar", {"girth": gtxt}, source, "semiweak_4", val, bound, t0=t0)]


def cert_square_colouring(inst: Instance, **_) -> list[Certification]:
    t0 = time.perf_counter()
    sigma, source, _h = planar_ordering(inst)
    gr = girth(inst.graph)
    f, stats = subcolour_power(inst.graph, sigma, 2, with_bounds=False)
    ok, _ = verify_subcolouring(graph_power(inst.graph, 2), f)
    gtxt = "inf" if gr == float("inf") else int(gr)
    c = _cert(inst, "planar", {"girth": gtxt, "d": 2}, source, "colours", stats.colours_used, planar_square_bound(gr), t0=t0)
    c.passed = c.passed and ok
    return [c]


def cert_planar_cube(inst: Instance, **_) -> list[Certification]:
    t0 = time.perf_counter()
    sigma, source, _h = planar_ordering(inst)
    f, stats = subcolour_power(inst.graph, sigma, 3, with_bounds=False)
    ok, _ = verify_subcolouring(graph_power(inst.graph, 3), f)
    sw5 = semiweak_of_ordering(inst.graph, sigma, 5)
    hard = _cert(inst, "planar", {"d": 3}, source, "colours_vs_semiweak_5", stats.colours_used, sw5, t0=t0)
    hard.passed = hard.passed and ok
    soft = _cert(inst, "planar", {"d": 3}, source, "semiweak_5", sw5, PLANAR_CUBE, hard=False, t0=t0)
    return [hard, soft]


def cert_semiweak_chain(inst: Instance, d: int = 2, sigma: VertexOrdering | None = None, **_) -> list[Certification]:
    t0 = time.perf_counter()
    sigma = sigma or VertexOrdering.identity(inst.graph.n)
    f, st = subcolour_power(inst.graph, sigma, d)
    ok, _ = verify_subcolouring(graph_power(inst.graph, d), f)
    a = _cert(inst, "any", {"d": d}, "given", "colours_vs_semiweak", st.colours_used, st.semiweak_bound, t0=t0)
    a.passed = a.passed and ok
    b = _cert(inst, "any", {"d": d}, "given", "semiweak_vs_gcol", st.semiweak_bound, st.gcol_bound, t0=t0)
    return [a, b]


def cert_path(inst: Instance, k: int = 2, l: int = 2, **_) -> list[Certification]:
    t0 = time.perf_counter()
    n = inst.graph.n
    sigma = path_ordering(n, k)
    val = gcol_of_ordering(inst.graph, sigma, k, l)
    c = _cert(inst, "path", {"k": k, "l": l, "floor_form": path_bound_floor(k, l)}, "path-modular", f"gcol_{k},{l}", val, path_bound(k, l), t0=t0)
    return [c]


def cert_gcol_bfs(inst: Instance, k: int = 2, l: int = 4, **_) -> list[Certification]:
    t0 = time.perf_counter()
    _, source, h = planar_ordering(inst)
    rep = verify(inst.graph, h)
    p = max(rep.leaves) if rep.leaves else 1
    width = max(rep.width, 1)
    sigma = decomposition_ordering(inst.graph, h)
    val = gcol_of_ordering(inst.graph, sigma, k, l)
    bound = gcol_bfs_bound(p, width, k, l)
    return [_cert(inst, "decomposition", {"p": p, "t": width, "k": k, "l": l}, source + "-bfs", f"gcol_{k},{l}", val, bound, t0=t0)]


THEOREMS: dict[str, Callable[..., list[Certification]]] = {
    "treewidth": cert_treewidth,
    "girth-bounds": cert_girth_bounds,
    "square-colouring": cert_square_colouring,
    "planar-cube": cert_planar_cube,
    "semiweak-chain": cert_semiweak_chain,
    "path": cert_path,
    "gcol-bfs": cert_gcol_bfs,
}


def _run_one(job: tuple[str, str, dict, int, dict]) -> list[Certification]:
    theorem, kind, params, seed, options = job
    inst = generate(kind, params, seed)
    return THEOREMS[theorem](inst, **options)


def certify_family(
    theorem: str,
    kind: str,
    params: dict,
    count: int,
    seed: int,
    options: dict | None = None,
    threads: int | None = None,
) -> list[Certification]:
    """Certify ``count`` generated instances with seeds ``seed, seed+1, ...``.

    Results come back in seed order whatever the thread count.
    """
    if theorem not in THEOREMS:
        raise SubcolError(f"unknown theorem {theorem!r}; expected one of {', '.join(sorted(THEOREMS))}")
    kind = FAMILY_ALIASES.get(kind, kind)
    jobs = [(theorem, kind, dict(params), seed + i, dict(options or {})) for i in range(count)]
    workers = default_threads() if threads is None else max(1, threads)
    if workers == 1 or len(jobs) <= 1:
        results = [_run_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            results = list(pool.map(_run_one, jobs))
    return [c for chunk in results for c in chunk]


def default_threads() -> int:
    env = os.environ.get("SUBCOL_THREADS")
    if env:
        return max(1, int(env))
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1))


def to_tsv(certs: list[Certification], timings: bool = False) -> str:
    cols = COLUMNS + (("runtime",) if timings else ())
    lines = ["\t".join(cols)]
    for c in certs:
        row = c.row()
        vals = [str(row[k]).lower() if isinstance(row[k], bool) else str(row[k]) for k in COLUMNS]
        if timings:
            vals.append(f"{c.runtime:.4f}")
        lines.append("\t".join(vals))
    return "\n".join(lines) + "\n"


def to_json(certs: list[Certification], timings: bool = False) -> str:
    rows = []
    for c in certs:
        r = c.row()
        if timings:
            r["runtime"] = round(c.runtime, 4)
        rows.append(r)
    summary = {
        "total": len(certs),
        "passed": sum(c.passed for c in certs),
        "hard_failures": sum(1 for c in certs if c.hard and not c.passed),
        "soft_exceedances": sum(1 for c in certs if not c.hard and not c.passed),
    }
    return json.dumps({"results": rows, "summary": summary}, sort_keys=True, indent=2) + "\n"


def as_dicts(certs: list[Certification]) -> list[dict]:
    return [asdict(c) for c in certs]
