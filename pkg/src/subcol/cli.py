"""Command-line entry point: ``subcol <command> [options]``.

Exit status is 0 on success, 1 when an input or a result fails validation and
2 when an exact search runs out of budget.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

from . import io as sio
from .approx import approx_subcolour, degeneracy_ordering
from .bounds import (
    CLASSES,
    VARIANTS,
    BoundSpec,
    gcol_bfs_bound,
    gcol_bound,
    path_bound,
    path_bound_floor,
    subchromatic_bound,
    wcol_bound,
)
from .decomposition import (
    decomposition_ordering,
    neat_reduction,
    reduction_ordering,
    triangulation_reduction,
    verify,
)
from .errors import BudgetExceeded, SubcolError
from .generators import KINDS, Instance, generate
from .graph import PlaneGraph, graph_power
from .orderings import (
    VertexOrdering,
    greach_sets,
    path_ordering,
    simplicial_ordering,
    subreach_sets,
)
from .report import FAMILY_ALIASES, THEOREMS, certify_family, to_json, to_tsv
from .subcolouring import exact_subchromatic, subcolour_power, verify_subcolouring

ORDER_SOURCES = ("identity", "degeneracy", "simplicial", "path", "reduction", "decomposition")
EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2


class ValidationFailure(SubcolError):
    """A checked object turned out invalid; maps to exit status 1."""


@dataclass
class RunConfig:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    family: str | None = None
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    fmt: str = "text"

    def validate(self) -> None:
        if "in" in self.inputs and self.family:
            raise SubcolError("--in and --family are mutually exclusive")
        if "rotation" in self.inputs and ("in" in self.inputs or self.family):
            raise SubcolError("--rotation already carries the graph; drop --in/--family")


# argument helpers


def _radius(text: str) -> int | float:
    if text.lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}") from None
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'inf', got {text!r}")
    return val


def _positive(text: str) -> int:
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return val


def _kv(text: str) -> tuple[str, Any]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    key, val = text.split("=", 1)
    for conv in (int, float):
        try:
            return key, conv(val)
        except ValueError:
            pass
    return key, val


def _add_input(p: argparse.ArgumentParser, plane: bool = True) -> None:
    g = p.add_argument_group("input")
    g.add_argument("--in", dest="inp", metavar="PATH", help="edge list, or instance JSON ('.json'); '-' reads stdin")
    if plane:
        g.add_argument("--rotation", metavar="PATH", help="rotation-system file for plane graphs")
    g.add_argument("--family", help=f"generate instead of reading; one of {', '.join(KINDS)}")
    g.add_argument("--n", type=int, help="size parameter for --family")
    g.add_argument("--param", type=_kv, action="append", default=[], metavar="KEY=VALUE", help="extra family parameters")
    g.add_argument("--seed", type=int, default=0)


def _add_order(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", metavar="PATH", help="ordering file")
    p.add_argument("--source", choices=ORDER_SOURCES, help="construct the ordering instead of reading it")
    p.add_argument("--ktree", metavar="PATH", help="k-tree construction file (for --source simplicial)")
    p.add_argument("--decomposition", metavar="PATH", help="decomposition file (for --source decomposition/reduction)")
    p.add_argument("--path-k", type=_positive, default=2, help="hop parameter of the path ordering")


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default=choices[0])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="subcol", description="Generalised colouring numbers and subcolourings of graph powers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a seeded instance")
    p.add_argument("--family", required=True, help=", ".join(KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--param", type=_kv, action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "edges", "rotation", "ktree"), default="json")

    p = sub.add_parser("power", help="write the d-th power as an edge list")
    _add_input(p)
    p.add_argument("--d", type=_positive, required=True)

    for name, helptext in (("gcol", "k-hop l-reach colouring number of an ordering"), ("semiweak", "semi-weak colouring number of an ordering")):
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        _add_order(p)
        if name == "gcol":
            p.add_argument("--k", type=_radius, required=True)
        p.add_argument("--l", type=_radius if name == "gcol" else _positive, required=True)
        p.add_argument("--budget", type=int, help="search-step budget for the reachability search")
        p.add_argument("--sets", action="store_true", help="also print every reach set")
        _add_format(p)

    p = sub.add_parser("order", help="construct an ordering and write it")
    _add_input(p)
    _add_order(p)

    p = sub.add_parser("reduce", help="build a (neat) reduction of a plane graph")
    _add_input(p)
    p.add_argument("--kind", choices=("auto", "triangulation", "neat"), default="auto")
    _add_format(p)

    p = sub.add_parser("subcolor", help="subcolour the d-th power from an ordering")
    _add_input(p)
    _add_order(p)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--no-bounds", action="store_true", help="skip the semiweak/gcol chain values")
    _add_format(p)

    p = sub.add_parser("exact", help="exact subchromatic number (small graphs)")
    _add_input(p)
    p.add_argument("--d", type=_positive, default=1, help="solve on the d-th power")
    p.add_argument("--max-n", type=int, default=18)
    p.add_argument("--node-budget", type=int)
    _add_format(p)

    p = sub.add_parser("approx", help="layered 2-approximation of the subchromatic number")
    _add_input(p)
    p.add_argument("--d", type=_positive, default=1, help="solve on the d-th power")
    p.add_argument("--layer-budget", type=int, default=18)
    p.add_argument("--node-budget", type=int)
    _add_format(p, ("json", "text"))

    p = sub.add_parser("verify", help="verify a decomposition or a subcolouring")
    _add_input(p)
    p.add_argument("--decomposition", metavar="PATH")
    p.add_argument("--colouring", "--coloring", dest="colouring", metavar="PATH")
    p.add_argument("--d", type=_positive, default=1, help="power on which the colouring is checked")
    p.add_argument(
        "--require",
        choices=("isometric", "neat", "reduction"),
        help="property a decomposition must have (default: reduction for triangulations, else isometric)",
    )
    _add_format(p, ("json", "text"))

    p = sub.add_parser("bounds", help="evaluate a closed-form bound")
    p.add_argument("--what", choices=("gcol", "wcol", "subchromatic", "gcol-bfs", "path"), default="gcol")
    p.add_argument("--class", dest="cls", help=f"{', '.join(CLASSES)} or planar (subchromatic)")
    for name in ("t", "g", "s", "k", "l", "d", "p"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--girth", type=_radius)
    p.add_argument("--variant", choices=VARIANTS, default="main")

    p = sub.add_parser("certify", help="certify a generated family against a bound")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--param", type=_kv, action="append", default=[], metavar="KEY=VALUE")
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--threads", type=_positive, help="worker cap (default: $SUBCOL_THREADS or all cores)")
    p.add_argument("--timings", action="store_true", help="add a runtime column (output no longer reproducible)")
    _add_format(p, ("tsv", "json"))
    return ap


# loading


def _family_params(args) -> dict[str, Any]:
    params = dict(args.param)
    if getattr(args, "n", None) is not None:
        params["n"] = args.n
    return params


def load_instance(args) -> Instance:
    cfg = RunConfig(args.command, family=args.family, seed=args.seed)
    if args.inp:
        cfg.inputs["in"] = args.inp
    if getattr(args, "rotation", None):
        cfg.inputs["rotation"] = args.rotation
    cfg.validate()
    if args.family:
        return generate(FAMILY_ALIASES.get(args.family, args.family), _family_params(args), args.seed)
    if getattr(args, "rotation", None):
        pg = sio.parse_rotation(sio.read_text(args.rotation), args.rotation)
        return Instance("file", {}, 0, pg.graph, pg)
    if not args.inp:
        raise SubcolError("no input: pass --in, --rotation or --family")
    name = "<stdin>" if args.inp == "-" else args.inp
    text = sio.read_text(args.inp)
    if args.inp.endswith(".json"):
        return sio.instance_from_json(json.loads(text))
    return Instance("file", {}, 0, sio.parse_edge_list(text, name))


def _echo(args, inst: Instance) -> str:
    if getattr(args, "family", None):
        return f"# family={inst.kind} params={','.join(f'{k}={inst.params[k]}' for k in sorted(inst.params))} seed={inst.seed}\n"
    return ""


def _plane(inst: Instance) -> PlaneGraph:
    if inst.plane is None:
        raise SubcolError("this operation needs an embedding (--rotation, a plane --family or instance JSON with a rotation)")
    return inst.plane


def _reduction(inst: Instance, kind: str = "auto"):
    pg = _plane(inst)
    if kind == "triangulation" or (kind == "auto" and pg.is_triangulation()):
        return triangulation_reduction(pg), "reduction"
    return neat_reduction(pg), "neat-reduction"


def load_ordering(args, inst: Instance) -> tuple[VertexOrdering, str]:
    g = inst.graph
    if args.order and args.source:
        raise SubcolError("--order and --source are mutually exclusive")
    if args.order:
        return sio.parse_ordering(sio.read_text(args.order), args.order), "file"
    src = args.source or "identity"
    if src == "identity":
        return VertexOrdering.identity(g.n), src
    if src == "degeneracy":
        return degeneracy_ordering(g), src
    if src == "path":
        return path_ordering(g.n, args.path_k), src
    if src == "simplicial":
        c = inst.construction
        if args.ktree:
            c = sio.parse_ktree(sio.read_text(args.ktree), args.ktree)
        if c is None:
            raise SubcolError("simplicial ordering needs --ktree or a random-k-tree family")
        c.check_against(g)
        return simplicial_ordering(c), src
    if args.decomposition:
        h = sio.parse_decomposition(sio.read_text(args.decomposition), args.decomposition)
        rep = verify(g, h)
        if not rep.is_isometric_path_decomp:
            raise ValidationFailure("decomposition invalid: " + "; ".join(rep.all_violations()))
    else:
        h, _ = _reduction(inst)
    if src == "reduction":
        return reduction_ordering(h, g), src
    return decomposition_ordering(g, h), src


def _fmt_radius(x) -> Any:
    return "inf" if x == math.inf else x


# commands


def cmd_generate(args, out) -> int:
    kind = FAMILY_ALIASES.get(args.family, args.family)
    inst = generate(kind, _family_params(args), args.seed)
    if args.format == "json":
        out.write(sio.dumps(sio.instance_to_json(inst)))
        return EXIT_OK
    out.write(_echo(args, inst))
    if args.format == "edges":
        out.write(sio.format_edge_list(inst.graph))
    elif args.format == "rotation":
        out.write(sio.format_rotation(_plane(inst)))
    else:
        if inst.construction is None:
            raise SubcolError(f"{kind} has no k-tree construction")
        out.write(sio.format_ktree(inst.construction))
    return EXIT_OK


def cmd_power(args, out) -> int:
    inst = load_instance(args)
    out.write(_echo(args, inst))
    out.write(sio.format_edge_list(graph_power(inst.graph, args.d)))
    return EXIT_OK


def cmd_reach(args, out) -> int:
    inst = load_instance(args)
    sigma, src = load_ordering(args, inst)
    g = inst.graph
    if args.command == "gcol":
        sets = greach_sets(g, sigma, args.k, args.l, budget=args.budget)
        label = {"k": _fmt_radius(args.k), "l": _fmt_radius(args.l)}
    else:
        sets = subreach_sets(g, sigma, args.l, budget=args.budget)
        label = {"l": args.l}
    val = max((len(s) for s in sets), default=0)
    if args.format == "json":
        doc = {"command": args.command, "value": val, "ordering": src, "n": g.n, **label}
        if args.family:
            doc["seed"] = inst.seed
        if args.sets:
            doc["sets"] = [sorted(s) for s in sets]
        out.write(sio.dumps(doc))
    else:
        out.write(_echo(args, inst))
        out.write(f"{val}\n")
        if args.sets:
            for v, s in enumerate(sets):
                out.write(f"{v}: {' '.join(map(str, sorted(s)))}\n")
    return EXIT_OK


def cmd_order(args, out) -> int:
    inst = load_instance(args)
    sigma, src = load_ordering(args, inst)
    out.write(_echo(args, inst))
    out.write(f"# source={src}\n")
    out.write(sio.format_ordering(sigma))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    inst = load_instance(args)
    h, kind = _reduction(inst, args.kind)
    rep = verify(inst.graph, h, _plane(inst) if kind == "reduction" else None)
    if args.format == "json":
        doc = {
            "kind": kind,
            "parts": [list(p) for p in h.parts],
            "roots": [m.root for m in h.meta],
            "bosses": [list(m.bosses) for m in h.meta],
            "width": rep.width,
            "is_neat": rep.is_neat,
            "is_reduction": rep.is_reduction,
        }
        if args.family:
            doc["seed"] = inst.seed
        out.write(sio.dumps(doc))
    else:
        out.write(_echo(args, inst))
        out.write(f"# {kind} width={rep.width} neat={rep.is_neat}\n")
        out.write(sio.format_decomposition(h))
    return EXIT_OK


def cmd_subcolor(args, out) -> int:
    inst = load_instance(args)
    sigma, src = load_ordering(args, inst)
    f, stats = subcolour_power(inst.graph, sigma, args.d, with_bounds=not args.no_bounds)
    ok, bad = verify_subcolouring(graph_power(inst.graph, args.d), f)
    if args.format == "json":
        doc = {"colour": list(f.colour), "stats": stats.as_dict(), "verified": ok, "ordering": src, "chain_holds": stats.chain_holds}
        if args.family:
            doc["seed"] = inst.seed
        out.write(sio.dumps(doc))
    else:
        out.write(_echo(args, inst))
        out.write("# " + " ".join(f"{k}={v}" for k, v in sorted(stats.as_dict().items())) + "\n")
        out.write(sio.format_subcolouring(f.colour))
    if not ok:
        raise ValidationFailure(f"produced colouring fails on path {bad}")
    return EXIT_OK


def cmd_exact(args, out) -> int:
    inst = load_instance(args)
    h = graph_power(inst.graph, args.d) if args.d > 1 else inst.graph
    k, f = exact_subchromatic(h, max_n=args.max_n, node_budget=args.node_budget)
    if args.format == "json":
        doc = {"value": k, "colour": list(f.colour), "d": args.d}
        if args.family:
            doc["seed"] = inst.seed
        out.write(sio.dumps(doc))
    else:
        out.write(_echo(args, inst))
        out.write(f"{k}\n")
    return EXIT_OK


def cmd_approx(args, out) -> int:
    inst = load_instance(args)
    h = graph_power(inst.graph, args.d) if args.d > 1 else inst.graph
    res = approx_subcolour(h, layer_budget=args.layer_budget, node_budget=args.node_budget)
    ok, bad = verify_subcolouring(h, res.subcolouring)
    if args.format == "json":
        doc = res.as_dict()
        doc["layers"] = sio.layering_to_json(res.layering)["layers"]
        doc["verified"] = ok
        if args.family:
            doc["seed"] = inst.seed
        out.write(sio.dumps(doc))
    else:
        out.write(_echo(args, inst))
        out.write(f"# palette={res.palette} t={res.t} guarantee_intact={res.guarantee_intact}\n")
        out.write(sio.format_subcolouring(res.subcolouring.colour))
    if not ok:
        raise ValidationFailure(f"produced colouring fails on path {bad}")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if bool(args.decomposition) == bool(args.colouring):
        raise SubcolError("pass exactly one of --decomposition or --colouring")
    inst = load_instance(args)
    g = inst.graph
    if args.decomposition:
        h = sio.parse_decomposition(sio.read_text(args.decomposition), args.decomposition)
        tri = inst.plane is not None and inst.plane.is_triangulation()
        rep = verify(g, h, inst.plane if tri else None)
        need = args.require or ("reduction" if tri else "isometric")
        if need == "reduction" and not tri:
            raise SubcolError("--require reduction needs a triangulation embedding")
        good = rep.is_valid and rep.is_isometric_path_decomp
        if need == "neat":
            good = good and rep.is_neat
        elif need == "reduction":
            good = good and bool(rep.is_reduction)
        doc = {
            "valid": rep.is_valid,
            "isometric": rep.is_isometric_path_decomp,
            "neat": rep.is_neat,
            "reduction": rep.is_reduction,
            "width": rep.width,
            "leaves": list(rep.leaves),
            "violations": rep.violations,
            "notes": list(rep.notes),
        }
    else:
        h = graph_power(g, args.d) if args.d > 1 else g
        colour = sio.parse_subcolouring(sio.read_text(args.colouring), h.n, args.colouring)
        good, bad = verify_subcolouring(h, colour)
        doc = {"valid": good, "palette": len(set(colour)), "witness": list(bad) if bad else None}
    if args.format == "json":
        out.write(sio.dumps(doc))
    else:
        out.write(("ok" if good else "invalid") + "\n")
        for key in ("violations",):
            for kind, msgs in doc.get(key, {}).items():
                for m in msgs:
                    out.write(f"{kind}: {m}\n")
        if doc.get("witness"):
            out.write(f"witness path: {' '.join(map(str, doc['witness']))}\n")
    return EXIT_OK if good else EXIT_INVALID


def cmd_bounds(args, out) -> int:
    what = args.what
    if what == "path":
        if args.k is None or args.l is None:
            raise SubcolError("path bound needs --k and --l")
        out.write(f"{path_bound(args.k, args.l)}\n")
        out.write(f"# floor form {path_bound_floor(args.k, args.l)}\n")
        return EXIT_OK
    if what == "gcol-bfs":
        if None in (args.p, args.t, args.k, args.l):
            raise SubcolError("gcol-bfs bound needs --p --t --k --l")
        out.write(f"{gcol_bfs_bound(args.p, args.t, args.k, args.l)}\n")
        return EXIT_OK
    if not args.cls:
        raise SubcolError("--class is required")
    if what == "subchromatic":
        if args.d is None:
            raise SubcolError("subchromatic bound needs --d")
        params = {k: getattr(args, k) for k in ("t", "g", "s") if getattr(args, k) is not None}
        out.write(f"{subchromatic_bound(args.cls, args.d, args.girth, args.variant, **params)}\n")
        return EXIT_OK
    spec = BoundSpec(args.cls, t=args.t, g=args.g, s=args.s, k=args.k, l=args.l)
    val = gcol_bound(spec, args.variant) if what == "gcol" else wcol_bound(spec)
    out.write(f"{val}\n")
    return EXIT_OK


def cmd_certify(args, out) -> int:
    params = _family_params(args)
    options = {k: getattr(args, k) for k in ("k", "l", "d") if getattr(args, k) is not None}
    certs = certify_family(args.theorem, args.family, params, args.count, args.seed, options, args.threads)
    out.write(to_json(certs, args.timings) if args.format == "json" else to_tsv(certs, args.timings))
    return EXIT_INVALID if any(c.hard and not c.passed for c in certs) else EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "power": cmd_power,
    "gcol": cmd_reach,
    "semiweak": cmd_reach,
    "order": cmd_order,
    "reduce": cmd_reduce,
    "subcolor": cmd_subcolor,
    "exact": cmd_exact,
    "approx": cmd_approx,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "certify": cmd_certify,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceeded as exc:
        print(f"subcol: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SubcolError, OSError) as exc:
        print(f"subcol: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
