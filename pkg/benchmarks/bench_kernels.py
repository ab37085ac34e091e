"""Time the compiled reachability kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 300] [--repeat 3] [--seed 1]

Both implementations are imported directly, so the environment switch is not
needed. Results are checked for equality before any timing is printed.
"""

from __future__ import annotations

import argparse
import time

from subcol import _pykernels
from subcol.decomposition import reduction_ordering, triangulation_reduction
from subcol.generators import generate

try:
    from subcol import _ckernels
except ImportError:
    _ckernels = None

CASES = (
    ("gcol", 1, 4),
    ("gcol", 2, 4),
    ("gcol", 3, 5),
    ("gcol", 4, 4),
    ("semiweak", None, 4),
    ("semiweak", None, 5),
)


def _run(mod, indptr, indices, pos, kind, k, l):
    if kind == "gcol":
        return mod.gcol_value(indptr, indices, pos, k, l)
    return mod.semiweak_value(indptr, indices, pos, l)


def best_of(fn, repeat):
    best = float("inf")
    val = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        val = fn()
        best = min(best, time.perf_counter() - t0)
    return val, best


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    inst = generate("random-plane-triangulation", {"n": args.n}, args.seed)
    sigma = reduction_ordering(triangulation_reduction(inst.plane))
    indptr, indices = inst.graph.csr
    pos = sigma.pos_array
    print(f"# plane triangulation n={args.n} seed={args.seed}, reduction ordering, best of {args.repeat}")
    if _ckernels is None:
        print("# compiled kernels not built; timing the Python kernels only")
    print(f"{'quantity':<14}{'value':>7}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for kind, k, l in CASES:
        label = f"gcol_{k},{l}" if kind == "gcol" else f"semiweak_{l}"
        pv, pt = best_of(lambda: _run(_pykernels, indptr, indices, pos, kind, k, l), args.repeat)
        if _ckernels is None:
            print(f"{label:<14}{pv:>7}{pt:>11.4f}{'-':>11}{'-':>9}")
            continue
        cv, ct = best_of(lambda: _run(_ckernels, indptr, indices, pos, kind, k, l), args.repeat)
        if cv != pv:
            raise SystemExit(f"{label}: kernels disagree ({pv} vs {cv})")
        print(f"{label:<14}{pv:>7}{pt:>11.4f}{ct:>11.4f}{pt / ct:>8.1f}x")


if __name__ == "__main__":
    main()
