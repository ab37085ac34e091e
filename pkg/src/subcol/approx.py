"""Layer-by-layer subcolouring within a factor of two of the optimum."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded
from .graph import Graph, Layering, bfs_layering
from .orderings import VertexOrdering
from .subcolouring import Subcolouring, exact_subchromatic, greedy_colouring


@dataclass(frozen=True)
class ApproxResult:
    subcolouring: Subcolouring
    t: int
    layer_values: tuple[int, ...]
    guarantee_intact: bool
    layering: Layering
    fallback_layers: tuple[int, ...] = ()

    @property
    def palette(self) -> int:
        return self.subcolouring.palette

    def as_dict(self) -> dict:
        return {
            "palette": self.palette,
            "t": self.t,
            "layer_values": list(self.layer_values),
            "guarantee_intact": self.guarantee_intact,
            "fallback_layers": list(self.fallback_layers),
            "colour": list(self.subcolouring.colour),
        }


def degeneracy_ordering(g: Graph) -> VertexOrdering:
    """Smallest-last order, reversed so each vertex has few earlier neighbours."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    out = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        removed[v] = True
        out.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                deg[u] -= 1
    return VertexOrdering(tuple(reversed(out)))


def approx_subcolour(h: Graph, layer_budget: int = 18, node_budget: int | None = None) -> ApproxResult:
    """BFS layers, an exact subcolouring per layer, disjoint palettes for odd and even layers.

    Layers larger than ``layer_budget`` (or whose search exceeds
    ``node_budget``) get a proper greedy colouring instead, and the factor-two
    guarantee is then reported as lost.
    """
    lay = bfs_layering(h)
    values = []
    local: dict[int, int] = {}
    fallback = []
    for i, layer in enumerate(lay.layers):
        sub, old = h.induced(layer)
        try:
            val, f = exact_subchromatic(sub, max_n=layer_budget, node_budget=node_budget)
            cols = f.colour
        except BudgetExceeded:
            cols, _ = greedy_colouring(sub, degeneracy_ordering(sub))
            val = len(set(cols))
            fallback.append(i)
        values.append(val)
        for j, v in enumerate(old):
            local[v] = cols[j]
    t = max(values, default=0)
    colour = tuple(local[v] + (t if lay.assignment[v] % 2 else 0) for v in range(h.n))
    return ApproxResult(Subcolouring(colour), t, tuple(values), not fallback, lay, tuple(fallback))
