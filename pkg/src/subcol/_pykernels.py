"""Pure-Python reachability kernels.

Mirror of the compiled ``_ckernels`` module with identical signatures and
results. All functions take the graph in CSR form (``indptr``, ``indices``) and
an ordering as ``pos[v]`` = rank of ``v``.

Witness paths are simple paths, so the searches below enumerate simple paths
depth-first. ``greach`` prunes a branch once a walk-based relaxation shows that
nothing new can be reached from it; walks can only have fewer prefix minima
than the paths they contain, so the relaxation over-approximates.
"""

from __future__ import annotations

from .errors import BudgetExceeded

IMPLEMENTATION = "python"


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = -1 if budget is None or budget < 0 else budget

    def tick(self):
        if self.left >= 0:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("reachability search exceeded its step budget")


class _Relaxation:
    """Lazily memoised walk-reachability sets, shared by all roots of one call.

    ``get(x, m, hops_left, steps_left)`` is a bitmask of every vertex that can
    end a walk from ``x`` as a fresh prefix minimum below ``m``.
    """

    def __init__(self, indptr, indices, pos):
        self.indptr = indptr
        self.indices = indices
        self.pos = pos
        self.memo = {}

    def get(self, x, m, hl, sl):
        if hl <= 0 or sl <= 0:
            return 0
        key = (x, m, hl, sl)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        pos = self.pos
        pm = pos[m]
        acc = 0
        for i in range(self.indptr[x], self.indptr[x + 1]):
            y = self.indices[i]
            if pos[y] < pm:
                acc |= (1 << y) | self.get(y, y, hl - 1, sl - 1)
            else:
                acc |= self.get(y, m, hl, sl - 1)
        self.memo[key] = acc
        return acc


def _clamp(n, k, l):
    l = min(l, max(n - 1, 0))
    k = min(k, l) if l > 0 else k
    return k, l


def greach(indptr, indices, pos, v, k, l, budget=None, _relax=None):
    """Vertices k-hop l-reachable from ``v`` (``v`` included), sorted."""
    n = len(pos)
    k, l = _clamp(n, k, l)
    if l == 0:
        return [v]
    relax = _relax if _relax is not None else _Relaxation(indptr, indices, pos)
    tick = _Budget(budget).tick
    found = 1 << v
    on_path = bytearray(n)
    on_path[v] = 1

    def dfs(x, m, h, s):
        nonlocal found
        tick()
        if (relax.get(x, m, k - h, l - s) & ~found) == 0:
            return
        pm = pos[m]
        for i in range(indptr[x], indptr[x + 1]):
            y = indices[i]
            if on_path[y]:
                continue
            if pos[y] < pm:
                found |= 1 << y
                if h + 1 < k and s + 1 < l:
                    on_path[y] = 1
                    dfs(y, y, h + 1, s + 1)
                    on_path[y] = 0
            elif s + 1 < l:
                on_path[y] = 1
                dfs(y, m, h, s + 1)
                on_path[y] = 0

    dfs(v, v, 0, 0)
    return _bits(found)


def subreach(indptr, indices, pos, y, k, budget=None):
    """Vertices semi-weakly k-reached by ``y`` (``y`` included), sorted.

    Walks the witness path backwards from ``y``. ``run`` counts the leading
    steps whose vertices all lie above ``y``; a vertex at step ``s`` qualifies
    when it is below everything before it and ``run >= s - ceil(k/2)``.
    """
    n = len(pos)
    k = min(k, max(n - 1, 0))
    if k == 0:
        return [y]
    half = (k + 1) // 2
    tick = _Budget(budget).tick
    found = 1 << y
    on_path = bytearray(n)
    on_path[y] = 1
    py = pos[y]

    def dfs(x, pmin, s, run, high):
        nonlocal found
        tick()
        cap = k if high else min(k, run + half)
        if s >= cap:
            return
        for i in range(indptr[x], indptr[x + 1]):
            z = indices[i]
            if on_path[z]:
                continue
            pz = pos[z]
            if pz < pmin and run >= s + 1 - half:
                found |= 1 << z
            if s + 1 < cap:
                still = high and pz > py
                on_path[z] = 1
                dfs(z, pz if pz < pmin else pmin, s + 1, run + 1 if still else run, still)
                on_path[z] = 0

    dfs(y, py, 0, 0, True)
    return _bits(found)


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def gcol_value(indptr, indices, pos, k, l, cutoff=-1, budget=None):
    """max_v |greach(v)|; stops early once the running max exceeds ``cutoff``."""
    n = len(pos)
    ck, cl = _clamp(n, k, l)
    relax = _Relaxation(indptr, indices, pos)
    best = 0
    for v in range(n):
        size = len(greach(indptr, indices, pos, v, ck, cl, budget, _relax=relax))
        if size > best:
            best = size
            if 0 <= cutoff < best:
                break
    return best


def semiweak_value(indptr, indices, pos, k, cutoff=-1, budget=None):
    n = len(pos)
    best = 0
    for v in range(n):
        size = len(subreach(indptr, indices, pos, v, k, budget))
        if size > best:
            best = size
            if 0 <= cutoff < best:
                break
    return best


def greach_all(indptr, indices, pos, k, l, budget=None):
    n = len(pos)
    ck, cl = _clamp(n, k, l)
    relax = _Relaxation(indptr, indices, pos)
    return [greach(indptr, indices, pos, v, ck, cl, budget, _relax=relax) for v in range(n)]


def subreach_all(indptr, indices, pos, k, budget=None):
    return [subreach(indptr, indices, pos, v, k, budget) for v in range(len(pos))]
