# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reachability kernels, result-identical to ``_pykernels``."""

from .errors import BudgetExceeded

IMPLEMENTATION = "cython"

# shifts must happen on Python ints, not C ints
cdef object ONE = 1


cdef class _Relaxation:
    # walk-reachability bitmasks keyed by (x, m, hops_left, steps_left)
    cdef const int[:] indptr
    cdef const int[:] indices
    cdef const int[:] pos
    cdef dict memo
    cdef long n, kk, ll

    def __init__(self, indptr, indices, pos, long k, long l):
        self.indptr = indptr
        self.indices = indices
        self.pos = pos
        self.memo = {}
        self.n = len(pos)
        self.kk = k + 1
        self.ll = l + 1

    cdef object get(self, int x, int m, long hl, long sl):
        if hl <= 0 or sl <= 0:
            return 0
        cdef long key = ((x * self.n + m) * self.kk + hl) * self.ll + sl
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        cdef int pm = self.pos[m]
        cdef int i, y
        acc = 0
        for i in range(self.indptr[x], self.indptr[x + 1]):
            y = self.indices[i]
            if self.pos[y] < pm:
                acc |= (ONE << y) | self.get(y, y, hl - 1, sl - 1)
            else:
                acc |= self.get(y, m, hl, sl - 1)
        self.memo[key] = acc
        return acc


cdef class _GSearch:
    cdef const int[:] indptr
    cdef const int[:] indices
    cdef const int[:] pos
    cdef unsigned char[:] on_path
    cdef unsigned char[:] seen
    cdef object found
    cdef _Relaxation relax
    cdef long k, l, left

    def __init__(self, indptr, indices, pos, long k, long l, long budget, _Relaxation relax):
        self.indptr = indptr
        self.indices = indices
        self.pos = pos
        self.on_path = bytearray(len(pos))
        self.seen = bytearray(len(pos))
        self.k = k
        self.l = l
        self.left = budget
        self.relax = relax
        self.found = 0

    cdef void _tick(self) except *:
        if self.left >= 0:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("reachability search exceeded its step budget")

    cdef void dfs(self, int x, int m, long h, long s) except *:
        cdef int i, y, pm
        self._tick()
        if (self.relax.get(x, m, self.k - h, self.l - s) & ~self.found) == 0:
            return
        pm = self.pos[m]
        for i in range(self.indptr[x], self.indptr[x + 1]):
            y = self.indices[i]
            if self.on_path[y]:
                continue
            if self.pos[y] < pm:
                if not self.seen[y]:
                    self.seen[y] = 1
                    self.found |= ONE << y
                if h + 1 < self.k and s + 1 < self.l:
                    self.on_path[y] = 1
                    self.dfs(y, y, h + 1, s + 1)
                    self.on_path[y] = 0
            elif s + 1 < self.l:
                self.on_path[y] = 1
                self.dfs(y, m, h, s + 1)
                self.on_path[y] = 0

    cdef list run(self, int v):
        cdef int i
        cdef int n = len(self.pos)
        self.found = ONE << v
        for i in range(n):
            self.seen[i] = 0
        self.seen[v] = 1
        self.on_path[v] = 1
        if self.l > 0:
            self.dfs(v, v, 0, 0)
        self.on_path[v] = 0
        return [i for i in range(n) if self.seen[i]]


cdef class _SSearch:
    cdef const int[:] indptr
    cdef const int[:] indices
    cdef const int[:] pos
    cdef unsigned char[:] on_path
    cdef unsigned char[:] seen
    cdef long k, half, left
    cdef int py

    def __init__(self, indptr, indices, pos, long k, long budget):
        self.indptr = indptr
        self.indices = indices
        self.pos = pos
        self.on_path = bytearray(len(pos))
        self.seen = bytearray(len(pos))
        self.k = k
        self.half = (k + 1) // 2
        self.left = budget

    cdef void dfs(self, int x, int pmin, long s, long run, bint high) except *:
        cdef int i, z, pz
        cdef long cap
        cdef bint still
        if self.left >= 0:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("reachability search exceeded its step budget")
        cap = self.k if high else min(self.k, run + self.half)
        if s >= cap:
            return
        for i in range(self.indptr[x], self.indptr[x + 1]):
            z = self.indices[i]
            if self.on_path[z]:
                continue
            pz = self.pos[z]
            if pz < pmin and run >= s + 1 - self.half:
                self.seen[z] = 1
            if s + 1 < cap:
                still = high and pz > self.py
                self.on_path[z] = 1
                self.dfs(z, pz if pz < pmin else pmin, s + 1, run + 1 if still else run, still)
                self.on_path[z] = 0

    cdef list run(self, int y):
        cdef int i
        cdef int n = len(self.pos)
        for i in range(n):
            self.seen[i] = 0
        self.seen[y] = 1
        self.on_path[y] = 1
        self.py = self.pos[y]
        if self.k > 0:
            self.dfs(y, self.py, 0, 0, True)
        self.on_path[y] = 0
        return [i for i in range(n) if self.seen[i]]


cdef tuple _clamp(long n, long k, long l):
    l = min(l, max(n - 1, 0))
    if l > 0:
        k = min(k, l)
    return k, l


cdef long _b(budget):
    return -1 if budget is None or budget < 0 else budget


def greach(indptr, indices, pos, int v, long k, long l, budget=None, _relax=None):
    n = len(pos)
    k, l = _clamp(n, k, l)
    if l == 0:
        return [v]
    relax = _relax if _relax is not None else _Relaxation(indptr, indices, pos, k, l)
    return _GSearch(indptr, indices, pos, k, l, _b(budget), relax).run(v)


def subreach(indptr, indices, pos, int y, long k, budget=None):
    n = len(pos)
    k = min(k, max(n - 1, 0))
    if k == 0:
        return [y]
    return _SSearch(indptr, indices, pos, k, _b(budget)).run(y)


def gcol_value(indptr, indices, pos, long k, long l, long cutoff=-1, budget=None):
    cdef long n = len(pos)
    cdef long best = 0, size
    cdef int v
    k, l = _clamp(n, k, l)
    if l == 0:
        return 1 if n else 0
    relax = _Relaxation(indptr, indices, pos, k, l)
    for v in range(n):
        size = len(_GSearch(indptr, indices, pos, k, l, _b(budget), relax).run(v))
        if size > best:
            best = size
            if 0 <= cutoff < best:
                break
    return best


def semiweak_value(indptr, indices, pos, long k, long cutoff=-1, budget=None):
    cdef long n = len(pos)
    cdef long best = 0, size
    cdef int v
    k = min(k, max(n - 1, 0))
    for v in range(n):
        if k == 0:
            size = 1
        else:
            size = len(_SSearch(indptr, indices, pos, k, _b(budget)).run(v))
        if size > best:
            best = size
            if 0 <= cutoff < best:
                break
    return best


def greach_all(indptr, indices, pos, long k, long l, budget=None):
    n = len(pos)
    k, l = _clamp(n, k, l)
    if l == 0:
        return [[v] for v in range(n)]
    relax = _Relaxation(indptr, indices, pos, k, l)
    return [_GSearch(indptr, indices, pos, k, l, _b(budget), relax).run(v) for v in range(n)]


def subreach_all(indptr, indices, pos, long k, budget=None):
    return [subreach(indptr, indices, pos, v, k, budget) for v in range(len(pos))]
