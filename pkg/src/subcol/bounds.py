"""Closed-form upper bounds on generalised colouring numbers and subchromatic numbers.

All arithmetic is on Python integers, so every value is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import SubcolError

CLASSES = (
    "treewidth",
    "simple-treewidth",
    "genus",
    "Kt-minor-free",
    "K*2t-minor-free",
    "K*3t-minor-free",
    "K*st-minor-free",
)
VARIANTS = ("main", "alt")

# girth threshold -> bound for squares of planar graphs, strongest first
PLANAR_SQUARE_BY_GIRTH = ((17, 9), (13, 18), (11, 23), (10, 33), (3, 43))
PLANAR_CUBE = 95


class UnsupportedBound(SubcolError, ValueError):
    """No formula for the requested class/parameter combination."""


@dataclass(frozen=True)
class BoundSpec:
    cls: str
    t: int | None = None
    g: int | None = None
    s: int | None = None
    k: int | None = None
    l: int | None = None

    def __post_init__(self) -> None:
        if self.cls not in CLASSES:
            raise UnsupportedBound(f"unknown class {self.cls!r}; expected one of {', '.join(CLASSES)}")
        for name in ("t", "s", "k", "l"):
            val = getattr(self, name)
            if val is not None and val < 1:
                raise UnsupportedBound(f"parameter {name} must be positive, got {val}")
        if self.g is not None and self.g < 0:
            raise UnsupportedBound("genus must be nonnegative")

    def need(self, *names: str) -> tuple[int, ...]:
        missing = [x for x in names if getattr(self, x) is None]
        if missing:
            raise UnsupportedBound(f"{self.cls} bound needs parameters {missing}")
        return tuple(getattr(self, x) for x in names)


def ceil_log2(x: int) -> int:
    if x < 1:
        raise UnsupportedBound("logarithm of a non-positive number")
    return (x - 1).bit_length()


def _min_t(spec: BoundSpec, t: int, lo: int) -> None:
    if t < lo:
        raise UnsupportedBound(f"{spec.cls} needs t >= {lo}, got {t}")


def gcol_bound(spec: BoundSpec, variant: str = "main") -> int:
    """Upper bound on gcol_{k,l} for the class; ``variant='alt'`` uses the alternative low-order terms."""
    if variant not in VARIANTS:
        raise UnsupportedBound(f"unknown variant {variant!r}")
    k, l = spec.need("k", "l")
    if k > l:
        raise UnsupportedBound(f"bounds assume k <= l, got k={k}, l={l}")
    alt = variant == "alt"
    c = spec.cls
    if c == "treewidth":
        (t,) = spec.need("t")
        return comb(t + k, t)
    if c == "simple-treewidth":
        (t,) = spec.need("t")
        return (k + 1) ** (t - 1) * (ceil_log2(k) + 2 * (l // k))
    if c == "genus":
        (g,) = spec.need("g")
        head = (2 * g + comb(k + 2, 2) - 1) * (2 * l + 1)
        return head + (k + 1 if alt else l + 1)
    if c == "Kt-minor-free":
        (t,) = spec.need("t")
        _min_t(spec, t, 4)
        head = (comb(t + k - 2, t - 2) - 1) * (t - 3) * (2 * l + 1)
        return head + ((t - 3) * (k + 1) if alt else (t - 3) * l + 1)
    if c == "K*2t-minor-free":
        (t,) = spec.need("t")
        _min_t(spec, t, 4 if alt else 2)
        return (t - 1) * (k * (2 * l + 2) + 1) if alt else (t - 1) * (k * (2 * l + 1) + l) + 1
    if c == "K*3t-minor-free":
        (t,) = spec.need("t")
        if alt:
            _min_t(spec, t, 4)
        head = (comb(k + 2, 2) - 1) * (2 * t + 1) * (2 * l + 1)
        return head + ((2 * t + 1) * (k + 1) if alt else (2 * t + 1) * l + 1)
    if c == "K*st-minor-free":
        s, t = spec.need("s", "t")
        _min_t(spec, t, 4 if alt else 2)
        head = s * (t - 1) * comb(s + k, s) * (2 * l + 1)
        return head - 2 * l + k if alt else head - l
    raise UnsupportedBound(c)


def wcol_bound(spec: BoundSpec) -> int:
    """Upper bound on wcol_l for the class (only ``l`` is used)."""
    (l,) = spec.need("l")
    c = spec.cls
    if c == "treewidth":
        (t,) = spec.need("t")
        return comb(t + l, t)
    if c == "simple-treewidth":
        (t,) = spec.need("t")
        return (l + 1) ** (t - 1) * (ceil_log2(l) + 2)
    if c == "genus":
        (g,) = spec.need("g")
        return (2 * g + comb(l + 2, 2)) * (2 * l + 1)
    if c == "Kt-minor-free":
        (t,) = spec.need("t")
        _min_t(spec, t, 4)
        return comb(t + l - 2, t - 2) * (t - 3) * (2 * l + 1)
    if c == "K*2t-minor-free":
        (t,) = spec.need("t")
        _min_t(spec, t, 2)
        return (t - 1) * (l + 1) * (2 * l + 1)
    if c == "K*3t-minor-free":
        (t,) = spec.need("t")
        return (2 * t + 1) * comb(l + 2, 2) * (2 * l + 1)
    if c == "K*st-minor-free":
        s, t = spec.need("s", "t")
        _min_t(spec, t, 2)
        return s * (t - 1) * comb(s + l, s) * (2 * l + 1)
    raise UnsupportedBound(c)


def power_radius(d: int) -> int:
    """Path length used for the d-th power: 2d for even d, 2d-1 for odd d."""
    if d < 1:
        raise UnsupportedBound("power d must be positive")
    return 2 * d if d % 2 == 0 else 2 * d - 1


def planar_square_bound(girth: float) -> int:
    for threshold, bound in PLANAR_SQUARE_BY_GIRTH:
        if girth >= threshold:
            return bound
    raise UnsupportedBound(f"girth {girth} below 3")


def subchromatic_bound(cls: str, d: int, girth: float | None = None, variant: str = "main", **params) -> int:
    """Best available upper bound on the subchromatic number of the d-th power.

    ``cls`` is ``planar`` or any class accepted by :class:`BoundSpec`; its
    parameters (``t``, ``g``, ``s``) are passed as keywords.
    """
    if cls == "planar":
        if d == 2:
            return planar_square_bound(3 if girth is None else girth)
        if d == 3:
            return PLANAR_CUBE
        return gcol_bound(BoundSpec("genus", g=0, k=d, l=power_radius(d)), variant)
    return gcol_bound(BoundSpec(cls, k=d, l=power_radius(d), **params), variant)


def gcol_bfs_bound(p: int, t: int, k: int, l: int) -> int:
    """Bound for orderings built from a connected decomposition of width t with parts of at most p leaves."""
    if min(p, t, k, l) < 1 or k > l:
        raise UnsupportedBound("need positive p, t, k, l with k <= l")
    return p * (comb(t + k, t) - 1) * (2 * l + 1) + p * l + 1


def path_bound(k: int, l: int) -> int:
    """Certified bound for the modular path ordering."""
    return ceil_log2(k) + 2 * -(-l // k) + 1


def path_bound_floor(k: int, l: int) -> int:
    """Floor form of the path bound, reported next to observed values."""
    return ceil_log2(k) + 2 * (l // k)
