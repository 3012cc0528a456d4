"""Which side-length tuples bound which kind of cyclic polygon.

Fix every side but the longest one, d_i0, and let the remaining n-1 sides
be ``rest``.  As d_i0 grows from max(rest), the polygon is centered until
d_i0 = b0(rest), where the center lands on the midpoint of the longest side;
it is then non-centered until d_i0 = h0(rest), where the circumradius has
gone to infinity and the vertices lie on a horocycle.  Past h0 no polygon
exists.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import trig
from ._roots import bracketed_newton
from .errors import DomainError

DEFAULT_TOL = 1e-12


class Kind(str, enum.Enum):
    NOT_REALIZABLE = "not-realizable"
    HOROCYCLIC = "horocyclic"
    NON_CENTERED = "non-centered"
    BOUNDARY_CENTERED = "boundary-centered"
    CENTERED = "centered"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PolygonClass:
    """Region of a tuple; ``index`` is the longest side for every kind but CENTERED."""

    kind: Kind
    index: Optional[int] = None

    @property
    def is_cyclic(self) -> bool:
        return self.kind in (Kind.CENTERED, Kind.BOUNDARY_CENTERED, Kind.NON_CENTERED)

    @property
    def in_centered_closure(self) -> bool:
        return self.kind in (Kind.CENTERED, Kind.BOUNDARY_CENTERED)

    def __str__(self) -> str:
        return self.kind.value if self.index is None else f"{self.kind.value}({self.index})"


@dataclass(frozen=True)
class CanonicalForm:
    """Least tuple in the dihedral orbit, plus the symmetry that produced it.

    ``representative == apply_symmetry(d, rotation, reflected)``.
    """

    representative: tuple[float, ...]
    rotation: int
    reflected: bool


def as_sides(d: Iterable[float]) -> tuple[float, ...]:
    """Validate a side-length tuple: n >= 3 positive finite entries."""
    sides = tuple(float(x) for x in d)
    if len(sides) < 3:
        raise DomainError(f"need at least 3 sides, got {len(sides)}")
    for x in sides:
        if not (math.isfinite(x) and x > 0):
            raise DomainError(f"side lengths must be positive and finite, got {x!r}")
    return sides


def _as_rest(rest: Iterable[float]) -> tuple[float, ...]:
    r = tuple(float(x) for x in rest)
    if len(r) < 2:
        raise DomainError("need at least 2 remaining sides")
    for x in r:
        if not (math.isfinite(x) and x > 0):
            raise DomainError(f"side lengths must be positive and finite, got {x!r}")
    return r


def argmax(d: Sequence[float]) -> int:
    """Index of the longest side; the smallest such index on ties."""
    best = 0
    for i in range(1, len(d)):
        if d[i] > d[best]:
            best = i
    return best


def split_longest(d: Sequence[float]) -> tuple[int, float, tuple[float, ...]]:
    """(i0, d[i0], other sides in cyclic order starting after i0)."""
    n = len(d)
    i0 = argmax(d)
    rest = tuple(d[(i0 + k) % n] for k in range(1, n))
    return i0, d[i0], rest


def h0(rest: Iterable[float]) -> float:
    """Longest-side length at which the polygon becomes horocyclic."""
    r = _as_rest(rest)
    return 2.0 * math.asinh(math.fsum(math.sinh(0.5 * x) for x in r))


def b0(rest: Iterable[float]) -> float:
    """Longest-side length at which the circumcenter reaches that side.

    Solves sum_i A_{d_i}(J) = pi for J and returns 2J.
    """
    r = _as_rest(rest)

    def fdf(J: float) -> tuple[float, float]:
        f = math.fsum(trig.apex_angle(x, J) for x in r) - math.pi
        df = 0.0
        for x in r:
            if J <= 0.5 * x:
                return f, -math.inf
            df += trig.apex_angle_dJ(x, J)
        return f, df

    lo = 0.5 * max(r)
    hi = 0.5 * h0(r)
    f_lo = fdf(lo)[0]
    f_hi = fdf(hi)[0]
    while f_hi > 0:
        # should not happen; widen defensively
        hi *= 2.0
        f_hi = fdf(hi)[0]
    root = bracketed_newton(fdf, lo, hi, f_lo, f_hi)
    return 2.0 * root.x


def b0_closed_n3(d1: float, d2: float) -> float:
    """b0 for triangles: sinh(B0/2)^2 = sinh(d1/2)^2 + sinh(d2/2)^2."""
    s1, s2 = math.sinh(0.5 * d1), math.sinh(0.5 * d2)
    return 2.0 * math.asinh(math.hypot(s1, s2))


def b0_closed_n4(d1: float, d2: float, d3: float) -> float:
    """b0 for quadrilaterals from the positive root of x^3 - p x - q = 0.

    Here x = sinh(B0/2), p = s1^2 + s2^2 + s3^2, q = 2 s1 s2 s3 and
    s_i = sinh(d_i/2).  All three roots are real, so the largest one is taken
    in trigonometric form.
    """
    s1, s2, s3 = (math.sinh(0.5 * x) for x in (d1, d2, d3))
    p = s1 * s1 + s2 * s2 + s3 * s3
    q = 2.0 * s1 * s2 * s3
    m = math.sqrt(p / 3.0)
    c = min(1.0, q / (2.0 * m ** 3))
    x = 2.0 * m * math.cos(math.acos(c) / 3.0)
    return 2.0 * math.asinh(x)


def is_cyclic_realizable(d: Iterable[float], tol: float = DEFAULT_TOL) -> bool:
    """True when the longest side is strictly shorter than h0 of the others.

    ``tol`` is the same relative band used by :func:`classify`, so a tuple
    sitting on h0 up to rounding counts as horocyclic, not cyclic.
    """
    sides = as_sides(d)
    i0, dmax, rest = split_longest(sides)
    return dmax < h0(rest) - tol * max(1.0, dmax)


def classify(d: Iterable[float], tol: float = DEFAULT_TOL) -> PolygonClass:
    sides = as_sides(d)
    i0, dmax, rest = split_longest(sides)
    band = tol * max(1.0, dmax)
    H0 = h0(rest)
    if dmax > H0 + band:
        return PolygonClass(Kind.NOT_REALIZABLE)
    if abs(dmax - H0) <= band:
        return PolygonClass(Kind.HOROCYCLIC, i0)
    B0 = b0(rest)
    if dmax < B0 - band:
        return PolygonClass(Kind.CENTERED)
    if abs(dmax - B0) <= band:
        return PolygonClass(Kind.BOUNDARY_CENTERED, i0)
    return PolygonClass(Kind.NON_CENTERED, i0)


def apply_symmetry(d: Sequence[float], rotation: int, reflected: bool) -> tuple[float, ...]:
    """Reflect (i -> -i mod n) if asked, then rotate (i -> i + rotation)."""
    n = len(d)
    src = [d[(-i) % n] for i in range(n)] if reflected else list(d)
    return tuple(src[(i + rotation) % n] for i in range(n))


def canonicalize(d: Iterable[float]) -> CanonicalForm:
    sides = as_sides(d)
    n = len(sides)
    best: Optional[CanonicalForm] = None
    for reflected in (False, True):
        for k in range(n):
            img = apply_symmetry(sides, k, reflected)
            if best is None or img < best.representative:
                best = CanonicalForm(img, k, reflected)
    assert best is not None
    return best


def congruent(a: Iterable[float], b: Iterable[float], tol: float = DEFAULT_TOL) -> bool:
    """Whether two tuples bound isometric polygons (same dihedral orbit)."""
    a, b = as_sides(a), as_sides(b)
    if len(a) != len(b):
        return False
    ra = canonicalize(a).representative
    # compare against every image of b so near-ties in the ordering cannot split an orbit
    for reflected in (False, True):
        for k in range(len(b)):
            img = apply_symmetry(b, k, reflected)
            if all(abs(x - y) <= tol for x, y in zip(ra, img)):
                return True
    return False
