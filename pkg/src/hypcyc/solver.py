"""Circumradius of a cyclic polygon from its side lengths.

Each side d_i subtends the central angle A_{d_i}(J).  A centered polygon
closes up around its center, so the angles sum to 2 pi.  In a non-centered
one the longest side subtends the same angle as all the other sides
together.  Either equation has a unique root J >= max(d)/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import trig
from ._roots import bracketed_newton
from .errors import DomainError, NotRealizableError, RadiusDivergesError
from .params import DEFAULT_TOL, Kind, PolygonClass, as_sides, classify

#: Past this radius the tuple is treated as numerically horocyclic.
J_CAP = 700.0

CENTERED_SUM = "centered-sum"
NONCENTERED_BALANCE = "noncentered-balance"
BOUNDARY_EXACT = "boundary-exact"


@dataclass(frozen=True)
class RadiusResult:
    J: float
    equation_used: str
    residual: float
    iterations: int
    polygon_class: PolygonClass


def _signs(n: int, cls: PolygonClass) -> tuple[list[float], float]:
    """Coefficients s_i and constant c of the equation sum s_i A_{d_i}(J) = c."""
    if cls.kind == Kind.NON_CENTERED:
        s = [-1.0] * n
        s[cls.index] = 1.0
        return s, 0.0
    return [1.0] * n, 2.0 * math.pi


def branch_residual(d: Sequence[float], J: float, cls: PolygonClass) -> float:
    """Signed residual of the defining equation of the branch selected by ``cls``."""
    s, c = _signs(len(d), cls)
    return math.fsum(si * trig.apex_angle(x, J) for si, x in zip(s, d)) - c


def solve_radius(
    d: Sequence[float], cls: PolygonClass, method: str = "newton"
) -> RadiusResult:
    """Radius of a tuple whose class is already known."""
    if cls.kind == Kind.NOT_REALIZABLE:
        raise NotRealizableError("no cyclic polygon with these side lengths")
    if cls.kind == Kind.HOROCYCLIC:
        raise RadiusDivergesError("radius diverges: the tuple is horocyclic")
    if method not in ("newton", "bisect"):
        raise DomainError(f"unknown method {method!r}")
    n = len(d)
    lo = 0.5 * max(d)
    if cls.kind == Kind.BOUNDARY_CENTERED:
        J = 0.5 * d[cls.index]
        return RadiusResult(J, BOUNDARY_EXACT, branch_residual(d, J, cls), 0, cls)

    s, c = _signs(n, cls)
    use_derivative = method == "newton"

    def fdf(J: float) -> tuple[float, float]:
        f = math.fsum(si * trig.apex_angle(x, J) for si, x in zip(s, d)) - c
        if not use_derivative:
            return f, math.nan
        if J <= lo:
            return f, -math.inf
        return f, sum(si * trig.apex_angle_dJ(x, J) for si, x in zip(s, d))

    f_lo = fdf(lo)[0]
    hi = max(2.0 * lo, 1e-300)
    f_hi = fdf(hi)[0]
    while f_hi >= 0:
        if hi >= J_CAP:
            raise RadiusDivergesError(
                f"radius diverges: no root below J = {J_CAP:g} (numerically horocyclic)"
            )
        lo, f_lo = hi, f_hi
        hi = min(2.0 * hi, J_CAP)
        f_hi = fdf(hi)[0]
    # the angles can all be tiny near the horocyclic limit, so no absolute
    # residual threshold is safe; iterate to the bracket width instead
    root = bracketed_newton(fdf, lo, hi, f_lo, f_hi, ftol=0.0, maxiter=400)
    eq = NONCENTERED_BALANCE if cls.kind == Kind.NON_CENTERED else CENTERED_SUM
    return RadiusResult(root.x, eq, branch_residual(d, root.x, cls), root.iterations, cls)


def radius(d: Iterable[float], tol: float = DEFAULT_TOL, method: str = "newton") -> RadiusResult:
    """Circumradius J of the cyclic polygon with side lengths ``d``.

    Raises NotRealizableError when no such polygon exists and
    RadiusDivergesError for horocyclic tuples.
    """
    sides = as_sides(d)
    return solve_radius(sides, classify(sides, tol), method)


def _half_sinhs(ds: Sequence[float]) -> list[float]:
    return [math.sinh(0.5 * float(x)) for x in ds]


def _triangle_factors(s: Sequence[float]) -> float:
    total = math.fsum(s)
    prod = 1.0
    for si in s:
        prod *= total - 2.0 * si
    return prod


def radius_closed_tri(d0: float, d1: float, d2: float) -> float:
    """Closed-form circumradius of a cyclic triangle."""
    s = _half_sinhs(as_sides((d0, d1, d2)))
    den = math.fsum(s) * _triangle_factors(s)
    if not den > 0:
        raise NotRealizableError("no cyclic triangle with these side lengths")
    return math.asinh(2.0 * s[0] * s[1] * s[2] / math.sqrt(den))


def radius_closed_quad(d0: float, d1: float, d2: float, d3: float) -> float:
    """Closed-form circumradius of a cyclic quadrilateral."""
    s0, s1, s2, s3 = _half_sinhs(as_sides((d0, d1, d2, d3)))
    den = _triangle_factors((s0, s1, s2, s3))
    if not den > 0:
        raise NotRealizableError("no cyclic quadrilateral with these side lengths")
    num = (s0 * s1 + s2 * s3) * (s0 * s2 + s1 * s3) * (s0 * s3 + s1 * s2)
    return math.asinh(2.0 * math.sqrt(num / den))


def quad_diagonal(d0: float, d1: float, d2: float, d3: float) -> float:
    """Diagonal of a cyclic quadrilateral joining the ends of side pair (d0, d1).

    It splits the polygon into the triangles (d0, d1, D) and (d2, d3, D).
    Sides must be ordered so that sinh^2(d0/2) + sinh^2(d1/2) is at least
    sinh^2(d2/2) + sinh^2(d3/2).
    """
    s0, s1, s2, s3 = _half_sinhs(as_sides((d0, d1, d2, d3)))
    if not _triangle_factors((s0, s1, s2, s3)) > 0:
        raise NotRealizableError("no cyclic quadrilateral with these side lengths")
    left, right = s0 * s0 + s1 * s1, s2 * s2 + s3 * s3
    if left < right * (1.0 - 1e-12):
        raise DomainError("reorder the sides so that the first pair has the larger sinh^2 sum")
    num = s2 * s3 * left + s0 * s1 * right
    return 2.0 * math.asinh(math.sqrt(num / (s2 * s3 + s0 * s1)))


def radius_regular(n: int, d: float) -> float:
    """Circumradius of the regular n-gon with side d."""
    if int(n) != n or n < 3:
        raise DomainError(f"n must be an integer >= 3, got {n!r}")
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"side length must be positive and finite, got {d!r}")
    return math.asinh(math.sinh(0.5 * d) / math.sin(math.pi / n))
