"""Polygon angles and the radius-R defect, with their side-length derivatives.

Side d_i runs from vertex x_{i-1} to vertex x_i.  Joining the center to
the endpoints of side i gives an isosceles triangle with apex angle
alpha_i = A_{d_i}(J) and base angles beta_i = B_{d_i}(J).  The interior
angle at x_i is nu_i = beta_i + beta_{i+1}, except that in a non-centered
polygon the triangle on the long side i0 lies outside the polygon, so
beta_{i0} enters nu_{i0-1} and nu_{i0} with a minus sign.

The radius-R defect is (n - 2) pi - cosh(R) * sum(nu).  At R = 0 it is the
area of the polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import trig
from .errors import DomainError, NotRealizableError
from .params import (
    DEFAULT_TOL,
    Kind,
    PolygonClass,
    argmax,
    as_sides,
    classify,
    h0,
)
from .solver import solve_radius


@dataclass(frozen=True)
class AngleData:
    alpha: tuple[float, ...]
    beta: tuple[float, ...]
    nu: tuple[float, ...]
    polygon_class: PolygonClass
    J: Optional[float]  # None for horocyclic tuples


@dataclass(frozen=True)
class Jacobian:
    """Partial derivatives with respect to the side lengths.

    Matrix entries are ``[i, j] = d(quantity_i) / d(d_j)``.  On the boundary
    between the centered and non-centered regions alpha and beta of the long
    side have one-sided derivatives of opposite sign; ``dAlpha`` and ``dBeta``
    then hold the centered-side values and ``one_sided`` maps each side's
    name to its (dAlpha, dBeta) pair.
    """

    dJ: np.ndarray
    dAlpha: np.ndarray
    dBeta: np.ndarray
    dNu: np.ndarray
    dDefect: np.ndarray
    R: float
    polygon_class: PolygonClass
    one_sided: Optional[dict[str, tuple[np.ndarray, np.ndarray]]] = None


@dataclass(frozen=True)
class IsoscelesFan:
    """The triangles joining the center to each side.

    mode "interior-union": the triangles tile the polygon.
    mode "exterior-triangle": the polygon together with triangle ``long_index``
    is tiled by the others.
    """

    apex_angles: tuple[float, ...]
    base_angles: tuple[float, ...]
    J: float
    mode: str
    long_index: Optional[int]


def _nu_signs(n: int, cls: PolygonClass) -> list[float]:
    s = [1.0] * n
    if cls.kind in (Kind.NON_CENTERED, Kind.HOROCYCLIC):
        s[cls.index] = -1.0
    return s


def _assemble_nu(beta: Sequence[float], sign: Sequence[float]) -> tuple[float, ...]:
    n = len(beta)
    return tuple(sign[i] * beta[i] + sign[(i + 1) % n] * beta[(i + 1) % n] for i in range(n))


def _classify_cyclic(sides: tuple[float, ...], tol: float) -> PolygonClass:
    cls = classify(sides, tol)
    if cls.kind == Kind.NOT_REALIZABLE:
        raise NotRealizableError("no cyclic polygon with these side lengths")
    return cls


# below this gap pi - alpha the long side's angles come from the other sides
NEAR_FLAT = 0.1


def _fan_angles(sides: Sequence[float], J: float, cls: PolygonClass) -> tuple[list[float], list[float]]:
    """alpha_i and beta_i at radius J.

    When the long side's triangle is nearly flat, J - d/2 is lost to rounding
    and B_d(J) picks up an error of order sqrt(eps).  Its angles are then
    recovered from the others: pi - alpha_{i0} = |pi - sum_{j != i0} alpha_j|
    and sin(beta) sinh(d) = sin(alpha) sinh(J).
    """
    alpha = [trig.apex_angle(x, J) for x in sides]
    beta = [trig.base_angle(x, J) for x in sides]
    if cls.kind not in (Kind.CENTERED, Kind.NON_CENTERED):
        return alpha, beta
    i0 = cls.index if cls.index is not None else argmax(sides)
    if math.pi - alpha[i0] >= NEAR_FLAT:
        return alpha, beta
    rest = math.fsum(a for i, a in enumerate(alpha) if i != i0)
    gap = max(0.0, rest - math.pi if cls.kind == Kind.CENTERED else math.pi - rest)
    d = sides[i0]
    # sinh(J) / sinh(d) without overflow
    ratio = math.exp(J - d) * -math.expm1(-2.0 * J) / -math.expm1(-2.0 * d)
    alpha[i0] = math.pi - gap
    beta[i0] = math.asin(min(1.0, ratio * math.sin(gap)))
    return alpha, beta


def horocyclic_beta(d: float) -> float:
    """Limit of B_d(J) as J grows without bound."""
    return math.asin(1.0 / math.cosh(0.5 * d))


def angles(d: Iterable[float], tol: float = DEFAULT_TOL) -> AngleData:
    sides = as_sides(d)
    cls = _classify_cyclic(sides, tol)
    n = len(sides)
    if cls.kind == Kind.HOROCYCLIC:
        alpha = (0.0,) * n
        beta = tuple(horocyclic_beta(x) for x in sides)
        J = None
    else:
        J = solve_radius(sides, cls).J
        alpha, beta = map(tuple, _fan_angles(sides, J, cls))
    nu = _assemble_nu(beta, _nu_signs(n, cls))
    return AngleData(alpha, beta, nu, cls, J)


def defect_from_angles(a: AngleData, R: float) -> float:
    if not (math.isfinite(R) and R >= 0):
        raise DomainError(f"R must be nonnegative, got {R!r}")
    n = len(a.nu)
    return (n - 2) * math.pi - math.cosh(R) * math.fsum(a.nu)


def defect(d: Iterable[float], R: float, tol: float = DEFAULT_TOL) -> float:
    """Radius-R defect (n - 2) pi - cosh(R) sum(nu)."""
    return defect_from_angles(angles(d, tol), R)


def jacobian(d: Iterable[float], R: float, tol: float = DEFAULT_TOL) -> Jacobian:
    sides = as_sides(d)
    if not (math.isfinite(R) and R >= 0):
        raise DomainError(f"R must be nonnegative, got {R!r}")
    cls = _classify_cyclic(sides, tol)
    if cls.kind == Kind.HOROCYCLIC:
        raise DomainError("the derivative is undefined on horocyclic tuples")
    n = len(sides)
    dv = np.array(sides)
    J = solve_radius(sides, cls).J
    alpha, beta = _fan_angles(sides, J, cls)
    coth_half = 1.0 / np.tanh(0.5 * dv)
    # sqrt(1/cosh^2(d/2) - 1/cosh^2 J) = sin(beta) tanh(J)
    rate = np.sin(beta) * math.tanh(J)
    coshR = math.cosh(R)
    eye = np.eye(n)

    if cls.kind == Kind.BOUNDARY_CENTERED:
        i0 = cls.index
        others = [i for i in range(n) if i != i0]
        t = np.zeros(n)
        t[others] = [trig.half_apex_tan(sides[i], J) for i in others]
        dJ = 0.5 * eye[i0]
        dAlpha = -2.0 / math.tanh(J) * np.outer(t, dJ) + np.diag(t * coth_half)
        row = dAlpha[others].sum(axis=0)
        dAlpha_c, dAlpha_nc = dAlpha.copy(), dAlpha.copy()
        dAlpha_c[i0], dAlpha_nc[i0] = -row, row
        dBeta_c = -dAlpha_c / (2.0 * math.cosh(J)) - 0.5 * np.diag(rate)
        dBeta_nc = -dAlpha_nc / (2.0 * math.cosh(J)) - 0.5 * np.diag(rate)
        dNu = dBeta_c + np.roll(dBeta_c, -1, axis=0)
        dDefect = coshR * rate
        dDefect[i0] = 0.0
        return Jacobian(
            dJ, dAlpha_c, dBeta_c, dNu, dDefect, R, cls,
            one_sided={"centered": (dAlpha_c, dBeta_c), "non-centered": (dAlpha_nc, dBeta_nc)},
        )

    sign = np.array(_nu_signs(n, cls))
    t = np.tan(0.5 * np.array(alpha))
    dJ = sign * coth_half * math.tanh(J) * t / (2.0 * float(np.dot(sign, t)))
    dAlpha = -2.0 / math.tanh(J) * np.outer(t, dJ) + np.diag(t * coth_half)
    i0 = cls.index if cls.index is not None else argmax(sides)
    if math.pi - alpha[i0] < NEAR_FLAT:
        # the direct row is a huge tan times a cancelling bracket; differentiate
        # sum(alpha) = 2 pi or alpha_{i0} = sum of the others instead
        row = np.delete(dAlpha, i0, axis=0).sum(axis=0)
        dAlpha[i0] = row if cls.kind == Kind.NON_CENTERED else -row
    dBeta = -dAlpha / (2.0 * math.cosh(J)) - 0.5 * np.diag(rate)
    signed = sign[:, None] * dBeta
    dNu = signed + np.roll(signed, -1, axis=0)
    dDefect = coshR * sign * rate
    return Jacobian(dJ, dAlpha, dBeta, dNu, dDefect, R, cls)


def isosceles_fan(d: Iterable[float], tol: float = DEFAULT_TOL) -> IsoscelesFan:
    sides = as_sides(d)
    cls = _classify_cyclic(sides, tol)
    if cls.kind == Kind.HOROCYCLIC:
        raise DomainError("a horocyclic polygon has no center to fan from")
    J = solve_radius(sides, cls).J
    alpha, beta = _fan_angles(sides, J, cls)
    mode = "exterior-triangle" if cls.kind == Kind.NON_CENTERED else "interior-union"
    return IsoscelesFan(
        tuple(alpha),
        tuple(beta),
        J,
        mode,
        cls.index if cls.kind == Kind.NON_CENTERED else None,
    )


def monotone_path(
    d: Iterable[float], d_prime: Iterable[float], steps: int, tol: float = DEFAULT_TOL
) -> list[tuple[float, ...]]:
    """Path d_i(t) = clamp(min(d) + t, d_i, d'_i), sampled at steps + 1 points.

    Both ends must be in the centered closure with d <= d' entrywise.  The
    interior of the path then stays centered and the defect never decreases
    along it.
    """
    a, b = as_sides(d), as_sides(d_prime)
    if len(a) != len(b):
        raise DomainError("endpoints must have the same number of sides")
    if any(x > y for x, y in zip(a, b)):
        raise DomainError("the end tuple must dominate the start tuple entrywise")
    for end in (a, b):
        if not classify(end, tol).in_centered_closure:
            raise DomainError(f"{end} is not in the centered closure")
    if int(steps) != steps or steps < 1:
        raise DomainError("steps must be a positive integer")
    lo = min(a)
    span = max(b) - lo
    path = []
    for k in range(steps + 1):
        level = lo + span * k / steps
        path.append(tuple(min(max(level, x), y) for x, y in zip(a, b)))
    path[-1] = b
    return path


def horocyclic_defect(sides: Sequence[float], long_index: int, R: float) -> float:
    """Defect of a horocyclic tuple with the given long side."""
    n = len(sides)
    others = math.fsum(horocyclic_beta(x) for i, x in enumerate(sides) if i != long_index)
    return (n - 2) * math.pi + 2.0 * math.cosh(R) * (horocyclic_beta(sides[long_index]) - others)


def defect_lower_bound_horocyclic(lower_sides: Iterable[float], R: float) -> float:
    """Defect of the horocyclic polygon whose short sides are ``lower_sides``.

    Any non-centered tuple whose short sides dominate ``lower_sides`` has a
    strictly larger defect.
    """
    rest = tuple(float(x) for x in lower_sides)
    if not (math.isfinite(R) and R >= 0):
        raise DomainError(f"R must be nonnegative, got {R!r}")
    return horocyclic_defect((h0(rest),) + rest, 0, R)


def min_defect_bc3(B0: float, d_min: float, R: float) -> tuple[tuple[float, float], float]:
    """Smallest defect over triangles (B0, d, d') on the centered boundary with d, d' >= d_min.

    Returns the minimizing pair (d_min, d') and the defect there.
    """
    if not (B0 > 0 and d_min > 0 and math.isfinite(B0) and math.isfinite(d_min)):
        raise DomainError("B0 and d_min must be positive")
    if not (0 <= R <= 0.5 * d_min):
        raise DomainError("need 0 <= R <= d_min/2")
    c = math.cosh(B0) - math.cosh(d_min) + 1.0
    if c < math.cosh(d_min) * (1.0 - 1e-15):
        raise DomainError("need cosh(B0) >= 2 cosh(d_min) - 1")
    d_other = math.acosh(max(c, math.cosh(d_min)))
    J = 0.5 * B0
    beta = trig.base_angle(d_min, J) + trig.base_angle(d_other, J)
    return (d_min, d_other), math.pi - 2.0 * math.cosh(R) * beta
