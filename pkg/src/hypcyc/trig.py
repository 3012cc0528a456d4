"""Isosceles-triangle trigonometry for a circle of radius J.

An isosceles triangle with two legs of length J and base d has apex angle
A_d(J) and base angles B_d(J).  Everything here is scalar and uses ``math``.

Writing P = sinh(J - d/2) sinh(J + d/2) = sinh^2 J - sinh^2(d/2), the
angles are evaluated as

    A = 2 atan2(sinh(d/2), sqrt(P))
    B = atan2(sqrt(P), sinh(d/2) cosh J)

which stays accurate near the degenerate triangle J = d/2 (where the
arccos forms lose half their digits) and, after scaling every term by
exp(-J), for J far beyond the overflow point of sinh.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import DomainError

#: Slack allowed below J = d/2 before an input is rejected.
BOUNDARY_SLACK = 1e-12

MODELS = ("disk", "uhp")
_MODEL_ALIASES = {"disk": "disk", "uhp": "uhp", "upper-half-plane": "uhp", "half-plane": "uhp"}


def _check(d: float, J: float) -> float:
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"side length must be positive and finite, got {d!r}")
    if not math.isfinite(J):
        raise DomainError(f"radius must be finite, got {J!r}")
    half = 0.5 * d
    if J < half - BOUNDARY_SLACK * max(1.0, d):
        raise DomainError(f"radius {J!r} is below half the side length {d!r}")
    return max(J, half)


def _scaled(d: float, J: float) -> tuple[float, float]:
    """Return (sinh(d/2), sqrt(P)) both multiplied by exp(-J)."""
    s = math.sinh(0.5 * d) * math.exp(-J)
    p = 0.5 * math.sqrt(max(0.0, math.expm1(d - 2.0 * J) * math.expm1(-d - 2.0 * J)))
    return s, p


def apex_angle(d: float, J: float) -> float:
    """Apex angle A_d(J) in (0, pi]; equals pi exactly at J = d/2."""
    J = _check(d, J)
    s, p = _scaled(d, J)
    return 2.0 * math.atan2(s, p)


def base_angle(d: float, J: float) -> float:
    """Base angle B_d(J) in [0, pi/2); equals 0 exactly at J = d/2."""
    J = _check(d, J)
    _, p = _scaled(d, J)
    # cosh(J) * exp(-J)
    c = 0.5 * (1.0 + math.exp(-2.0 * J))
    return math.atan2(p, math.sinh(0.5 * d) * c)


def half_apex_tan(d: float, J: float) -> float:
    """tan(A_d(J)/2) = sinh(d/2) / sqrt(sinh^2 J - sinh^2(d/2)); needs J > d/2."""
    J = _check(d, J)
    s, p = _scaled(d, J)
    if p == 0.0:
        raise DomainError("tan(A/2) is infinite at J = d/2")
    return s / p


def apex_angle_dJ(d: float, J: float) -> float:
    """Derivative of A_d with respect to J.  Always negative; diverges at J = d/2."""
    if not (math.isfinite(J) and J > 0.5 * d):
        _check(d, J)
        raise DomainError("derivative of the apex angle diverges at J = d/2")
    return -2.0 * half_apex_tan(d, J) / math.tanh(J)


def sector_defect(d: float, J: float, R: float) -> float:
    """pi - A_d(J) - 2 cosh(R) B_d(J).

    For R <= d/2 this is the area of the isosceles triangle with the two
    radius-R sectors at its base vertices removed.
    """
    if not (math.isfinite(R) and R >= 0):
        raise DomainError(f"R must be nonnegative, got {R!r}")
    return math.pi - apex_angle(d, J) - 2.0 * math.cosh(R) * base_angle(d, J)


def normalize_model(model: str) -> str:
    try:
        return _MODEL_ALIASES[model]
    except KeyError:
        raise DomainError(f"unknown model {model!r}; expected one of {MODELS}") from None


def model_distance(p: Sequence[float], q: Sequence[float], model: str = "disk") -> float:
    """Hyperbolic distance between two points of the Poincare disk or upper half-plane."""
    model = normalize_model(model)
    px, py = float(p[0]), float(p[1])
    qx, qy = float(q[0]), float(q[1])
    chord = math.hypot(px - qx, py - qy)
    if model == "disk":
        wp = 1.0 - (px * px + py * py)
        wq = 1.0 - (qx * qx + qy * qy)
        if not (wp > 0 and wq > 0):
            raise DomainError("disk points must lie strictly inside the unit circle")
        return 2.0 * math.asinh(chord / math.sqrt(wp * wq))
    if not (py > 0 and qy > 0):
        raise DomainError("half-plane points must have positive imaginary part")
    return 2.0 * math.asinh(chord / (2.0 * math.sqrt(py * qy)))
