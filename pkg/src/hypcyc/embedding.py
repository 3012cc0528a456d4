"""Vertex coordinates in the Poincare disk or the upper half-plane, plus JSON/SVG output.

A cyclic polygon is placed with its circumcenter at the origin of the disk
and vertex x_0 on the positive real axis.  Walking around the circle, side i
advances the polar angle by alpha_i, except the long side of a non-centered
polygon, which steps back by alpha_{i0}: its chord spans the same arc as all
the other sides together.  The half-plane picture is the image under the
Cayley map sending the origin to i.

A horocyclic polygon is placed on the horocycle y = 1 of the half-plane,
where two points at Euclidean distance l are at hyperbolic distance
2 asinh(l/2).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import trig
from .errors import DomainError, NotRealizableError
from .params import DEFAULT_TOL, Kind, PolygonClass, as_sides, classify, h0
from .solver import solve_radius

Point = tuple[float, float]


@dataclass(frozen=True)
class Embedding:
    model: str  # "disk" or "uhp"
    sides: tuple[float, ...]
    polygon_class: PolygonClass
    vertices: tuple[Point, ...]  # vertices[i] joins side i to side i + 1
    center: Optional[Point]
    J: Optional[float]


def disk_to_uhp(w: complex) -> complex:
    return 1j * (1 + w) / (1 - w)


def uhp_to_disk(z: complex) -> complex:
    return (z - 1j) / (z + 1j)


def _points(points: Iterable[complex]) -> tuple[Point, ...]:
    return tuple((z.real, z.imag) for z in points)


def embed_cyclic(d: Iterable[float], model: str = "disk", tol: float = DEFAULT_TOL) -> Embedding:
    sides = as_sides(d)
    model = trig.normalize_model(model)
    cls = classify(sides, tol)
    if cls.kind == Kind.NOT_REALIZABLE:
        raise NotRealizableError("no cyclic polygon with these side lengths")
    if cls.kind == Kind.HOROCYCLIC:
        raise DomainError("horocyclic tuple: use embed_horocyclic")
    J = solve_radius(sides, cls).J
    r = math.tanh(0.5 * J)
    theta = 0.0
    pts = [complex(r, 0.0)]
    for i in range(1, len(sides)):
        a = trig.apex_angle(sides[i], J)
        theta += -a if (cls.kind == Kind.NON_CENTERED and i == cls.index) else a
        pts.append(complex(r * math.cos(theta), r * math.sin(theta)))
    center = 0j
    if model == "uhp":
        pts = [disk_to_uhp(w) for w in pts]
        center = 1j
    return Embedding(model, sides, cls, _points(pts), (center.real, center.imag), J)


def embed_horocyclic(rest: Iterable[float], model: str = "uhp") -> Embedding:
    """Horocyclic polygon with short sides ``rest``; its long side is side 0."""
    r = tuple(float(x) for x in rest)
    model = trig.normalize_model(model)
    sides = as_sides((h0(r),) + r)
    xs = [0.0]
    acc = []
    for x in r:
        acc.append(2.0 * math.sinh(0.5 * x))
        xs.append(math.fsum(acc))
    pts = [complex(x, 1.0) for x in xs]
    if model == "disk":
        pts = [uhp_to_disk(z) for z in pts]
    return Embedding(model, sides, PolygonClass(Kind.HOROCYCLIC, 0), _points(pts), None, None)


def embed(d: Iterable[float], model: str = "disk", tol: float = DEFAULT_TOL) -> Embedding:
    """Embed any realizable tuple, cyclic or horocyclic, keeping its side order."""
    sides = as_sides(d)
    cls = classify(sides, tol)
    if cls.kind != Kind.HOROCYCLIC:
        return embed_cyclic(sides, model, tol)
    n, i0 = len(sides), cls.index
    rest = tuple(sides[(i0 + k) % n] for k in range(1, n))
    e = embed_horocyclic(rest, model)
    verts = tuple(e.vertices[(i - i0) % n] for i in range(n))
    return Embedding(e.model, sides, cls, verts, None, None)


def side_lengths(e: Embedding) -> tuple[float, ...]:
    """Distances between consecutive vertices: entry i is |x_{i-1} x_i|."""
    v = e.vertices
    return tuple(trig.model_distance(v[i - 1], v[i], e.model) for i in range(len(v)))


# ---------------------------------------------------------------- output


def to_json(e: Embedding) -> str:
    doc = {
        "model": e.model,
        "sides": list(e.sides),
        "class": str(e.polygon_class),
        "radius": e.J,
        "center": list(e.center) if e.center is not None else None,
        "vertices": [list(p) for p in e.vertices],
    }
    # float repr is the shortest string that round-trips
    return json.dumps(doc)


def _geodesic_circle(p: complex, q: complex, model: str) -> Optional[tuple[complex, float]]:
    """Euclidean circle carrying the geodesic through p and q, or None for a straight segment."""
    if model == "uhp":
        dx = p.real - q.real
        if abs(dx) <= 1e-12 * (1 + abs(p) + abs(q)):
            return None
        cx = (abs(p) ** 2 - abs(q) ** 2) / (2 * dx)
        return complex(cx, 0.0), abs(p - complex(cx, 0.0))
    # the circle through p and q orthogonal to the unit circle also passes through 1/conj(p)
    cross = p.real * q.imag - p.imag * q.real
    if abs(cross) <= 1e-12 * abs(p) * abs(q) or abs(p) < 1e-15 or abs(q) < 1e-15:
        return None
    # solve |c|^2 = 1 + r^2 with c.p and c.q linear conditions
    a1, b1, c1 = p.real, p.imag, (abs(p) ** 2 + 1) / 2
    a2, b2, c2 = q.real, q.imag, (abs(q) ** 2 + 1) / 2
    det = a1 * b2 - a2 * b1
    c = complex((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)
    return c, abs(p - c)


def to_svg(e: Embedding, size: int = 800) -> str:
    margin = 0.05 * size
    pts = [complex(*p) for p in e.vertices]
    if e.model == "disk":
        scale = (size - 2 * margin) / 2

        def screen(z: complex) -> complex:
            return complex(size / 2 + scale * z.real, size / 2 - scale * z.imag)

        frame = [f'<circle cx="{size / 2:g}" cy="{size / 2:g}" r="{scale:g}" />']
    else:
        xs = [z.real for z in pts]
        top = max(z.imag for z in pts)
        # leave room for the arcs bulging above the vertices
        width = max(max(xs) - min(xs), top) * 1.2 + 1e-9
        top = max(top * 1.5, width / 2)
        scale = (size - 2 * margin) / max(width, top)
        mid = 0.5 * (max(xs) + min(xs))

        def screen(z: complex) -> complex:
            return complex(size / 2 + scale * (z.real - mid), size - margin - scale * z.imag)

        y0 = size - margin
        frame = [f'<line x1="0" y1="{y0:g}" x2="{size}" y2="{y0:g}" />']
        if e.polygon_class.kind == Kind.HOROCYCLIC:
            y1 = screen(1j).imag
            frame.append(f'<line class="horocycle" x1="0" y1="{y1:g}" x2="{size}" y2="{y1:g}" />')

    n = len(pts)
    start = screen(pts[-1])
    parts = [f"M {start.real:.6f} {start.imag:.6f}"]
    for i in range(n):
        p, q = pts[i - 1], pts[i]
        sq = screen(q)
        circ = _geodesic_circle(p, q, e.model)
        if circ is None:
            parts.append(f"L {sq.real:.6f} {sq.imag:.6f}")
            continue
        c, r = circ
        sp, sc = screen(p), screen(c)
        cross = (sp - sc).real * (sq - sc).imag - (sp - sc).imag * (sq - sc).real
        sweep = 1 if cross > 0 else 0
        rr = r * scale
        parts.append(f"A {rr:.6f} {rr:.6f} 0 0 {sweep} {sq.real:.6f} {sq.imag:.6f}")
    body = "\n  ".join(frame + [f'<path class="polygon" d="{" ".join(parts)} Z" />'])
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">\n'
        f'<g fill="none" stroke="black" stroke-width="1.5">\n  {body}\n</g>\n</svg>\n'
    )


def emit(e: Embedding, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (to_json(e) + "\n").encode()
    if fmt == "svg":
        return to_svg(e).encode()
    raise DomainError(f"unknown format {fmt!r}; expected json or svg")


def embedding_from_json(text: str | bytes) -> Embedding:
    """Inverse of the JSON form of :func:`emit`."""
    doc = json.loads(text)
    label = doc["class"]
    kind, _, rest = label.partition("(")
    cls = PolygonClass(Kind(kind), int(rest.rstrip(")")) if rest else None)
    center = tuple(doc["center"]) if doc["center"] is not None else None
    return Embedding(
        doc["model"],
        tuple(doc["sides"]),
        cls,
        tuple(tuple(p) for p in doc["vertices"]),
        center,
        doc["radius"],
    )
