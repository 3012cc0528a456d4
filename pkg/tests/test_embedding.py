import cmath
import json
import math
import random
import re

import pytest

from hypcyc import defects as D
from hypcyc import embedding as E
from hypcyc import params as P
from hypcyc.errors import DomainError, NotRealizableError
from hypcyc.params import Kind
from hypcyc.trig import model_distance

import oracles
import sampling


def triangulated_area(e):
    """Sum of fan-triangle areas from vertex 0, each from its side lengths."""
    v = e.vertices
    total = 0.0
    for i in range(1, len(v) - 1):
        a = model_distance(v[0], v[i], e.model)
        b = model_distance(v[i], v[i + 1], e.model)
        c = model_distance(v[i + 1], v[0], e.model)
        total += oracles.triangle_area(a, b, c)
    return total


def cross_signs(e):
    """Orientation of each consecutive vertex triple in the Euclidean chart."""
    v = [complex(*p) for p in e.vertices]
    n = len(v)
    out = []
    for i in range(n):
        a, b, c = v[i - 1], v[i], v[(i + 1) % n]
        z = (b - a).conjugate() * (c - b)
        out.append(z.imag > 0)
    return out


def test_equilateral_triangle():
    d = 1.3
    e = E.embed_cyclic((d, d, d))
    r = math.tanh(E.embed_cyclic((d, d, d)).J / 2)
    for k, p in enumerate(e.vertices):
        z = complex(*p)
        assert abs(z) == pytest.approx(r, rel=1e-14)
        assert cmath.phase(z) % (2 * math.pi) == pytest.approx(2 * math.pi * k / 3, abs=1e-12)
    assert e.center == (0.0, 0.0)


@pytest.mark.parametrize("model", ["disk", "uhp"])
def test_round_trip_and_equidistance(model):
    rng = random.Random(50)
    for _ in range(500):
        n = rng.randint(3, 9)
        d = sampling.cyclic(rng, n)
        e = E.embed_cyclic(d, model)
        assert E.side_lengths(e) == pytest.approx(d, abs=1e-9)
        for p in e.vertices:
            assert model_distance(e.center, p, model) == pytest.approx(e.J, abs=1e-9)


def test_noncentered_polygon_sits_in_a_half_disk():
    rng = random.Random(51)
    for _ in range(200):
        d, k = sampling.noncentered(rng, rng.randint(3, 8))
        e = E.embed_cyclic(d)
        alpha = D.angles(d).alpha
        assert alpha[k] <= math.pi
        phases = [cmath.phase(complex(*p)) for p in e.vertices]
        # vertex 0 is at phase 0, so the arc is measured around it
        width = max(phases) - min(phases)
        assert width == pytest.approx(alpha[k], abs=1e-9)
        # the origin is on the far side of the long side's chord
        p, q = complex(*e.vertices[k - 1]), complex(*e.vertices[k])
        others = [complex(*v) for i, v in enumerate(e.vertices) if i not in (k, (k - 1) % len(d))]
        side = lambda z: ((q - p).conjugate() * (z - p)).imag
        assert all(side(z) * side(0j) < 0 for z in others)


@pytest.mark.parametrize("model", ["disk", "uhp"])
def test_convexity(model):
    rng = random.Random(52)
    for _ in range(300):
        e = E.embed_cyclic(sampling.cyclic(rng, rng.randint(3, 9)), model)
        signs = cross_signs(e)
        assert all(signs) or not any(signs)


def test_continuity_of_vertices():
    rng = random.Random(53)
    for _ in range(200):
        n = rng.randint(3, 8)
        d = sampling.cyclic(rng, n)
        j = rng.randrange(n)
        moved = list(d)
        moved[j] += 1e-8
        a, b = E.embed_cyclic(d), E.embed_cyclic(moved)
        shift = max(abs(complex(*p) - complex(*q)) for p, q in zip(a.vertices, b.vertices))
        assert shift <= 1e-5


def test_horocyclic_embedding():
    d = 0.9
    e = E.embed_horocyclic((d, d))
    s = 2 * math.sinh(d / 2)
    assert [p[0] for p in e.vertices] == pytest.approx([0, s, 2 * s], rel=1e-15)
    assert all(p[1] == 1.0 for p in e.vertices)
    rng = random.Random(54)
    for _ in range(300):
        rest = oracles.sample_rest(rng, rng.randint(3, 9))
        e = E.embed_horocyclic(rest)
        assert all(p[1] == 1.0 for p in e.vertices)
        lengths = E.side_lengths(e)
        assert lengths[0] == pytest.approx(P.h0(rest), abs=1e-12)
        assert lengths[1:] == pytest.approx(rest, abs=1e-12)


def test_embed_dispatches_horocyclic_tuples():
    rest = (1.0, 0.5, 1.5)
    d = P.apply_symmetry((P.h0(rest),) + rest, 1, False)
    e = E.embed(d, "uhp")
    assert e.polygon_class == P.PolygonClass(Kind.HOROCYCLIC, 3)
    assert E.side_lengths(e) == pytest.approx(d, abs=1e-12)
    assert E.embed(d, "disk").model == "disk"


def test_embed_errors():
    with pytest.raises(NotRealizableError):
        E.embed_cyclic((10, 1, 1))
    rest = (1.0, 1.0)
    with pytest.raises(DomainError):
        E.embed_cyclic((P.h0(rest),) + rest)
    with pytest.raises(DomainError):
        E.embed_cyclic((1, 1, 1), "klein")


def test_gauss_bonnet_area():
    rng = random.Random(55)
    for _ in range(100):
        d = sampling.centered(rng, rng.randint(3, 7))
        assert D.defect(d, 0.0) == pytest.approx(triangulated_area(E.embed_cyclic(d)), abs=1e-8)


# ---------------------------------------------------------------- output


def test_json_round_trip_is_bit_exact():
    rng = random.Random(56)
    for model in ("disk", "uhp"):
        for _ in range(50):
            e = E.embed_cyclic(sampling.cyclic(rng, rng.randint(3, 7)), model)
            assert E.embedding_from_json(E.emit(e, "json")) == e
    e = E.embed_horocyclic((0.4, 0.8, 1.1))
    assert E.embedding_from_json(E.emit(e, "json")) == e


def test_json_schema():
    doc = json.loads(E.emit(E.embed_cyclic((1, 1, 1)), "json"))
    assert set(doc) == {"model", "sides", "class", "radius", "center", "vertices"}
    assert doc["model"] == "disk" and doc["class"] == "centered"
    doc = json.loads(E.emit(E.embed_horocyclic((1, 1)), "json"))
    assert doc["radius"] is None and doc["center"] is None and doc["class"] == "horocyclic(0)"


def _arcs(svg):
    return re.findall(r"A ([\d.]+) [\d.]+ 0 0 [01] ([\d.]+) ([\d.]+)", svg)


def test_svg_equilateral_symmetry():
    svg = E.emit(E.embed_cyclic((1.5, 1.5, 1.5)), "svg").decode()
    assert 'width="800"' in svg and 'height="800"' in svg
    arcs = _arcs(svg)
    assert len(arcs) == 3
    radii = {a[0] for a in arcs}
    assert len(radii) == 1
    # endpoints sit at the same screen distance from the disk center
    dist = [math.hypot(float(x) - 400, float(y) - 400) for _, x, y in arcs]
    assert max(dist) - min(dist) < 1e-5


def test_svg_arcs_are_geodesics():
    e = E.embed_cyclic((0.8, 1.7, 1.1, 1.3))
    pts = [complex(*p) for p in e.vertices]
    for i in range(4):
        c, r = E._geodesic_circle(pts[i - 1], pts[i], "disk")
        assert abs(c) ** 2 == pytest.approx(1 + r * r, rel=1e-12)  # orthogonal to the unit circle
    e = E.embed_cyclic((0.8, 1.7, 1.1, 1.3), "uhp")
    pts = [complex(*p) for p in e.vertices]
    for i in range(4):
        c, r = E._geodesic_circle(pts[i - 1], pts[i], "uhp")
        assert c.imag == 0.0
        assert abs(pts[i] - c) == pytest.approx(r, rel=1e-12)


def test_svg_horocycle_line():
    svg = E.emit(E.embed_horocyclic((1, 2, 1)), "svg").decode()
    assert 'class="horocycle"' in svg
    assert 'class="horocycle"' not in E.emit(E.embed_cyclic((1, 2, 1.5), "uhp"), "svg").decode()
    assert "<svg" in svg and "stroke" in svg and "href" not in svg


def test_emit_rejects_unknown_format():
    with pytest.raises(DomainError):
        E.emit(E.embed_cyclic((1, 1, 1)), "png")
