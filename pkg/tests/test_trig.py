import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypcyc import trig
from hypcyc.errors import DomainError

import oracles

# frozen from the mpmath law-of-cosines oracle (40 digits)
APEX_2_2 = 0.6599664042157993749922716629618293507823
BASE_2_2 = 0.6599664042157993749922716629618293507823
DAPEX_1_1 = -1.299118122870249354439497047755340224848
SECTOR_2_15_05 = 0.6846776969051758110920758042782313922202

lengths = st.floats(min_value=1e-3, max_value=30.0)
gaps = st.floats(min_value=1e-6, max_value=30.0)


def test_apex_is_pi_on_the_degenerate_triangle():
    for d in (1e-6, 0.3, 1.0, 7.0, 200.0):
        assert trig.apex_angle(d, d / 2) == math.pi


def test_apex_vanishes_for_huge_radius():
    assert 0 < trig.apex_angle(1.0, 50.0) < 1e-10


def test_apex_equilateral_value():
    # legs 2 and base 2 is equilateral, so the law of cosines gives every angle
    assert trig.apex_angle(2.0, 2.0) == pytest.approx(APEX_2_2, rel=1e-14)
    assert trig.apex_angle(2.0, 2.0) == pytest.approx(
        math.acos(1 - 2 * math.sinh(1) ** 2 / math.sinh(2) ** 2), rel=1e-13
    )


def test_base_angle_values():
    assert trig.base_angle(1.3, 0.65) == 0.0
    assert trig.base_angle(2.0, 2.0) == pytest.approx(BASE_2_2, rel=1e-14)


def test_apex_derivative_value():
    assert trig.apex_angle_dJ(1.0, 1.0) == pytest.approx(DAPEX_1_1, rel=1e-14)


def test_apex_derivative_diverges_at_degenerate_triangle():
    d = 1.0
    assert abs(trig.apex_angle_dJ(d, d / 2 + 1e-14 * math.cosh(d))) > 1e6
    with pytest.raises(DomainError):
        trig.apex_angle_dJ(d, d / 2)


def test_sector_defect_values():
    assert trig.sector_defect(2.0, 1.0, 0.7) == pytest.approx(0.0, abs=1e-15)
    assert trig.sector_defect(2.0, 1.5, 0.5) == pytest.approx(SECTOR_2_15_05, rel=1e-13)
    # R = 0 is the triangle area
    A, B = trig.apex_angle(2.0, 1.5), trig.base_angle(2.0, 1.5)
    assert trig.sector_defect(2.0, 1.5, 0.0) == pytest.approx(math.pi - A - 2 * B)


@pytest.mark.parametrize("d, J, R", [(2.0, 1.5, 0.5), (1.0, 3.0, 0.4), (0.5, 0.3, 0.1)])
def test_sector_defect_matches_quadrature(d, J, R):
    assert trig.sector_defect(d, J, R) == pytest.approx(
        oracles.sector_defect_quadrature(d, J, R), abs=1e-6
    )


@pytest.mark.parametrize(
    "d, J", [(0.001, 0.3), (1.0, 0.5000001), (1.0, 1.0), (3.0, 2.0), (5.0, 40.0), (0.2, 320.0)]
)
def test_angles_match_mpmath(d, J):
    assert trig.apex_angle(d, J) == pytest.approx(float(oracles.mp_apex(d, J)), rel=1e-13)
    assert trig.base_angle(d, J) == pytest.approx(float(oracles.base(d, J)), rel=1e-12)


def test_angles_beyond_sinh_overflow():
    # sinh(J) overflows near J = 710; the scaled evaluation keeps the small angle
    a = trig.apex_angle(1.0, 700.0)
    assert a > 0
    assert math.log(a) == pytest.approx(math.log(2 * math.sinh(0.5)) - 700 + math.log(2), rel=1e-12)
    assert trig.base_angle(1.0, 700.0) == pytest.approx(math.asin(1 / math.cosh(0.5)), rel=1e-14)


def test_domain_errors():
    with pytest.raises(DomainError):
        trig.apex_angle(0.0, 1.0)
    with pytest.raises(DomainError):
        trig.apex_angle(2.0, 0.9)
    with pytest.raises(DomainError):
        trig.base_angle(-1.0, 1.0)
    with pytest.raises(DomainError):
        trig.sector_defect(1.0, 1.0, -0.1)
    # within the slack the radius is clamped onto d/2
    assert trig.apex_angle(2.0, 1.0 - 1e-13) == math.pi


@settings(max_examples=300, deadline=None)
@given(d=lengths, gap=gaps)
def test_law_of_sines_and_half_angle(d, gap):
    J = d / 2 + gap
    A, B = trig.apex_angle(d, J), trig.base_angle(d, J)
    if J < 300:
        lhs, rhs = math.sin(B) * math.sinh(d), math.sin(A) * math.sinh(J)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
        assert math.sinh(d / 2) == pytest.approx(math.sinh(J) * math.sin(A / 2), rel=1e-12)
    assert A + 2 * B < math.pi


@settings(max_examples=300, deadline=None)
@given(d=lengths, gap=gaps)
def test_derivative_matches_central_difference(d, gap):
    J = d / 2 + max(gap, 1e-3 * max(1.0, d))
    h = 1e-6 * max(1.0, J)
    fd = (trig.apex_angle(d, J + h) - trig.apex_angle(d, J - h)) / (2 * h)
    an = trig.apex_angle_dJ(d, J)
    assert an < 0
    assert an == pytest.approx(fd, rel=1e-6, abs=1e-12)


def test_monotonicity_on_random_pairs():
    rng = random.Random(11)
    for _ in range(1000):
        d = rng.uniform(0.01, 10)
        J1 = d / 2 + rng.uniform(0, 10)
        J2 = J1 + rng.uniform(1e-3, 5)
        assert trig.apex_angle(d, J2) < trig.apex_angle(d, J1)
        d2 = rng.uniform(d * 1.001, 2 * J1)
        assert trig.apex_angle(d2, J1) > trig.apex_angle(d, J1)


def test_derivative_magnitude_decreases_in_radius():
    for d in (0.1, 1.0, 4.0):
        grid = d / 2 + np.geomspace(1e-4, 20, 200)
        mags = [abs(trig.apex_angle_dJ(d, J)) for J in grid]
        assert all(a > b for a, b in zip(mags, mags[1:]))


# ------------------------------------------------------------ distances


def test_model_distance_examples():
    for ell in (0.1, 1.0, 7.5):
        assert trig.model_distance((0, 1), (ell, 1), "uhp") == pytest.approx(2 * math.asinh(ell / 2))
    assert trig.model_distance((0.3, -0.2), (0.3, -0.2)) == 0.0
    for J in (0.01, 1.0, 10.0):
        assert trig.model_distance((0, 0), (math.tanh(J / 2), 0), "disk") == pytest.approx(J, rel=1e-9)


def test_model_distance_rejects_bad_points():
    with pytest.raises(DomainError):
        trig.model_distance((1.0, 0.0), (0, 0), "disk")
    with pytest.raises(DomainError):
        trig.model_distance((0.0, 0.0), (1, 1), "uhp")
    with pytest.raises(DomainError):
        trig.model_distance((0.0, 0.5), (0, 0.1), "klein")


def _disk_point(rng):
    r = math.sqrt(rng.random()) * 0.95
    t = rng.uniform(0, 2 * math.pi)
    return (r * math.cos(t), r * math.sin(t))


def _uhp_point(rng):
    return (rng.uniform(-3, 3), math.exp(rng.uniform(-2, 2)))


@pytest.mark.parametrize("model, draw", [("disk", _disk_point), ("uhp", _uhp_point)])
def test_metric_axioms(model, draw):
    rng = random.Random(5)
    for _ in range(500):
        p, q, r = draw(rng), draw(rng), draw(rng)
        dpq = trig.model_distance(p, q, model)
        assert dpq >= 0
        assert dpq == trig.model_distance(q, p, model)
        assert dpq <= trig.model_distance(p, r, model) + trig.model_distance(r, q, model) + 1e-12


def test_models_agree_under_the_cayley_map():
    from hypcyc.embedding import disk_to_uhp

    rng = random.Random(8)
    for _ in range(200):
        p, q = _disk_point(rng), _disk_point(rng)
        zp, zq = disk_to_uhp(complex(*p)), disk_to_uhp(complex(*q))
        assert trig.model_distance(p, q, "disk") == pytest.approx(
            trig.model_distance((zp.real, zp.imag), (zq.real, zq.imag), "uhp"), rel=1e-10
        )
