import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from catenoid.catenary import (
    Catenary,
    arc_length,
    dx_dlambda,
    envelope,
    intersect,
    profile_x,
    profile_x_many,
    sample_curve,
    tangent_angle_sin,
)
from catenoid.errors import DomainError
from catenoid.separation import d0

PROFILE_X_1_2 = 0.382372246713668162120379474029  # mpmath, 30 digits


def test_profile_x_values():
    assert profile_x(0.5, 0.5) == 0.0
    assert profile_x(1.0, 2.0) == pytest.approx(PROFILE_X_1_2, rel=1e-12)
    assert float(oracle.profile_x(1, 2)) == pytest.approx(PROFILE_X_1_2, rel=1e-20)
    assert profile_x(0.4955, 40.0) == pytest.approx(0.501143, abs=1e-5)


def test_profile_x_domain():
    with pytest.raises(DomainError):
        profile_x(1.0, 0.5)
    with pytest.raises(DomainError):
        profile_x(0.0, 1.0)


@pytest.mark.parametrize("lam", [0.1, 0.5, 1.0, 2.5])
def test_profile_increasing_and_bounded(lam):
    ys = lam + np.geomspace(1e-6, 30, 60)
    xs = profile_x_many(lam, ys)
    # increments decay like exp(-3y) and drop below one ulp past y - lam ~ 10
    resolved = ys - lam < 8
    assert np.all(np.diff(xs[resolved]) > 0)
    assert np.all(np.diff(xs) >= 0)
    assert xs[-1] < d0(lam) + 1e-15


def test_profile_many_matches_single():
    ys = [1.1, 1.5, 3.0, 7.0]
    many = profile_x_many(1.0, ys)
    for y, x in zip(ys, many):
        assert x == pytest.approx(profile_x(1.0, y), rel=1e-12)


def test_tangent_angle():
    assert tangent_angle_sin(0.7, 0.7) == 1.0
    assert tangent_angle_sin(0.5, 1.0) == pytest.approx(math.sinh(1) / math.sinh(2), rel=1e-15)
    assert tangent_angle_sin(0.5, 200.0) < 1e-170
    s = [tangent_angle_sin(0.5, y) for y in np.linspace(0.5, 5, 50)]
    assert all(b < a for a, b in zip(s, s[1:]))


@settings(deadline=None, max_examples=25)
@given(st.floats(0.05, 3.0), st.floats(0.01, 8.0))
def test_first_integral(lam, dy):
    # sinh y cosh y sin(alpha) is the same at every point of the curve
    y = lam + dy
    c = math.sinh(y) * math.cosh(y) * tangent_angle_sin(lam, y)
    c0 = math.sinh(lam) * math.cosh(lam)
    assert c == pytest.approx(c0, rel=1e-12)


def test_sample_curve():
    s = sample_curve(1.2, 5.0, 64)
    xs = s.xs
    assert len(s.half) == 64
    assert np.all(np.diff(xs) > 0)
    assert xs[-1] < d0(1.2)
    for i in (5, 30, 63):
        assert xs[i] == pytest.approx(profile_x(1.2, float(s.ys[i])), rel=1e-10, abs=1e-14)
    steps = np.diff(s.arc)
    assert steps.max() < 2 * steps.min()
    assert s.arc[-1] == pytest.approx(arc_length(1.2, 5.0), rel=1e-8)
    full = s.full()
    assert len(full) == 2 * 64 - 1
    assert [p.x for p, _ in s.mirrored] == [-x for x in xs]


def test_sample_curve_degenerate():
    s = sample_curve(0.5, 0.5 + 1e-9, 2)
    assert s.xs[0] == 0.0 and abs(s.xs[1]) < 1e-4
    with pytest.raises(DomainError):
        sample_curve(1.0, 1.0, 4)
    with pytest.raises(DomainError):
        sample_curve(1.0, 2.0, 1)


def test_catenary_object():
    c = Catenary(0.8)
    assert c.x(2.0) == profile_x(0.8, 2.0)
    assert c.limit_x() == d0(0.8)
    with pytest.raises(DomainError):
        Catenary(-1.0)


def test_intersect_below_lambda_d():
    rep = intersect(0.2, 0.3)
    assert rep.count == 2
    (p, q) = rep.points
    assert p.x == -q.x and p.y == q.y > 0.3
    assert profile_x(0.2, p.y) == pytest.approx(profile_x(0.3, p.y), abs=1e-12)


def test_intersect_above_lambda_d():
    assert intersect(0.6, 0.8).count == 0


def test_intersect_rejects_equal():
    with pytest.raises(DomainError):
        intersect(0.3, 0.3)


def test_envelope_points():
    env = envelope(0.2, 0.4, 3)
    assert len(env.points) == 3 and not env.failures
    for lam, p in zip(env.lambdas, env.points):
        assert p.y > lam
        assert abs(dx_dlambda(lam, p.y)) < 1e-6


def test_envelope_step_halving():
    a = envelope(0.29, 0.31, 3).points[1]
    b = envelope(0.29, 0.31, 3, step=5e-5).points[1]
    assert abs(a.y - b.y) < 1e-4 and abs(a.x - b.x) < 1e-4


def test_envelope_empty_above_lambda_d():
    env = envelope(0.6, 1.0, 3)
    assert env.points == () and len(env.no_touch) == 3
