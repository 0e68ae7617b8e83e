import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import circle_oracle, point_sets, random_rotation
from minsumradius.errors import DimensionMismatchError, EmptySetError, InvalidInputError, PreconditionError
from minsumradius.geometry import (
    EPS_CONTAIN,
    EPS_RADIUS,
    Ball,
    antipodal,
    circumball,
    contains,
    meb,
    meb_empty,
    on_boundary,
)
from minsumradius.oracle import subset_table


def test_meb_singleton():
    ball, support = meb([(0, 0)])
    assert ball.radius == 0.0
    np.testing.assert_array_equal(ball.center, [0, 0])
    assert support == [0]


def test_meb_pair():
    ball, support = meb([(0, 0), (2, 0)])
    np.testing.assert_allclose(ball.center, [1, 0])
    assert ball.radius == pytest.approx(1.0)
    assert support == [0, 1]


def test_meb_interior_third_point():
    ball, _ = meb([(0, 0), (2, 0), (1, 0.5)])
    np.testing.assert_allclose(ball.center, [1, 0])
    assert ball.radius == pytest.approx(1.0)


def test_meb_matches_circumcircle_enumeration():
    pts = [(0, 0), (4, 0), (2, 2), (2, 1)]
    center, radius = circle_oracle(pts)
    assert (center, radius) == ((2.0, 0.0), 2.0)
    ball, support = meb(pts)
    np.testing.assert_allclose(ball.center, center, atol=1e-12)
    assert ball.radius == pytest.approx(radius, rel=1e-12)
    assert all(on_boundary(ball, pts[i]) for i in support)


def test_meb_errors():
    with pytest.raises(EmptySetError):
        meb([])
    with pytest.raises(DimensionMismatchError):
        meb([(0, 0), (1, 2, 3)])
    with pytest.raises(InvalidInputError):
        meb([(0, 0), (math.nan, 1)])
    with pytest.raises(InvalidInputError):
        meb([(0, math.inf)])
    with pytest.raises(DimensionMismatchError):
        meb([(1,), (2,)])


def test_empty_sentinel():
    empty = meb_empty()
    assert empty.radius == 0.0 and empty.is_empty
    assert not contains(empty, (0, 0))


def test_contains():
    unit = Ball(np.array([0.0, 0.0]), 1.0)
    assert contains(unit, (1, 0))
    assert not contains(unit, (2, 0))
    assert contains(unit, (1 + 1e-12, 0))
    with pytest.raises(DimensionMismatchError):
        contains(unit, (1, 0, 0))


@pytest.mark.parametrize(
    "center, radius, p, expected",
    [
        ((0, 0), 1, (1, 0), (-1, 0)),
        ((3, 4), 2, (5, 4), (1, 4)),
        ((0, 0, 0), 1, (0, 0, 1), (0, 0, -1)),
    ],
)
def test_antipodal(center, radius, p, expected):
    ball = Ball(np.array(center, dtype=float), float(radius))
    q = antipodal(ball, p)
    np.testing.assert_allclose(q, expected)
    assert on_boundary(ball, q)
    np.testing.assert_allclose((q + np.asarray(p)) / 2, center)


def test_antipodal_requires_boundary_point():
    with pytest.raises(PreconditionError):
        antipodal(Ball(np.zeros(2), 1.0), (0.5, 0))


def test_circumball():
    b = circumball([(0, 0), (2, 0)])
    np.testing.assert_allclose(b.center, [1, 0])
    assert b.radius == pytest.approx(1)
    b = circumball([(0, 0), (2, 0), (0, 2)])
    np.testing.assert_allclose(b.center, [1, 1])
    assert b.radius == pytest.approx(math.sqrt(2))
    assert circumball([(0, 0), (1, 0), (2, 0)]) is None
    # The caller's fallback: the extreme pair of the collinear triple.
    b = circumball([(0, 0), (2, 0)])
    assert all(contains(b, p) for p in [(0, 0), (1, 0), (2, 0)])


def test_circumball_3d_triangle_lies_in_its_plane():
    b = circumball([(1, 0, 5), (0, 1, 5), (-1, 0, 5)])
    np.testing.assert_allclose(b.center, [0, 0, 5], atol=1e-12)
    assert b.radius == pytest.approx(1.0)


def test_degenerate_inputs_fall_back_to_lower_rank():
    ball, support = meb([(0, 0), (1, 0), (2, 0), (3, 0), (1.5, 0)])
    np.testing.assert_allclose(ball.center, [1.5, 0])
    assert ball.radius == pytest.approx(1.5)
    assert sorted(support) == [0, 3]
    ball, _ = meb(np.zeros((6, 3)))
    assert ball.radius == 0.0


def test_cocircular_points_give_some_valid_support():
    angles = np.linspace(0, 2 * np.pi, 8, endpoint=False)
    pts = np.column_stack([np.cos(angles), np.sin(angles)])
    ball, support = meb(pts)
    assert ball.radius == pytest.approx(1.0, rel=1e-12)
    assert 2 <= len(support) <= 3
    assert meb(pts[support])[0].radius == pytest.approx(1.0, rel=1e-12)


def _check_meb(pts):
    ball, support = meb(pts)
    d = pts.shape[1]
    assert all(contains(ball, p, EPS_CONTAIN) for p in pts)
    assert 1 <= len(support) <= d + 1
    assert all(on_boundary(ball, pts[i]) for i in support)
    sub, _ = meb(pts[support])
    assert abs(sub.radius - ball.radius) <= EPS_RADIUS * max(1.0, ball.radius)
    return ball


@settings(max_examples=150, deadline=None)
@given(point_sets(dim=2, max_size=25))
def test_containment_and_support_planar(pts):
    _check_meb(pts)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 8).flatmap(lambda d: point_sets(dim=d, max_size=20)))
def test_containment_and_support_higher_dims(pts):
    _check_meb(pts)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: point_sets(dim=d, max_size=10)))
def test_minimality_against_subset_circumballs(pts):
    ball, _ = meb(pts)
    table = subset_table(pts)
    ref = table.radius[table.full]
    assert ball.radius == pytest.approx(ref, rel=1e-9, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(point_sets(dim=2, max_size=10), st.integers(0, 2**32 - 1))
def test_rigid_motion_equivariance(pts, seed):
    rng = np.random.default_rng(seed)
    rot = random_rotation(rng, 2)
    shift = rng.uniform(-50, 50, size=2)
    ball, _ = meb(pts)
    moved, _ = meb(pts @ rot.T + shift)
    assert moved.radius == pytest.approx(ball.radius, rel=1e-9, abs=1e-12)
    tol = 1e-9 * max(1.0, ball.radius)
    assert np.linalg.norm(moved.center - (rot @ ball.center + shift)) <= tol


@pytest.mark.parametrize("scale", [0.5, 2.0, 1000.0])
def test_scaling(rng, scale):
    for _ in range(25):
        pts = rng.uniform(-1, 1, size=(int(rng.integers(1, 30)), int(rng.integers(2, 5))))
        base = meb(pts)[0].radius
        assert meb(scale * pts)[0].radius == pytest.approx(scale * base, rel=1e-12, abs=1e-300)


def test_duplicates_leave_radius_unchanged(rng):
    for _ in range(25):
        pts = rng.normal(size=(int(rng.integers(1, 20)), 3))
        assert meb(np.vstack([pts, pts]))[0].radius == meb(pts)[0].radius


def test_seed_only_changes_support_choice():
    angles = np.linspace(0, 2 * np.pi, 12, endpoint=False)
    pts = np.column_stack([np.cos(angles), np.sin(angles)])
    radii = {round(meb(pts, seed=s)[0].radius, 12) for s in range(10)}
    assert radii == {1.0}
    assert meb(pts, seed=3)[1] == meb(pts, seed=3)[1]
