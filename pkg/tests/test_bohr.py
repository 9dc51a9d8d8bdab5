import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyan import bohr as b
from polyan import polyfun as pf
from polyan import series as ser
from polyan.reports import DomainError

TABLE = {2: 1 / 3, 3: 0.322, 4: 0.319, 5: 0.318, 50: 0.318, 100: 0.318}
ROOTS = {2: 1 / 3, 3: 0.3221853546, 4: 0.3190532543, 5: 0.3181046747, 50: 0.3176721962}


def numpy_root(alpha):
    # coefficients of r^alpha + ... + r^3 + 3r - 1, highest degree first
    c = np.zeros(alpha + 1)
    c[: alpha - 2] = 1.0
    c[-2], c[-1] = 3.0, -1.0
    roots = np.roots(c)
    real = roots[(abs(roots.imag) < 1e-9) & (roots.real > 0) & (roots.real < 1)].real
    return float(real.min())


@pytest.mark.parametrize("alpha,expected", sorted(TABLE.items()))
def test_reference_table(alpha, expected):
    assert abs(b.bohr_radius(alpha).radius - expected) <= 5e-4


def test_order_two_is_one_third():
    assert abs(b.bohr_radius(2).radius - 1 / 3) <= 1e-12


@pytest.mark.parametrize("alpha", [3, 4, 5, 7, 12])
def test_radius_matches_polynomial_roots(alpha):
    assert b.bohr_radius(alpha).radius == pytest.approx(numpy_root(alpha), abs=1e-12)


@pytest.mark.parametrize("alpha,expected", sorted(ROOTS.items()))
def test_radius_digits(alpha, expected):
    assert b.bohr_radius(alpha).radius == pytest.approx(expected, abs=1e-10)


def test_large_order_limit():
    r100, r1000 = b.bohr_radius(100).radius, b.bohr_radius(1000).radius
    assert abs(r100 - r1000) <= 1e-6
    # limiting equation r^3 - 3r^2 + 4r - 1 = 0
    cubic = np.roots([1, -3, 4, -1])
    limit = float(cubic[abs(cubic.imag) < 1e-12].real[0])
    assert r1000 == pytest.approx(limit, abs=1e-12)


def test_radii_decrease():
    radii = [b.bohr_radius(a).radius for a in range(2, 30)]
    assert all(x > y for x, y in zip(radii, radii[1:]))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 60), st.floats(0, 0.95))
def test_polynomial_identity(alpha, r):
    # (1 - r) Q(r) = -(1 - 4r + 3r^2 - r^3 + r^(alpha+1))
    lhs = (1 - r) * b.bohr_polynomial(r, alpha)
    rhs = -(1 - 4 * r + 3 * r**2 - r**3 + r ** (alpha + 1))
    assert lhs == pytest.approx(rhs, abs=1e-12)


@pytest.mark.parametrize("alpha", [2, 3, 4, 5, 50, 100])
def test_bound_equals_one_at_radius(alpha):
    r0 = b.bohr_radius(alpha).radius
    assert b.bohr_bound(alpha, r0) == pytest.approx(1.0, abs=1e-10)


def test_bound_exceeds_one_past_radius():
    assert b.bohr_bound(2, 1 / 3 + 1e-6) > 1
    assert b.bohr_bound(3, b.bohr_radius(3).radius + 1e-6) > 1


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 20), st.floats(0, 0.9), st.floats(0, 0.9))
def test_bound_monotone_in_r(alpha, r1, r2):
    lo, hi = sorted((r1, r2))
    assert b.bohr_bound(alpha, lo) <= b.bohr_bound(alpha, hi)


def test_bound_domain():
    with pytest.raises(DomainError):
        b.bohr_bound(2, 1.0)
    with pytest.raises(DomainError):
        b.bohr_radius(1)


def test_identity_passes():
    rep = b.check_bohr(pf.from_components([0, 1], [0]), 0.3)
    assert rep.passed
    assert rep.lhs == pytest.approx(0.3)
    assert rep.details["within_radius"]


def test_hypothesis_failures_are_flagged():
    # A_1 = z^2 has |A_1'| > |A_0'| near the boundary and |F| exceeds 1
    rep = b.check_bohr(pf.from_components([0, 1], [0, 0, 1]), 0.3)
    assert not rep.passed
    assert rep.hypothesis_flags["normalized"]
    assert not rep.hypothesis_flags["orientation_preserving"]
    assert not rep.hypothesis_flags["image_in_disk"]


def test_unnormalized_base_flagged():
    assert not b.bohr_hypotheses(pf.from_components([0, 0.5], [0]))["normalized"]


def test_dist_to_boundary_examples():
    assert b.dist_to_boundary(ser.identity()) == pytest.approx(1.0, abs=1e-12)
    assert b.dist_to_boundary(ser.AnalyticSeries([0, 1, 0.25])) == pytest.approx(0.75, abs=1e-12)
    assert b.dist_to_boundary(ser.AnalyticSeries([2, 0.5])) == pytest.approx(0.5, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(0, 0.45), st.floats(0, 2 * math.pi))
def test_dist_matches_dense_scan(c, phase):
    A = ser.AnalyticSeries([0, 1, c * complex(math.cos(phase), math.sin(phase))])
    z = np.exp(1j * np.linspace(0, 2 * np.pi, 200_001))
    oracle = np.abs(ser.eval_series(A, z)).min()
    assert b.dist_to_boundary(A) == pytest.approx(oracle, abs=1e-9)


def test_nonsimple_boundary_warns():
    with pytest.warns(b.BoundaryWarning):
        b.dist_to_boundary(ser.koebe(64))


def test_simple_boundary_is_silent():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        b.dist_to_boundary(ser.AnalyticSeries([0, 1, 0.25]))


def test_distance_bound_examples():
    r = b.DISTANCE_RADIUS
    rep = b.check_distance_bound(pf.from_components([0, 1]), r)
    assert rep.passed and rep.margin == pytest.approx(1 - r, abs=1e-12)
    rep = b.check_distance_bound(pf.from_components([0, 1], [0]), r)
    assert rep.rhs == pytest.approx(1 + r, abs=1e-12)
    rep = b.check_distance_bound(pf.from_components([0, 1, 0.25], [0, 0.1]), r)
    assert rep.passed
    assert rep.rhs == pytest.approx(0.75 * (1 + r), abs=1e-12)
    assert rep.lhs == pytest.approx(r + 0.25 * r**2 + 0.1 * r**2, abs=1e-15)


def test_distance_order_three_factor():
    r = 0.04
    rep = b.check_distance_bound(pf.from_components([0, 1], [0], [0]), r)
    assert rep.rhs == pytest.approx(1 + r + r**2)


def test_distance_radius_limit():
    assert b.DISTANCE_RADIUS == pytest.approx(0.0432139183)
    with pytest.raises(DomainError):
        b.check_distance_bound(pf.from_components([0, 1]), 0.05)
