import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from polyan import landau as ld
from polyan import polyfun as pf
from polyan import series as ser
from polyan.reports import DomainError


def quadratic_root(M):
    return 1 - math.sqrt(2 * M / (2 * M + 1))


@pytest.mark.parametrize("M", [1, 1.5, 2, 5, 10, 100])
def test_order_two_matches_quadratic(M):
    res = ld.landau_rho(M, 2)
    assert abs(res.radius - quadratic_root(M)) <= 1e-12
    assert abs(res.residual) <= 1e-12
    assert res.bracket[0] <= res.radius <= res.bracket[1]


@pytest.mark.parametrize("M", [1, 2, 5, 10])
def test_bianalytic_closed_form_agrees(M):
    assert abs(ld.bianalytic_rho(M).radius - ld.landau_rho(M, 2).radius) <= 1e-12
    rho = ld.bianalytic_rho(M).radius
    assert ld.bianalytic_R(rho, M) == pytest.approx(ld.landau_R(rho, M, 2), abs=1e-15)


def test_printed_closed_form_is_not_a_radius():
    assert ld.printed_bianalytic_rho(1) == pytest.approx(1.8165, abs=1e-4)
    for M in [1, 2, 10]:
        assert ld.printed_bianalytic_rho(M) > 1


def test_order_three_by_sign_scan():
    rho = np.linspace(1e-6, 1 - 1e-6, 10**6)
    s = rho * (2 - rho) + rho * (2 - rho) + rho**2 * (3 - rho)
    for M in [1, 2]:
        g = 1 - M * s / (1 - rho) ** 2
        i = int(np.argmax(g < 0))
        assert rho[i - 1] <= ld.landau_rho(M, 3).radius <= rho[i]
    assert ld.landau_rho(1, 3).radius == pytest.approx(0.16744919, abs=1e-8)


def test_radius_decreases_with_order_and_M():
    prev = 1.0
    for alpha in range(2, 8):
        r = ld.landau_rho(2, alpha).radius
        assert r < prev
        prev = r
    radii = [ld.landau_rho(M, 3).radius for M in [1, 2, 4, 8]]
    assert radii == sorted(radii, reverse=True)


def test_radius_below_classical_landau():
    for M in [1.5, 2, 5]:
        assert ld.landau_rho(M, 2).radius < ld.classical_landau_rho(M)


def test_covering_radius_examples():
    rho = ld.landau_rho(1, 2).radius
    assert ld.landau_R(rho, 1, 2) == pytest.approx(0.1010205144, abs=1e-9)
    rho = ld.landau_rho(2, 3).radius
    assert ld.landau_R(rho, 2, 3) > 0


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(1, 50))
def test_covering_order_two_specialization(rho, M):
    direct = rho - rho**2 * (1 - rho) / (1 - rho) - M * (rho**2 + rho**3) / (1 - rho)
    assert ld.landau_R(rho, M, 2) == pytest.approx(direct, rel=1e-12, abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(st.floats(1, 1e4), st.integers(2, 12))
def test_root_brackets_sign_change(M, alpha):
    res = ld.landau_rho(M, alpha)
    assert 0 < res.radius < 1
    lo, hi = res.bracket
    assert ld.landau_g(lo, M, alpha) >= 0 >= ld.landau_g(hi, M, alpha)


@pytest.mark.parametrize("M,alpha", [(0.5, 2), (math.nan, 2), (2, 1), (2, 2.5)])
def test_domain_errors(M, alpha):
    with pytest.raises(DomainError):
        ld.landau_rho(M, alpha)


def test_identity_is_injective_and_covers():
    F = pf.from_components(ser.identity(), [0])
    rho = ld.landau_rho(1, 2).radius
    assert ld.check_injectivity(F, rho).passed
    rep = ld.check_covering(F, rho, ld.landau_R(rho, 1, 2))
    assert rep.passed
    assert rep.details["min_modulus"] == pytest.approx(rho, rel=1e-12)


def test_modulus_squared_is_not_injective():
    F = pf.from_components([0], [0, 1])      # conj(z) z = |z|^2
    rep = ld.check_injectivity(F, 0.5)
    assert not rep.passed
    assert rep.details["min_ratio"] <= 1e-12


def test_covering_failure_is_reported():
    F = pf.from_components(ser.identity(), [0])
    rep = ld.check_covering(F, 0.2, 0.3)
    assert not rep.passed and rep.margin == pytest.approx(-0.1)


def test_min_image_ratio_exact_pairs():
    pts = np.array([0, 1, 1j]) * 0.5
    ratio, i, j = ld.min_image_ratio(pf.from_components([0, 2]), pts)
    assert ratio == pytest.approx(2.0)
    assert i != j


def test_check_arguments_validated():
    F = pf.from_components(ser.identity())
    with pytest.raises(DomainError):
        ld.check_injectivity(F, 1.0)
    with pytest.raises(DomainError):
        ld.check_covering(F, 0.5, 0.1, samples=8)
