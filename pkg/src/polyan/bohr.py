"""Bohr radii of poly-analytic self-maps of the disk and distance-type majorant bounds."""

from __future__ import annotations

import math
import warnings

import numpy as np
from shapely.geometry import LinearRing

from . import series as ser
from .landau import check_injectivity
from .polyfun import PolyFunction, analytic, eval_poly, majorant_poly
from .reports import BoundReport, DomainError, RadiusResult
from .roots import bisect_root
from .sampling import circle_extremum, circle_points, polar_grid
from .series import AnalyticSeries

RESIDUAL_TOL = 1e-12
HYPOTHESIS_RADIUS = 0.999
HYPOTHESIS_GRID = 64
DISTANCE_RADIUS = math.exp(-math.pi)
DISTANCE_TOL = 1e-12
NORMALIZATION_TOL = 1e-12


class BoundaryWarning(UserWarning):
    """The sampled boundary curve is not simple, so the distance may be off."""


def bohr_polynomial(r: float, alpha: int) -> float:
    """``r**alpha + ... + r**3 + 3 r - 1`` (no cubic-and-up terms when alpha = 2)."""
    return sum(r**j for j in range(3, alpha + 1)) + 3.0 * r - 1.0


def bohr_radius(alpha: int, *, tol: float = RESIDUAL_TOL) -> RadiusResult:
    if int(alpha) != alpha or alpha < 2:
        raise DomainError(f"alpha must be an integer >= 2, got {alpha}")
    alpha = int(alpha)
    return bisect_root(lambda r: bohr_polynomial(r, alpha), 0.0, 1.0, ftol=tol)


def bohr_bound(alpha: int, r: float) -> float:
    """Upper bound ``r (1 - r**alpha) / (1 - r)**3`` on the majorant over the class."""
    if int(alpha) != alpha or alpha < 2:
        raise DomainError(f"alpha must be an integer >= 2, got {alpha}")
    if not (0.0 <= r < 1.0):
        raise DomainError(f"r must satisfy 0 <= r < 1, got {r}")
    return r * (1.0 - r**alpha) / (1.0 - r) ** 3


def orientation_margin(F: PolyFunction, radius: float = HYPOTHESIS_RADIUS,
                       grid: int = HYPOTHESIS_GRID) -> float:
    """``min (|A_0'| - max_k |A_k'|)`` over a polar grid; positive means every
    ``A_0 + conj(A_k)`` preserves orientation there."""
    pts = np.concatenate([[0j], polar_grid(radius, grid, grid)])
    base = np.abs(ser.eval_series(ser.derivative(F.components[0]), pts))
    if F.order == 1:
        return float(base.min())
    worst = np.zeros_like(base)
    for comp in F.components[1:]:
        worst = np.maximum(worst, np.abs(ser.eval_series(ser.derivative(comp), pts)))
    return float((base - worst).min())


def max_modulus_on_disk(F: PolyFunction, radius: float = HYPOTHESIS_RADIUS,
                        grid: int = HYPOTHESIS_GRID, boundary_samples: int = 4096) -> float:
    """Sampled ``sup |F|`` over ``|z| <= radius``.

    Poly-analytic functions need not attain their maximum modulus on the
    boundary, so the whole disk is sampled, not only the circle.
    """
    pts = np.concatenate([[0j], polar_grid(radius, grid, grid)])
    inner = float(np.abs(eval_poly(F, pts)).max())
    edge, _ = circle_extremum(lambda z: np.abs(eval_poly(F, z)), radius, boundary_samples, kind="max")
    return max(inner, edge)


def is_normalized(a: AnalyticSeries, tol: float = NORMALIZATION_TOL) -> bool:
    return abs(a[0]) <= tol and abs(a[1] - 1.0) <= tol


def bohr_hypotheses(F: PolyFunction) -> dict[str, bool]:
    a0 = F.components[0]
    return {
        "normalized": is_normalized(a0),
        "univalent_base": check_injectivity(analytic(a0), HYPOTHESIS_RADIUS, 32).passed,
        "image_in_disk": max_modulus_on_disk(F) < 1.0,
        "orientation_preserving": orientation_margin(F) > 0.0,
    }


def check_bohr(F: PolyFunction, r: float, *, seed: int | None = None) -> BoundReport:
    """``M(F, r) < 1`` together with the hypotheses of the class.

    Hypothesis failures are reported through flags, never raised.
    """
    if not (0.0 <= r < 1.0):
        raise DomainError(f"r must satisfy 0 <= r < 1, got {r}")
    alpha = max(F.order, 2)
    r0 = bohr_radius(alpha).radius
    lhs = majorant_poly(F, r)
    return BoundReport.build(
        lhs,
        1.0,
        bohr_hypotheses(F),
        strict=True,
        seed=seed,
        details={"bohr_radius": r0, "within_radius": bool(r < r0),
                 "bound": bohr_bound(alpha, r), "r": r},
    )


def _boundary_distance(A: AnalyticSeries, samples: int) -> tuple[float, float, bool]:
    if samples < 256:
        raise DomainError(f"samples must be >= 256, got {samples}")
    center = A[0]
    _, z = circle_points(1.0, samples)
    curve = ser.eval_series(A, z)
    simple = bool(LinearRing(np.column_stack([curve.real, curve.imag])).is_simple)
    dist, theta = circle_extremum(lambda w: np.abs(ser.eval_series(A, w) - center), 1.0, samples)
    return dist, theta, simple


def dist_to_boundary(A: AnalyticSeries, samples: int = 4096) -> float:
    """Estimate of ``dist(A(0), boundary of A(U))`` from the image of the unit circle.

    A truncated series is continuous on the closed disk, so the boundary of
    ``A(U)`` lies inside ``A(unit circle)``. Emits :class:`BoundaryWarning`
    when the sampled image curve self-intersects.
    """
    dist, _, simple = _boundary_distance(A, samples)
    if not simple:
        warnings.warn("boundary image is not a simple curve; distance estimate may be off",
                      BoundaryWarning, stacklevel=2)
    return dist


def distance_hypotheses(F: PolyFunction) -> dict[str, bool]:
    a0 = F.components[0]
    return {
        "omits_two_points": bool(np.any(a0.coeffs[1:])),
        "centered_components": all(abs(c[0]) <= NORMALIZATION_TOL for c in F.components[1:]),
        "orientation_preserving": orientation_margin(F) > 0.0,
    }


def check_distance_bound(F: PolyFunction, r: float, *, samples: int = 4096,
                         seed: int | None = None) -> BoundReport:
    """``M(F, r) <= (1 - r**alpha)/(1 - r) * dist(A_0(0), boundary A_0(U))`` for
    ``r <= exp(-pi)``; for order 2 the factor is ``1 + r``.

    A non-constant truncated series is bounded on the disk, hence omits far
    more than two points; that is what the ``omits_two_points`` flag records.
    """
    if not (0.0 <= r <= DISTANCE_RADIUS):
        raise DomainError(f"r must satisfy 0 <= r <= exp(-pi) = {DISTANCE_RADIUS}, got {r}")
    alpha = F.order
    dist, theta, simple = _boundary_distance(F.components[0], samples)
    factor = sum(r**k for k in range(alpha))
    return BoundReport.build(
        majorant_poly(F, r),
        factor * dist,
        distance_hypotheses(F),
        tolerance=DISTANCE_TOL,
        seed=seed,
        details={"distance": dist, "theta": theta, "boundary_simple": simple, "r": r},
    )
