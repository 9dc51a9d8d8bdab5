"""Starlikeness, arclength, moments and area of poly-analytic maps.

Circle integrals use the periodic trapezoid rule and disk integrals a
Gauss-Legendre (radius) by trapezoid (angle) tensor rule; both double their
node counts until two successive estimates agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import series as ser
from .polyfun import PolyFunction, d_z, d_zbar, eval_poly, jacobian
from .reports import BoundReport, DomainError, QuadratureError
from .sampling import circle_extremum, polar_grid
from .series import AnalyticSeries

STARLIKE_RADIUS = 1.0 - 1e-3
CROSS_TERM_TOL = 1e-12
AREA_TOL = 1e-12
IDENTITY_TOL = 1e-10
# Estimates differing by less than this are converged even when both are
# rounding noise around zero (degenerate images such as conj(z) z).
ABSOLUTE_QUAD_FLOOR = 1e-15


@dataclass(frozen=True)
class QuadratureConfig:
    """Node counts and stopping rule for the adaptive quadratures.

    ``tolerance`` is relative: refinement stops when two successive estimates
    differ by at most ``tolerance * max(|old|, |new|)``, or by at most
    ``ABSOLUTE_QUAD_FLOOR``.
    """

    circle_panels: int = 128
    radial_panels: int = 32
    refinement_levels: int = 6
    tolerance: float = 1e-12

    def __post_init__(self) -> None:
        if self.circle_panels < 64:
            raise DomainError("circle_panels must be >= 64")
        if self.radial_panels < 16:
            raise DomainError("radial_panels must be >= 16")
        if self.refinement_levels < 1:
            raise DomainError("refinement_levels must be >= 1")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be > 0")


class Quadrature(NamedTuple):
    value: float
    panels: tuple[int, ...]


def _converged(old: float, new: float, tol: float) -> bool:
    diff = abs(new - old)
    return diff <= max(tol * max(abs(old), abs(new)), ABSOLUTE_QUAD_FLOOR)


def _refine(estimate: Callable[[int, int], float], q: QuadratureConfig, *, radial: bool) -> Quadrature:
    nc, nr = q.circle_panels, q.radial_panels
    old = estimate(nc, nr)
    for _ in range(q.refinement_levels):
        nc *= 2
        if radial:
            nr *= 2
        new = estimate(nc, nr)
        if _converged(old, new, q.tolerance):
            return Quadrature(new, (nc, nr) if radial else (nc,))
        old = new
    raise QuadratureError("quadrature did not converge", (old, new))


def _check_radius(r: float) -> None:
    if not (0.0 < r < 1.0):
        raise DomainError(f"r must lie in (0, 1), got {r}")


# -- starlikeness ---------------------------------------------------------

def starlike_ratio(A: AnalyticSeries, z):
    """``z A'(z) / A(z)``; non-finite where ``A`` vanishes."""
    zz = np.asarray(z, dtype=np.complex128)
    with np.errstate(divide="ignore", invalid="ignore"):
        return zz * ser.eval_series(ser.derivative(A), zz) / ser.eval_series(A, zz)


def starlike_margin(A: AnalyticSeries, grid: int = 64) -> float:
    """``min Re(z A'/A)`` over the polar grid up to radius ``1 - 1e-3``."""
    if abs(A[0]) != 0.0:
        raise DomainError("starlikeness requires A(0) = 0")
    if grid < 32:
        raise DomainError(f"grid must be >= 32, got {grid}")
    pts = polar_grid(STARLIKE_RADIUS, grid, grid)
    re = np.real(starlike_ratio(A, pts))
    if not np.all(np.isfinite(re)):
        return -math.inf
    return float(re.min())


def is_starlike(A: AnalyticSeries, grid: int = 64) -> bool:
    return starlike_margin(A, grid) > 0.0


# -- arclength ------------------------------------------------------------

def arclength_quadrature(F: PolyFunction, r: float, q: QuadratureConfig | None = None) -> Quadrature:
    _check_radius(r)
    q = q or QuadratureConfig()
    Fz, Fzb = d_z(F), d_zbar(F)

    def estimate(n: int, _nr: int) -> float:
        z = r * np.exp(2j * np.pi * np.arange(n) / n)
        speed = np.abs(z * eval_poly(Fz, z) - np.conj(z) * eval_poly(Fzb, z))
        return float(2.0 * np.pi * speed.sum() / n)

    return _refine(estimate, q, radial=False)


def arclength(F: PolyFunction, r: float, q: QuadratureConfig | None = None) -> float:
    """Length of the image of ``|z| = r``: ``int_0^{2 pi} |z F_z - conj(z) F_zbar| d theta``."""
    return arclength_quadrature(F, r, q).value


def arclength_bound(alpha: int, M_r: float, r: float) -> float:
    """Upper bound on the image-curve length when every ``A_k`` is starlike and
    ``|A_k| <= M_r`` on ``|z| = r`` (components start at ``k = 1``)."""
    if int(alpha) != alpha or alpha < 2:
        raise DomainError(f"alpha must be an integer >= 2, got {alpha}")
    if not M_r > 0:
        raise DomainError(f"M_r must be > 0, got {M_r}")
    _check_radius(r)
    inner = (alpha - 1) * r**alpha - alpha * r ** (alpha - 1) + 1.0
    bracket = (1.0 + r) * inner / (1.0 - r) ** 2 - 1.0 + r ** (alpha - 1)
    return 2.0 * math.pi * M_r * r / (1.0 - r) * bracket


def max_modulus(A: AnalyticSeries, r: float, samples: int = 1024) -> float:
    """Sampled ``max_{|z| = r} |A(z)|`` with local refinement (maximum principle)."""
    value, _ = circle_extremum(lambda z: np.abs(ser.eval_series(A, z)), r, samples, kind="max")
    return value


# -- moments --------------------------------------------------------------

def moment_quadrature(F: PolyFunction, r: float, p: float, q: QuadratureConfig | None = None) -> Quadrature:
    _check_radius(r)
    if not (p >= 0 and math.isfinite(p)):
        raise DomainError(f"p must be >= 0, got {p}")
    q = q or QuadratureConfig()
    Fz, Fzb = d_z(F), d_zbar(F)

    def estimate(nc: int, nr: int) -> float:
        x, w = np.polynomial.legendre.leggauss(nr)
        rho = 0.5 * r * (x + 1.0)
        wr = 0.5 * r * w
        theta = 2.0 * np.pi * np.arange(nc) / nc
        z = rho[:, None] * np.exp(1j * theta)[None, :]
        jac = np.abs(eval_poly(Fz, z)) ** 2 - np.abs(eval_poly(Fzb, z)) ** 2
        weight = np.abs(eval_poly(F, z)) ** p if p != 0 else 1.0
        ring = (weight * jac).sum(axis=1) * (2.0 * np.pi / nc)
        return float(np.dot(wr * rho, ring))

    return _refine(estimate, q, radial=True)


def moment_p(F: PolyFunction, r: float, p: float, q: QuadratureConfig | None = None) -> float:
    """``int_0^r int_0^{2 pi} |F|**p J_F rho d theta d rho``; ``p = 0`` is the signed area."""
    return moment_quadrature(F, r, p, q).value


def moment_lower_bound(p: float, r: float) -> float:
    """``2 pi r**(3p+6) / (3p+6)``."""
    if not (p >= 0 and math.isfinite(p)):
        raise DomainError(f"p must be >= 0, got {p}")
    _check_radius(r)
    e = 3.0 * p + 6.0
    return 2.0 * math.pi * r**e / e


# -- area -----------------------------------------------------------------

def area_hypotheses(F: PolyFunction, grid: int = 64) -> dict[str, bool]:
    """Flags for ``conj(z) A + B``: ``A/z`` starlike and normalized, and
    ``Re(conj(z) A' conj(B')) >= 0`` on the grid."""
    if F.order != 2:
        raise DomainError(f"area check needs a bi-analytic function, got order {F.order}")
    b, a = F.components
    flags = {"quotient_starlike": False, "normalized": False, "cross_term_nonnegative": False}
    if abs(a[0]) == 0.0:
        phi = ser.shift_down(a)
        flags["normalized"] = abs(phi[1] - 1.0) <= 1e-12
        flags["quotient_starlike"] = abs(phi[0]) == 0.0 and is_starlike(phi, grid)
    pts = np.concatenate([[0j], polar_grid(STARLIKE_RADIUS, grid, grid)])
    cross = np.real(np.conj(pts) * ser.eval_series(ser.derivative(a), pts)
                    * np.conj(ser.eval_series(ser.derivative(b), pts)))
    flags["cross_term_nonnegative"] = bool(cross.min() >= -CROSS_TERM_TOL)
    return flags


def min_area_check(F: PolyFunction, r: float, q: QuadratureConfig | None = None, *,
                   grid: int = 64, seed: int | None = None) -> BoundReport:
    """Signed area ``int J_F dA`` over ``|z| <= r`` against ``pi r**6 / 3``.

    The report reads ``lhs = pi r**6 / 3 <= rhs = area``.
    """
    _check_radius(r)
    flags = area_hypotheses(F, grid)
    quad = moment_quadrature(F, r, 0.0, q)
    return BoundReport.build(
        math.pi * r**6 / 3.0,
        quad.value,
        flags,
        tolerance=AREA_TOL,
        seed=seed,
        details={"r": r, "panels": list(quad.panels)},
    )


# -- starlike linkage -----------------------------------------------------

def starlike_linkage_check(A: AnalyticSeries, grid: int = 64, *, seed: int | None = None) -> BoundReport:
    """Compares starlikeness of ``A`` with the two criteria for ``Phi = z conj(z) A``.

    (a) ``Re(z A'/A) > 0``; (b) ``J_Phi > 0``; (c) ``Re((z Phi_z - conj(z) Phi_zbar)/Phi) > 0``,
    each at every nonzero grid point. The report has ``lhs = 1`` exactly when
    (a) and (b and c) disagree, so it passes iff the equivalence is observed.
    """
    pts = polar_grid(STARLIKE_RADIUS, grid, grid)
    phi = PolyFunction((ser.zero(), ser.shift_up(A)))
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = starlike_ratio(A, pts)
        num = pts * eval_poly(d_z(phi), pts) - np.conj(pts) * eval_poly(d_zbar(phi), pts)
        via_phi = num / eval_poly(phi, pts)
        scale = np.maximum(1.0, np.abs(direct))
        identity_err = np.abs(via_phi - direct) / scale
    jac = jacobian(phi, pts)

    a_pt = np.isfinite(direct) & (np.real(direct) > 0)
    b_pt = jac > 0
    c_pt = np.isfinite(via_phi) & (np.real(via_phi) > 0)
    a, b, c = bool(a_pt.all()), bool(b_pt.all()), bool(c_pt.all())
    finite_err = identity_err[np.isfinite(identity_err)]
    return BoundReport.build(
        0.0 if a == (b and c) else 1.0,
        0.0,
        {"normalized": abs(A[0]) == 0.0 and abs(A[1] - 1.0) <= 1e-12},
        seed=seed,
        details={
            "starlike": a,
            "jacobian_positive": b,
            "ratio_positive": c,
            "pointwise_mismatches": int(np.count_nonzero(a_pt != c_pt)),
            "identity_error": float(finite_err.max()) if finite_err.size else 0.0,
            "min_re_ratio": float(np.real(direct[np.isfinite(direct)]).min()),
        },
    )
