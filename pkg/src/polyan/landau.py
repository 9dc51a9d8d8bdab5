"""Univalence and covering radii for normalized bounded poly-analytic functions.

The univalence radius is the root in (0, 1) of

    g(rho) = 1 - M * [rho (2 - rho) + sum_{k=1}^{alpha-1} rho**k (1 + k - rho)] / (1 - rho)**2

and the covering radius is an explicit expression in that root. Both come with
sampling oracles (:func:`check_injectivity`, :func:`check_covering`) that test
the claims on concrete functions.
"""

from __future__ import annotations

import math

import numpy as np

from .polyfun import PolyFunction, eval_poly
from .reports import BoundReport, DomainError, RadiusResult
from .roots import bisect_root
from .sampling import circle_extremum, polar_grid

RESIDUAL_TOL = 1e-12
INJECTIVITY_FLOOR = 1e-10
COVERING_TOL = 1e-9
_ALL_PAIRS_CHUNK = 256


def _check_M_alpha(M: float, alpha: int, *, min_alpha: int = 2) -> None:
    if not (math.isfinite(M) and M >= 1.0):
        raise DomainError(f"M must be >= 1 (normalization forces it), got {M}")
    if int(alpha) != alpha or alpha < min_alpha:
        raise DomainError(f"alpha must be an integer >= {min_alpha}, got {alpha}")


def landau_g(rho: float, M: float, alpha: int) -> float:
    """Left side of the univalence-radius equation."""
    s = rho * (2.0 - rho)
    for k in range(1, alpha):
        s += rho**k * (1.0 + k - rho)
    return 1.0 - M * s / (1.0 - rho) ** 2


def landau_rho(M: float, alpha: int, *, tol: float = RESIDUAL_TOL) -> RadiusResult:
    """Univalence radius by bisection on ``[1e-9, 1 - 1e-9]``."""
    _check_M_alpha(M, alpha)
    return bisect_root(lambda r: landau_g(r, M, alpha), ftol=tol, maxiter=200)


def landau_R(rho1: float, M: float, alpha: int) -> float:
    """Covering radius; may be negative, in which case it carries no information."""
    if not (0.0 < rho1 < 1.0):
        raise DomainError(f"rho1 must lie in (0, 1), got {rho1}")
    _check_M_alpha(M, alpha)
    geometric = (1.0 - rho1 ** (alpha - 1)) / (1.0 - rho1)
    tail = sum(rho1 ** (k + 2) for k in range(alpha)) / (1.0 - rho1)
    return rho1 - rho1**2 * geometric - M * tail


def bianalytic_R(rho1: float, M: float) -> float:
    """Covering radius written in its order-2 form."""
    if not (0.0 < rho1 < 1.0):
        raise DomainError(f"rho1 must lie in (0, 1), got {rho1}")
    return rho1 - rho1**2 - M * (rho1**3 + rho1**2) / (1.0 - rho1)


def bianalytic_g(rho: float, M: float) -> float:
    return 1.0 - 2.0 * M * (2.0 * rho - rho**2) / (1.0 - rho) ** 2


def bianalytic_rho(M: float) -> RadiusResult:
    """Closed-form root ``1 - sqrt(2M / (2M + 1))`` of the order-2 equation.

    Evaluated as ``(1/(2M+1)) / (1 + sqrt(2M/(2M+1)))`` to avoid cancellation.
    """
    _check_M_alpha(M, 2)
    q = 2.0 * M / (2.0 * M + 1.0)
    rho = (1.0 / (2.0 * M + 1.0)) / (1.0 + math.sqrt(q))
    return RadiusResult(rho, bianalytic_g(rho, M), (rho, rho), 0)


def printed_bianalytic_rho(M: float) -> float:
    """The closed form as typeset in the source; exceeds 1 for every M >= 1.

    Kept only so tests can document that it is not a root of the equation.
    """
    q = 2.0 * M / (2.0 * M + 1.0)
    return q * (1.0 + math.sqrt(1.0 / q) + 1.0 / (2.0 * M))


def classical_landau_rho(M: float) -> float:
    """Sharp analytic-case radius ``1 / (M + sqrt(M**2 - 1))`` (reference only)."""
    if M < 1.0:
        raise DomainError("M must be >= 1")
    return 1.0 / (M + math.sqrt(M * M - 1.0))


def min_image_ratio(F: PolyFunction, points: np.ndarray) -> tuple[float, int, int]:
    """Minimum of ``|F(z_i) - F(z_j)| / |z_i - z_j|`` over all pairs ``i != j``.

    Exact all-pairs comparison, processed in row blocks to bound memory.
    Returns the ratio and the indices of the minimizing pair.
    """
    pts = np.asarray(points, dtype=np.complex128).ravel()
    if pts.size < 2:
        raise DomainError("need at least two sample points")
    img = np.asarray(eval_poly(F, pts))
    best, bi, bj = math.inf, -1, -1
    for start in range(0, pts.size, _ALL_PAIRS_CHUNK):
        stop = min(start + _ALL_PAIRS_CHUNK, pts.size)
        dz = np.abs(pts[start:stop, None] - pts[None, :])
        dw = np.abs(img[start:stop, None] - img[None, :])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dz > 0, dw / dz, np.inf)
        k = int(np.argmin(ratio))
        val = float(ratio.flat[k])
        if val < best:
            best = val
            bi, bj = start + k // pts.size, k % pts.size
    return best, bi, bj


def check_injectivity(F: PolyFunction, rho: float, grid: int = 32) -> BoundReport:
    """Sampled univalence test on ``|z| < rho``.

    Uses the origin plus ``grid`` radii by ``grid`` angles strictly inside the
    disk. Passes when the smallest image/preimage distance ratio is positive
    (above ``INJECTIVITY_FLOOR``).
    """
    if not (0.0 < rho < 1.0):
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    if grid < 8:
        raise DomainError(f"grid must be >= 8, got {grid}")
    pts = np.concatenate([[0j], polar_grid(rho, grid, grid, include_boundary=False)])
    ratio, i, j = min_image_ratio(F, pts)
    return BoundReport.build(
        INJECTIVITY_FLOOR,
        ratio,
        strict=True,
        details={
            "min_ratio": ratio,
            "pair": [[pts[i].real, pts[i].imag], [pts[j].real, pts[j].imag]],
            "points": int(pts.size),
        },
    )


def check_covering(F: PolyFunction, rho: float, R: float, samples: int = 1024) -> BoundReport:
    """Checks ``min_{|z| = rho} |F(z)| >= R`` up to ``COVERING_TOL``."""
    if not (0.0 < rho < 1.0):
        raise DomainError(f"rho must lie in (0, 1), got {rho}")
    if samples < 64:
        raise DomainError(f"samples must be >= 64, got {samples}")
    fmin, theta = circle_extremum(lambda z: np.abs(eval_poly(F, z)), rho, samples, kind="min")
    return BoundReport.build(
        R,
        fmin,
        tolerance=COVERING_TOL,
        details={"min_modulus": fmin, "theta": theta, "informative": bool(R > 0)},
    )
