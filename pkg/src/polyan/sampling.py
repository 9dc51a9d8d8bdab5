"""Polar grids and sampled extrema on circles."""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar


def polar_grid(radius: float, n_radii: int, n_angles: int, *, include_boundary: bool = True) -> np.ndarray:
    """Points ``radius * j / n * exp(i theta)`` for ``j = 1..n_radii``.

    With ``include_boundary=False`` the radii are ``radius * j / (n_radii + 1)``
    so every point lies strictly inside the disk. The origin is never included.
    """
    denom = n_radii if include_boundary else n_radii + 1
    radii = radius * np.arange(1, n_radii + 1) / denom
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    return (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()


def circle_points(radius: float, samples: int) -> tuple[np.ndarray, np.ndarray]:
    theta = 2.0 * np.pi * np.arange(samples) / samples
    return theta, radius * np.exp(1j * theta)


def circle_extremum(
    modulus: Callable[[np.ndarray], np.ndarray],
    radius: float,
    samples: int,
    *,
    kind: str = "min",
) -> tuple[float, float]:
    """Sampled min or max of ``modulus(z)`` over ``|z| = radius`` with local refinement.

    Returns ``(value, theta)``. The refinement searches one sample spacing on
    either side of the best sample, so the result is never worse than the grid.
    """
    sign = 1.0 if kind == "min" else -1.0
    theta, z = circle_points(radius, samples)
    vals = sign * np.asarray(modulus(z), dtype=float)
    j = int(np.argmin(vals))
    best_val, best_theta = float(vals[j]), float(theta[j])
    step = 2.0 * np.pi / samples

    def objective(t: float) -> float:
        return sign * float(modulus(np.array([radius * np.exp(1j * t)]))[0])

    res = minimize_scalar(
        objective,
        bounds=(best_theta - step, best_theta + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    if res.success and res.fun < best_val:
        best_val, best_theta = float(res.fun), float(res.x) % (2.0 * np.pi)
    return sign * best_val, best_theta
