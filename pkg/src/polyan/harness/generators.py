"""Seeded random generators for each hypothesis class.

Every generator draws from ``numpy.random.Generator(PCG64(seed))`` only, so a
:class:`GeneratorSpec` fully determines its instance. Candidates are validated
against the same hypothesis checks the suites use and redrawn (from the same
stream) until they pass or the attempt budget runs out.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .. import series as ser
from ..bohr import bohr_hypotheses
from ..geometry import area_hypotheses, is_starlike
from ..polyfun import PolyFunction
from ..reports import DomainError, GenerationError
from ..series import AnalyticSeries

RNG_ALGORITHM = "numpy.random.PCG64"
MAX_ATTEMPTS = 1000
FAMILIES = ("landau_class", "bohr_class", "starlike_class", "moment_class",
            "area_class", "nonstarlike_class")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    alpha: int = 2
    M: float = 2.0
    truncation: int = ser.DEFAULT_TRUNCATION
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.truncation < 1:
            raise DomainError("truncation must be >= 1")

    def to_dict(self) -> dict:
        return asdict(self)


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_tail(rng: np.random.Generator, start: int, degree: int,
                decay: tuple[float, float] = (0.3, 0.8)) -> np.ndarray:
    """Coefficients ``a_start .. a_degree`` with ``|a_n| = u_n d**n`` and uniform phases."""
    out = np.zeros(degree + 1, dtype=np.complex128)
    if degree < start:
        return out
    d = rng.uniform(*decay)
    n = np.arange(start, degree + 1)
    mag = rng.uniform(0.0, 1.0, n.size) * d**n
    phase = rng.uniform(0.0, 2.0 * np.pi, n.size)
    out[start:] = mag * np.exp(1j * phase)
    return out


def _scaled(tail: np.ndarray, total: float, weights: np.ndarray | None = None) -> np.ndarray:
    """Rescale so that ``sum(weights * |tail|) == total``."""
    w = np.ones(tail.size) if weights is None else weights
    s = float(np.sum(w * np.abs(tail)))
    return tail * (total / s) if s > 0 else tail


def _attempt(build: Callable[[np.random.Generator], PolyFunction | None], spec: GeneratorSpec):
    rng = make_rng(spec.seed)
    for _ in range(MAX_ATTEMPTS):
        out = build(rng)
        if out is not None:
            return out
    raise GenerationError(f"no admissible {spec.family} instance after {MAX_ATTEMPTS} attempts "
                          f"(spec={spec.to_dict()})")


def gen_landau(spec: GeneratorSpec) -> PolyFunction:
    """``A_k(0) = 0``, ``A_k'(0) = 1`` and ``sum_n |a_{n,k}| <= M`` for every k.

    The coefficient bound gives ``|A_k| <= M`` on the disk.
    """
    if not spec.M >= 1.0:
        raise DomainError(f"M must be >= 1 (a_1 = 1 already uses the whole budget at M = 1), got {spec.M}")
    if spec.alpha < 2:
        raise DomainError("alpha must be >= 2")
    N = spec.truncation

    def build(rng: np.random.Generator) -> PolyFunction:
        comps = []
        for _ in range(spec.alpha):
            c = random_tail(rng, 2, N)
            budget = (spec.M - 1.0) * rng.uniform(0.0, 1.0)
            c = _scaled(c, budget)
            c[1] = 1.0
            comps.append(AnalyticSeries(c))
        return PolyFunction(tuple(comps))

    return _attempt(build, spec)


def _near_identity(rng: np.random.Generator, N: int, slope_budget: float) -> tuple[AnalyticSeries, float, float]:
    """``z + sum_{n>=2} a_n z**n`` with ``sum n |a_n| = slope_budget``.

    Returns the series, ``sum |a_n|`` and ``sum n |a_n|`` over the tail.
    """
    c = random_tail(rng, 2, N)
    n = np.arange(N + 1)
    c = _scaled(c, slope_budget, n.astype(float))
    c[1] = 1.0
    tail = np.abs(c[2:])
    return AnalyticSeries(c), float(tail.sum()), float((n[2:] * tail).sum())


def gen_bohr(spec: GeneratorSpec) -> PolyFunction:
    """Normalized self-maps of the disk whose ``A_0 + conj(A_k)`` preserve orientation.

    ``A_0 = z + small tail`` (``Re A_0' > 0`` makes it univalent) and
    ``F = A_0 (1 - c|z|**2 + sum_{k>=2} c_k |z|**(2k)) + sum_k conj(z)**k R_k``
    with small ``R_k(0) = 0``. The radial damping keeps ``|F| < 1`` without
    rescaling ``A_0``; the coefficient certificate is checked first, then
    every hypothesis flag is re-validated numerically.
    """
    if spec.alpha < 2:
        raise DomainError("alpha must be >= 2")
    N = spec.truncation

    def build(rng: np.random.Generator) -> PolyFunction | None:
        a0, delta, _ = _near_identity(rng, N, rng.uniform(0.0, 0.15))
        c = rng.uniform(0.15, 0.3)
        comps = [a0]
        mod_bound = 1.0 - c
        extra = 0.0
        for k in range(1, spec.alpha):
            if k == 1:
                ck = -c
            else:
                ck = (0.02 / k) * rng.uniform(0.0, 1.0) * np.exp(2j * np.pi * rng.uniform())
                mod_bound += abs(ck)
            r_k = _scaled(random_tail(rng, 1, N), rng.uniform(0.0, 0.03), np.arange(N + 1.0))
            extra += float(np.abs(r_k).sum())
            comps.append(ser.add(ser.shift_up(a0, k).scale(ck), AnalyticSeries(r_k)))
        # sup |F| <= (1 + delta) * (1 - c + sum |c_k|) + sum ||R_k||_1 since t (1 - c t^2) increases for c <= 1/3
        if (1.0 + delta) * mod_bound + extra >= 1.0:
            return None
        F = PolyFunction(tuple(comps))
        if not all(bohr_hypotheses(F).values()):
            return None
        return F

    return _attempt(build, spec)


def starlike_series(rng: np.random.Generator, N: int) -> AnalyticSeries:
    """``z * prod_j (1 - w_j z)**(-2 mu_j)`` with ``|w_j| < 1``, ``sum mu_j <= 1``.

    ``Re(z A'/A) = 1 + sum_j 2 mu_j Re(w_j z / (1 - w_j z)) > 1 - sum_j mu_j >= 0``,
    so the untruncated function is starlike; the truncation is re-checked on a grid.
    """
    if N < 2:
        return ser.identity().padded(max(N, 1))
    J = int(rng.integers(1, 4))
    mu = rng.dirichlet(np.ones(J)) * rng.uniform(0.2, 1.0)
    t = rng.uniform(0.3, 0.8, J)
    w = t * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, J))
    n = np.arange(1, N)
    expo = np.zeros(N, dtype=np.complex128)
    for mu_j, w_j in zip(mu, w):
        expo[1:] += 2.0 * mu_j * w_j**n / n
    return ser.shift_up(ser.exp_series(AnalyticSeries(expo)))


def _checked_starlike(rng: np.random.Generator, N: int) -> AnalyticSeries | None:
    a = starlike_series(rng, N)
    return a if is_starlike(a) else None


def gen_starlike(spec: GeneratorSpec) -> PolyFunction:
    """``sum_{k=1}^{alpha-1} conj(z)**k A_k`` with each ``A_k`` normalized starlike, ``A_0 = 0``."""
    if spec.alpha < 2:
        raise DomainError("alpha must be >= 2")

    def build(rng: np.random.Generator) -> PolyFunction | None:
        comps = [ser.zero()]
        for _ in range(1, spec.alpha):
            a = _checked_starlike(rng, spec.truncation)
            if a is None:
                return None
            comps.append(a)
        return PolyFunction(tuple(comps))

    return _attempt(build, spec)


def gen_moment(spec: GeneratorSpec) -> PolyFunction:
    """``conj(z) * z * phi`` with ``phi`` normalized starlike; truncation 1 gives ``phi = z``."""

    def build(rng: np.random.Generator) -> PolyFunction | None:
        phi = _checked_starlike(rng, spec.truncation) if spec.truncation > 1 else ser.identity()
        if phi is None:
            return None
        return PolyFunction((ser.zero(), ser.shift_up(phi)))

    return _attempt(build, spec)


def gen_area(spec: GeneratorSpec) -> PolyFunction:
    """``conj(z) A + B`` with ``A = z phi`` (``phi`` starlike) and ``B' = (A'/z) q``.

    ``q = s (1 + w z)/(1 - w z) + i beta`` has ``Re q >= 0``, and then
    ``Re(conj(z) A' conj(B')) = |A'|**2 Re q >= 0``.
    """
    N = spec.truncation

    def build(rng: np.random.Generator) -> PolyFunction | None:
        phi = _checked_starlike(rng, N) if N > 1 else ser.identity()
        if phi is None:
            return None
        a = ser.shift_up(phi)
        w = rng.uniform(0.0, 0.8) * np.exp(2j * np.pi * rng.uniform())
        qc = 2.0 * np.power(w, np.arange(N + 1))
        qc[0] = 1.0
        q = ser.add(AnalyticSeries(qc * rng.uniform(0.0, 1.0)), ser.constant(1j * rng.uniform(-1.0, 1.0)))
        b_prime = ser.mul(ser.shift_down(ser.derivative(a)), q)
        b0 = complex(rng.normal(), rng.normal())
        F = PolyFunction((ser.antiderivative(b_prime, b0), a))
        if not all(area_hypotheses(F).values()):
            return None
        return F

    return _attempt(build, spec)


def gen_nonstarlike(spec: GeneratorSpec) -> AnalyticSeries:
    """``z + c z**m`` (m = 2 or 3) with ``|c|`` well beyond the starlike range
    (1/2 resp. 1/3), confirmed non-starlike on the grid."""

    def build(rng: np.random.Generator):
        m = int(rng.integers(2, 4))
        lo = 0.8 if m == 2 else 0.6
        c = rng.uniform(lo, 2.0) * np.exp(2j * np.pi * rng.uniform())
        a = ser.add(ser.identity(), ser.monomial(m, c))
        return None if is_starlike(a) else a

    return _attempt(build, spec)


GENERATORS: dict[str, Callable[[GeneratorSpec], object]] = {
    "landau_class": gen_landau,
    "bohr_class": gen_bohr,
    "starlike_class": gen_starlike,
    "moment_class": gen_moment,
    "area_class": gen_area,
    "nonstarlike_class": gen_nonstarlike,
}


def generate(spec: GeneratorSpec):
    return GENERATORS[spec.family](spec)


def landau_coefficient_excess(F: PolyFunction, M: float) -> float:
    """``max_k sum_{n>=1} |a_{n,k}| - M``; nonpositive for members of the class."""
    return max(float(np.abs(c.coeffs[1:]).sum()) for c in F.components) - M


__all__ = [
    "FAMILIES", "GeneratorSpec", "RNG_ALGORITHM", "MAX_ATTEMPTS", "gen_landau", "gen_bohr",
    "gen_starlike", "gen_moment", "gen_area", "gen_nonstarlike", "generate", "make_rng",
    "random_tail", "starlike_series", "landau_coefficient_excess",
]
