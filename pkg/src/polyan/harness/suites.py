"""Verification suites: one checked inequality family per suite, many seeded trials."""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .. import series as ser
from ..bohr import bohr_bound, bohr_radius, check_bohr, check_distance_bound, DISTANCE_RADIUS
from ..geometry import (
    QuadratureConfig, arclength, arclength_bound, area_hypotheses, max_modulus,
    min_area_check, moment_quadrature, moment_lower_bound, starlike_linkage_check,
)
from ..landau import check_covering, check_injectivity, landau_R, landau_rho
from ..polyfun import PolyFunction, d_z, d_zbar, eval_poly, majorant_poly, wirtinger_fd
from ..reports import BoundReport, DomainError
from ..series import AnalyticSeries
from .config import HarnessConfig
from .generators import (
    RNG_ALGORITHM, GeneratorSpec, gen_area, gen_bohr, gen_landau, gen_moment,
    gen_nonstarlike, gen_starlike, make_rng, random_tail,
)

LANDAU_SHRINK = 1e-3
BOHR_OFFSET = 1e-3
BOHR_RADII = 20
ARCLENGTH_RADII = (0.3, 0.5, 0.7)
MOMENT_RADII = (0.3, 0.6, 0.9)
MOMENT_ORDERS = (0.0, 1.0, 2.0)
FD_STEP = 1e-5
FD_TOL = 1e-6


@dataclass
class SuiteResult:
    suite: str
    trials: int
    passes: int
    worst_margin: float
    failures: list[tuple[int, BoundReport]] = field(default_factory=list)
    worst: BoundReport | None = None
    seed: int = 0

    @property
    def all_passed(self) -> bool:
        return self.passes == self.trials

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "passes": self.passes,
            "worst_margin": self.worst_margin,
            "seed": self.seed,
            "failures": [{"seed": s, "report": r.to_dict()} for s, r in self.failures],
            "worst": None if self.worst is None else self.worst.to_dict(),
        }


def _cycle(options, seed: int):
    return options[seed % len(options)]


def _spec(family: str, seed: int, cfg: HarnessConfig, alpha: int = 2) -> GeneratorSpec:
    return GeneratorSpec(family, alpha=alpha, M=cfg.M, truncation=cfg.truncation, seed=seed)


def _tagged(report: BoundReport, spec: GeneratorSpec | None, seed: int, **extra: Any) -> BoundReport:
    details = dict(report.details)
    if spec is not None:
        details["spec"] = spec.to_dict()
    details.update(extra)
    return BoundReport(report.lhs, report.rhs, report.margin, report.hypothesis_flags, seed,
                       report.passed, report.tolerance, report.strict, details)


# -- trials (each returns the reports scored for one seed) -----------------

def trial_landau_univalence(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    alpha = _cycle((2, 3), seed)
    spec = _spec("landau_class", seed, cfg, alpha)
    F = gen_landau(spec)
    rho = landau_rho(cfg.M, alpha).radius * (1.0 - LANDAU_SHRINK)
    return [_tagged(check_injectivity(F, rho, cfg.injectivity_grid), spec, seed, rho=rho)]


def trial_landau_covering(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    alpha = _cycle((2, 3), seed)
    spec = _spec("landau_class", seed, cfg, alpha)
    F = gen_landau(spec)
    rho1 = landau_rho(cfg.M, alpha).radius
    R1 = landau_R(rho1, cfg.M, alpha)
    if R1 <= 0:
        raise DomainError(f"covering radius {R1} <= 0 for M={cfg.M}, alpha={alpha}: claim is vacuous")
    return [_tagged(check_covering(F, rho1, R1), spec, seed, rho1=rho1, R1=R1)]


def trial_bohr(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    alpha = _cycle((2, 3, 4), seed)
    spec = _spec("bohr_class", seed, cfg, alpha)
    F = gen_bohr(spec)
    r0 = bohr_radius(alpha).radius
    main = _tagged(check_bohr(F, r0 - BOHR_OFFSET), spec, seed)
    radii = r0 * np.arange(1, BOHR_RADII + 1) / BOHR_RADII
    excess = [majorant_poly(F, r) - bohr_bound(alpha, r) for r in radii]
    worst = int(np.argmax(excess))
    chain = BoundReport.build(
        majorant_poly(F, radii[worst]), bohr_bound(alpha, radii[worst]),
        tolerance=cfg.tolerance, seed=seed,
        details={"check": "majorant <= bohr_bound", "r": float(radii[worst]), "spec": spec.to_dict()},
    )
    return [main, chain]


def trial_distance(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    alpha = _cycle((2, 3, 4), seed)
    spec = _spec("bohr_class", seed, cfg, alpha)
    F = gen_bohr(spec)
    return [_tagged(check_distance_bound(F, DISTANCE_RADIUS), spec, seed)]


def trial_arclength(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    alpha = _cycle((2, 3), seed)
    r = _cycle(ARCLENGTH_RADII, seed // 2)
    spec = _spec("starlike_class", seed, cfg, alpha)
    F = gen_starlike(spec)
    M_r = max(max_modulus(a, r) for a in F.components[1:])
    length = arclength(F, r, cfg.quadrature())
    bound = arclength_bound(alpha, M_r, r)
    return [BoundReport.build(length, bound, tolerance=cfg.tolerance, seed=seed,
                              details={"r": r, "M_r": M_r, "alpha": alpha, "spec": spec.to_dict()})]


def trial_moments(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    r = _cycle(MOMENT_RADII, seed)
    spec = _spec("moment_class", seed, cfg)
    F = gen_moment(spec)
    flags = area_hypotheses(F)
    out = []
    for p in MOMENT_ORDERS:
        quad = moment_quadrature(F, r, p, cfg.quadrature())
        bound = moment_lower_bound(p, r)
        out.append(BoundReport.build(bound, quad.value, flags, tolerance=cfg.tolerance * bound, seed=seed,
                                     details={"r": r, "p": p, "ratio": quad.value / bound,
                                              "spec": spec.to_dict()}))
    return out


def trial_area(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    r = _cycle(MOMENT_RADII, seed)
    spec = _spec("area_class", seed, cfg)
    F = gen_area(spec)
    return [_tagged(min_area_check(F, r, cfg.quadrature()), spec, seed)]


def trial_linkage(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    spec = _spec("starlike_class", seed, cfg)
    A = gen_starlike(spec).components[1]
    return [_tagged(starlike_linkage_check(A, cfg.linkage_grid), spec, seed)]


def trial_linkage_nonstarlike(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    spec = _spec("nonstarlike_class", seed, cfg)
    A = gen_nonstarlike(spec)
    return [_tagged(starlike_linkage_check(A, cfg.linkage_grid), spec, seed)]


def random_poly(rng: np.random.Generator, alpha: int, degree: int) -> PolyFunction:
    comps = []
    for _ in range(alpha):
        c = random_tail(rng, 0, degree)
        comps.append(AnalyticSeries(c * rng.uniform(0.5, 10.0) / max(np.abs(c).max(), 1e-300)))
    return PolyFunction(tuple(comps))


def trial_calculus(seed: int, cfg: HarnessConfig) -> list[BoundReport]:
    """Wirtinger derivatives vs central differences, majorant algebra, and the
    collapse of ``alpha`` conjugate derivatives to zero."""
    rng = make_rng(seed)
    alpha = int(rng.integers(1, 4))
    degree = int(rng.integers(1, 7))
    F = random_poly(rng, alpha, degree)
    z = 0.9 * math.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
    fz, fzb = wirtinger_fd(F, z, FD_STEP)
    fd_err = max(abs(eval_poly(d_z(F), z) - fz), abs(eval_poly(d_zbar(F), z) - fzb))

    s, t = (AnalyticSeries(random_tail(rng, 0, degree)) for _ in range(2))
    r = rng.uniform(0.0, 0.999)
    eps = 4 * np.finfo(float).eps
    add_gap = ser.majorant(ser.add(s, t), r) - ser.majorant(s, r) - ser.majorant(t, r)
    mul_gap = ser.majorant(ser.mul(s, t), r) - ser.majorant(s, r) * ser.majorant(t, r)

    G = F
    for _ in range(alpha):
        G = d_zbar(G)
    commute = d_zbar(d_z(F)) == d_z(d_zbar(F))

    def rep(name: str, lhs: float, rhs: float, tol: float = 0.0) -> BoundReport:
        return BoundReport.build(lhs, rhs, tolerance=tol, seed=seed, details={"check": name})

    scale = 1.0 + ser.majorant(s, r) * ser.majorant(t, r)
    return [
        rep("wirtinger_fd", fd_err, FD_TOL),
        rep("majorant_subadditive", add_gap, 0.0, eps * scale),
        rep("majorant_submultiplicative", mul_gap, 0.0, eps * scale),
        rep("zbar_collapse", 0.0 if G.is_zero() else 1.0, 0.0),
        rep("wirtinger_commute", 0.0 if commute else 1.0, 0.0),
    ]


SUITES: dict[str, Callable[[int, HarnessConfig], list[BoundReport]]] = {
    "landau-univalence": trial_landau_univalence,
    "landau-covering": trial_landau_covering,
    "bohr": trial_bohr,
    "distance": trial_distance,
    "arclength": trial_arclength,
    "moments": trial_moments,
    "area": trial_area,
    "linkage": trial_linkage,
    "linkage-nonstarlike": trial_linkage_nonstarlike,
    "calculus": trial_calculus,
}


def _run_one(args: tuple[str, int, HarnessConfig]) -> list[BoundReport]:
    name, seed, cfg = args
    return SUITES[name](seed, cfg)


def run_suite(name: str, trials: int, seed: int, config: HarnessConfig | None = None,
              *, workers: int = 1) -> SuiteResult:
    """Runs ``trials`` instances with seeds ``seed, seed + 1, ...``.

    A trial passes when every report it produces passes; failures keep the
    first failing report. Results are merged in seed order, so the outcome
    does not depend on ``workers``.
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if trials < 1:
        raise DomainError("trials must be >= 1")
    cfg = config or HarnessConfig()
    jobs = [(name, seed + i, cfg) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]

    passes, failures = 0, []
    worst: BoundReport | None = None
    for (_, s, _), reports in zip(jobs, results):
        bad = [r for r in reports if not r.passed]
        if bad:
            failures.append((s, bad[0]))
        else:
            passes += 1
        for r in reports:
            if worst is None or r.margin < worst.margin:
                worst = r
    return SuiteResult(name, trials, passes, worst.margin if worst else math.nan,
                       failures, worst, seed)


def suite_report_json(results: list[SuiteResult], cfg: HarnessConfig) -> str:
    """Deterministic JSON for a batch of suites (no timings, sorted keys)."""
    payload = {
        "config": cfg.to_dict(),
        "rng": RNG_ALGORITHM,
        "numpy": np.__version__,
        "suites": [r.to_dict() for r in results],
        "all_passed": all(r.all_passed for r in results),
    }
    return json.dumps(payload, sort_keys=True, indent=2, default=_json_default)


def _json_default(obj: Any) -> Any:
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")
