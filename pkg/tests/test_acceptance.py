"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""

import io
import math
import time

import numpy as np
import pytest

from polyan import geometry as geo
from polyan import landau as ld
from polyan import polyfun as pf
from polyan.bohr import DISTANCE_RADIUS, check_distance_bound
from polyan.harness.cli import main
from polyan.harness.config import HarnessConfig
from polyan.harness.generators import GeneratorSpec, gen_bohr, gen_nonstarlike, gen_starlike
from polyan.harness.suites import run_suite, suite_report_json

pytestmark = pytest.mark.acceptance

CFG = HarnessConfig(seed=0)


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def suite(name, trials):
    return timed(lambda: run_suite(name, trials, CFG.seed, CFG))


def test_01_bohr_table(record_criterion):
    table = {2: 1 / 3, 3: 0.322, 4: 0.319, 5: 0.318, 50: 0.318, 100: 0.318}
    out = io.StringIO()
    code, elapsed = timed(lambda: main(["bohr-table", "--alphas", "reference", "--format", "csv"], out=out))
    rows = [line.split(",") for line in out.getvalue().strip().splitlines()[1:]]
    radii = {int(a): float(r) for a, r, _ in rows}
    worst = max(abs(radii[a] - v) for a, v in table.items())
    ok = (code == 0 and set(radii) == set(table) and worst <= 5e-4
          and abs(radii[2] - 1 / 3) <= 1e-12 and elapsed < 1.0)
    record_criterion(1, "Bohr table", ok, f"max deviation {worst:.2e}, {elapsed:.3f}s")
    assert ok


def test_02_landau_consistency(record_criterion):
    def body():
        errs, resid = [], []
        for M in [1, 1.5, 2, 5, 10, 100]:
            res = ld.landau_rho(M, 2)
            errs.append(abs(res.radius - (1 - math.sqrt(2 * M / (2 * M + 1)))))
            resid.append(abs(res.residual))
        return max(errs), max(resid)

    (err, resid), elapsed = timed(body)
    printed = ld.printed_bianalytic_rho(1)
    ok = err <= 1e-12 and resid <= 1e-12 and printed > 1 and abs(printed - 1.816) < 1e-3 and elapsed < 1.0
    record_criterion(2, "Landau consistency", ok,
                     f"closed-form error {err:.1e}, residual {resid:.1e}, printed form {printed:.4f}")
    assert ok


def test_03_univalence_suite(record_criterion):
    inj, t1 = suite("landau-univalence", 200)
    cov, t2 = suite("landau-covering", 200)
    ok = inj.all_passed and cov.all_passed and t1 + t2 < 120
    record_criterion(3, "Univalence suite", ok,
                     f"injectivity {inj.passes}/200, covering {cov.passes}/200, {t1 + t2:.1f}s")
    assert ok


def test_04_bohr_suite(record_criterion):
    res, elapsed = suite("bohr", 200)
    ok = res.all_passed and elapsed < 60
    record_criterion(4, "Bohr suite", ok, f"{res.passes}/200, worst margin {res.worst_margin:.2e}, {elapsed:.1f}s")
    assert ok


def test_05_distance_suite(record_criterion):
    res, elapsed = suite("distance", 200)
    # order-2 instances must use the factor 1 + r
    r = DISTANCE_RADIUS
    factor_ok = True
    for seed in range(0, 30, 3):
        F = gen_bohr(GeneratorSpec("bohr_class", alpha=2, seed=seed))
        rep = check_distance_bound(F, r)
        factor_ok &= math.isclose(rep.rhs, (1 + r) * rep.details["distance"], rel_tol=1e-15)
    ok = res.all_passed and factor_ok and elapsed < 60
    record_criterion(5, "Distance suite", ok, f"{res.passes}/200, order-2 factor {factor_ok}, {elapsed:.1f}s")
    assert ok


def test_06_arclength(record_criterion):
    start = time.perf_counter()
    closed = []
    for r in [0.3, 0.5, 0.7]:
        closed.append(abs(geo.arclength(pf.from_components([0, 1]), r) - 2 * math.pi * r))
        closed.append(abs(geo.arclength(pf.from_components([0], [0, 1]), r)))
        closed.append(abs(geo.arclength(pf.from_components([0], [0, 0, 1]), r) - 2 * math.pi * r**3))
    res = run_suite("arclength", 200, CFG.seed, CFG)
    rng = np.random.default_rng(0)
    ident = 0.0
    for M, r in zip(rng.uniform(0.1, 10, 100), rng.uniform(0.01, 0.99, 100)):
        expected = 4 * math.pi * M * r**2 / (1 - r)
        ident = max(ident, abs(geo.arclength_bound(2, M, r) - expected) / expected)
    elapsed = time.perf_counter() - start
    ok = max(closed) <= 1e-9 and res.all_passed and ident <= 1e-12 and elapsed < 120
    record_criterion(6, "Arclength", ok, f"closed forms {max(closed):.1e}, bound {res.passes}/200, "
                                         f"order-2 identity {ident:.1e}, {elapsed:.1f}s")
    assert ok


def test_07_moments(record_criterion):
    start = time.perf_counter()
    F = pf.from_components([0], [0, 0, 1])
    rel, ratio_err = 0.0, 0.0
    for p in [0, 1, 2]:
        for r in [0.3, 0.6, 0.9]:
            e = 3 * p + 6
            value = geo.moment_p(F, r, p)
            rel = max(rel, abs(value / (6 * math.pi * r**e / e) - 1))
            ratio_err = max(ratio_err, abs(value / geo.moment_lower_bound(p, r) - 3))
    res = run_suite("moments", 200, CFG.seed, CFG)
    elapsed = time.perf_counter() - start
    ok = rel <= 1e-8 and ratio_err <= 1e-6 and res.all_passed and elapsed < 180
    record_criterion(7, "Moments", ok, f"closed form {rel:.1e}, ratio 3 within {ratio_err:.1e}, "
                                       f"bound {res.passes}/200, {elapsed:.1f}s")
    assert ok


def test_08_area(record_criterion):
    res, elapsed = suite("area", 200)
    ok = res.all_passed and elapsed < 120
    record_criterion(8, "Area", ok, f"{res.passes}/200, worst margin {res.worst_margin:.2e}, {elapsed:.1f}s")
    assert ok


def test_09_linkage(record_criterion):
    start = time.perf_counter()
    reports = [geo.starlike_linkage_check(gen_starlike(GeneratorSpec("starlike_class", seed=s)).components[1])
               for s in range(50)]
    reports += [geo.starlike_linkage_check(gen_nonstarlike(GeneratorSpec("nonstarlike_class", seed=s)))
                for s in range(20)]
    elapsed = time.perf_counter() - start
    starlike = [r.details["starlike"] for r in reports]
    ident = max(r.details["identity_error"] for r in reports)
    ok = (all(r.passed for r in reports) and all(starlike[:50]) and not any(starlike[50:])
          and ident <= 1e-10 and elapsed < 60)
    record_criterion(9, "Linkage", ok, f"{sum(r.passed for r in reports)}/70 equivalent, "
                                       f"identity error {ident:.1e}, {elapsed:.1f}s")
    assert ok


def test_10_calculus(record_criterion):
    a = suite_report_json([run_suite("calculus", 200, CFG.seed, CFG)], CFG)
    b = suite_report_json([run_suite("calculus", 200, CFG.seed, CFG)], CFG)
    res = run_suite("calculus", 200, CFG.seed, CFG)
    ok = res.all_passed and a == b
    record_criterion(10, "Calculus/property suite", ok, f"{res.passes}/200, byte-identical JSON {a == b}")
    assert ok
