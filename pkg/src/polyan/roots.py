"""Bracketing bisection for the monotone radius equations."""

from __future__ import annotations

import math
from typing import Callable

from .reports import DomainError, RadiusResult

LO = 1e-9
HI = 1.0 - 1e-9


def bisect_root(
    f: Callable[[float], float],
    lo: float = LO,
    hi: float = HI,
    *,
    ftol: float = 1e-12,
    xtol: float = 1e-15,
    maxiter: int = 200,
) -> RadiusResult:
    """Root of ``f`` on ``[lo, hi]`` by plain bisection.

    Stops once ``|f(mid)| <= ftol`` and the bracket is narrower than ``xtol``
    (or the bracket cannot shrink further in double precision).

    Raises:
        DomainError: if ``f(lo)`` and ``f(hi)`` do not have opposite signs.
        ArithmeticError: if the residual tolerance is not met within ``maxiter``.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return RadiusResult(lo, 0.0, (lo, lo), 0)
    if fhi == 0.0:
        return RadiusResult(hi, 0.0, (hi, hi), 0)
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise DomainError(f"no sign change on [{lo}, {hi}]: f(lo)={flo}, f(hi)={fhi}")

    mid, fmid = lo, flo
    for it in range(1, maxiter + 1):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return RadiusResult(mid, 0.0, (lo, hi), it)
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        stalled = not (lo < 0.5 * (lo + hi) < hi)
        if abs(fmid) <= ftol and (hi - lo <= xtol or stalled):
            return RadiusResult(mid, fmid, (lo, hi), it)
        if stalled:
            break
    if abs(fmid) <= ftol:
        return RadiusResult(mid, fmid, (lo, hi), maxiter)
    raise ArithmeticError(f"bisection stopped with residual {fmid!r} > {ftol}")
