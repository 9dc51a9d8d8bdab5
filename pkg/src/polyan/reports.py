"""Result records and exceptions shared by every module."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to converge within its refinement budget."""

    def __init__(self, message: str, estimates: tuple[float, float]):
        super().__init__(f"{message} (last estimates {estimates[0]!r}, {estimates[1]!r})")
        self.estimates = estimates


class GenerationError(RuntimeError):
    """Rejection sampling exhausted its budget without an admissible instance."""


@dataclass(frozen=True)
class RadiusResult:
    """A radius defined as the root of a scalar equation.

    Attributes:
        radius: The root, strictly inside (0, 1).
        residual: Value of the defining equation at ``radius``.
        bracket: Final bracketing interval ``(lo, hi)``.
        iterations: Bisection steps taken.
    """

    radius: float
    residual: float
    bracket: tuple[float, float]
    iterations: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "radius": self.radius,
            "residual": self.residual,
            "bracket": list(self.bracket),
            "iterations": self.iterations,
        }


@dataclass(frozen=True)
class BoundReport:
    """One checked inequality ``lhs <= rhs`` (or ``lhs < rhs`` when strict).

    ``margin`` is always ``rhs - lhs``. The instance passes when the margin
    clears the tolerance and every hypothesis flag holds.
    """

    lhs: float
    rhs: float
    margin: float
    hypothesis_flags: dict[str, bool]
    seed: int | None
    passed: bool
    tolerance: float = 0.0
    strict: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        lhs: float,
        rhs: float,
        flags: dict[str, bool] | None = None,
        *,
        tolerance: float = 0.0,
        strict: bool = False,
        seed: int | None = None,
        details: dict[str, Any] | None = None,
    ) -> "BoundReport":
        lhs = float(lhs)
        rhs = float(rhs)
        flags = {k: bool(v) for k, v in (flags or {}).items()}
        margin = rhs - lhs
        if math.isnan(margin):
            ok = False
        elif strict:
            ok = margin > 0.0
        else:
            ok = margin >= -tolerance
        return cls(
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            hypothesis_flags=flags,
            seed=seed,
            passed=ok and all(flags.values()),
            tolerance=tolerance,
            strict=strict,
            details=dict(details or {}),
        )

    @property
    def hypotheses_ok(self) -> bool:
        return all(self.hypothesis_flags.values())

    def failed_flags(self) -> list[str]:
        return [k for k, v in self.hypothesis_flags.items() if not v]

    def with_seed(self, seed: int | None) -> "BoundReport":
        return BoundReport(
            self.lhs, self.rhs, self.margin, dict(self.hypothesis_flags), seed,
            self.passed, self.tolerance, self.strict, dict(self.details),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "hypothesis_flags": dict(sorted(self.hypothesis_flags.items())),
            "seed": self.seed,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "strict": self.strict,
            "details": dict(sorted(self.details.items())),
        }
