"""Truncated complex power series and their majorant series.

An :class:`AnalyticSeries` stores ``a_0 .. a_N`` of ``sum a_n z**n``. Values
are immutable; every operation returns a new series.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .reports import DomainError

DEFAULT_TRUNCATION = 64
MAX_PRODUCT_DEGREE = 256
# Slack on |z| <= 1 for points that land on the circle after rounding.
_DISK_SLACK = 1e-12


def _as_coeff_array(coeffs: Iterable[complex]) -> np.ndarray:
    arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                   dtype=np.complex128).ravel()
    if arr.size == 0:
        arr = np.zeros(1, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError("series coefficients must be finite")
    arr = arr.copy()
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """Truncated Taylor series ``sum_{n=0}^{N} a_n z**n``.

    Trailing zero coefficients are kept, so ``truncation_degree`` reflects the
    storage length rather than the true polynomial degree.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _as_coeff_array(self.coeffs))

    @property
    def truncation_degree(self) -> int:
        return self.coeffs.size - 1

    def __len__(self) -> int:
        return self.coeffs.size

    def __getitem__(self, n: int) -> complex:
        if 0 <= n < self.coeffs.size:
            return complex(self.coeffs[n])
        return 0j

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnalyticSeries):
            return NotImplemented
        return np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs.tobytes())

    def __repr__(self) -> str:
        return f"AnalyticSeries(N={self.truncation_degree}, coeffs={self.coeffs.tolist()!r})"

    def __call__(self, z):
        return eval_series(self, z)

    def __add__(self, other: "AnalyticSeries") -> "AnalyticSeries":
        return add(self, other)

    def __mul__(self, other: "AnalyticSeries") -> "AnalyticSeries":
        return mul(self, other)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def scale(self, c: complex) -> "AnalyticSeries":
        return AnalyticSeries(self.coeffs * complex(c))

    def padded(self, degree: int) -> "AnalyticSeries":
        """Return the series stored with exactly ``degree + 1`` coefficients."""
        if degree < 0:
            raise DomainError("degree must be >= 0")
        out = np.zeros(degree + 1, dtype=np.complex128)
        n = min(degree + 1, self.coeffs.size)
        out[:n] = self.coeffs[:n]
        return AnalyticSeries(out)

    def abs_sum(self) -> float:
        """Sum of coefficient moduli; the majorant series evaluated at r = 1."""
        return float(np.abs(self.coeffs).sum())

    def to_json_obj(self) -> list[list[float]]:
        return [[float(c.real), float(c.imag)] for c in self.coeffs]

    @classmethod
    def from_json_obj(cls, obj: Sequence[Sequence[float]]) -> "AnalyticSeries":
        try:
            return cls([complex(float(re), float(im)) for re, im in obj])
        except (TypeError, ValueError) as exc:
            raise DomainError(f"series JSON must be a list of [re, im] pairs: {exc}") from exc


def _check_points(z) -> np.ndarray:
    zz = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(zz)):
        raise DomainError("evaluation point must be finite")
    if np.any(np.abs(zz) > 1.0 + _DISK_SLACK):
        raise DomainError("evaluation point must lie in the closed unit disk")
    return zz


def eval_series(s: AnalyticSeries, z):
    """Evaluate ``s`` at ``z`` (scalar or array) by Horner's rule."""
    zz = _check_points(z)
    out = np.polyval(s.coeffs[::-1], zz)
    if np.ndim(out) == 0:
        return complex(out)
    return out


def derivative(s: AnalyticSeries) -> AnalyticSeries:
    if s.truncation_degree == 0:
        return AnalyticSeries([0j])
    n = np.arange(1, s.coeffs.size)
    return AnalyticSeries(s.coeffs[1:] * n)


def antiderivative(s: AnalyticSeries, constant: complex = 0j) -> AnalyticSeries:
    """Primitive of ``s`` with prescribed value at 0; degree grows by one."""
    out = np.empty(s.coeffs.size + 1, dtype=np.complex128)
    out[0] = constant
    out[1:] = s.coeffs / np.arange(1, s.coeffs.size + 1)
    return AnalyticSeries(out)


def add(s: AnalyticSeries, t: AnalyticSeries) -> AnalyticSeries:
    n = max(s.coeffs.size, t.coeffs.size)
    out = np.zeros(n, dtype=np.complex128)
    out[: s.coeffs.size] += s.coeffs
    out[: t.coeffs.size] += t.coeffs
    return AnalyticSeries(out)


def sub(s: AnalyticSeries, t: AnalyticSeries) -> AnalyticSeries:
    return add(s, t.scale(-1.0))


def mul(s: AnalyticSeries, t: AnalyticSeries, max_degree: int | None = None) -> AnalyticSeries:
    """Cauchy product truncated at ``max_degree``.

    The default keeps the full product degree, capped at ``MAX_PRODUCT_DEGREE``.
    """
    full = s.truncation_degree + t.truncation_degree
    if max_degree is None:
        max_degree = min(full, MAX_PRODUCT_DEGREE)
    if max_degree < 0:
        raise DomainError("max_degree must be >= 0")
    prod = np.convolve(s.coeffs, t.coeffs)
    return AnalyticSeries(prod[: max_degree + 1]).padded(max_degree)


def shift_up(s: AnalyticSeries, k: int = 1) -> AnalyticSeries:
    """Multiply by ``z**k``."""
    return AnalyticSeries(np.concatenate([np.zeros(k, dtype=np.complex128), s.coeffs]))


def shift_down(s: AnalyticSeries, k: int = 1) -> AnalyticSeries:
    """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
    if np.any(s.coeffs[:k]):
        raise DomainError(f"series is not divisible by z**{k}")
    if s.coeffs.size <= k:
        return AnalyticSeries([0j])
    return AnalyticSeries(s.coeffs[k:])


def majorant(s: AnalyticSeries, r: float) -> float:
    """Majorant series ``sum |a_n| r**n`` for ``0 <= r < 1``."""
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"majorant radius must satisfy 0 <= r < 1, got {r}")
    return float(np.polyval(np.abs(s.coeffs)[::-1], r))


# -- constructors ---------------------------------------------------------

def zero() -> AnalyticSeries:
    return AnalyticSeries([0j])


def constant(c: complex) -> AnalyticSeries:
    return AnalyticSeries([complex(c)])


def identity() -> AnalyticSeries:
    return AnalyticSeries([0j, 1 + 0j])


def monomial(n: int, c: complex = 1.0) -> AnalyticSeries:
    out = np.zeros(n + 1, dtype=np.complex128)
    out[n] = c
    return AnalyticSeries(out)


def koebe(degree: int = DEFAULT_TRUNCATION, rotation: complex = 1.0) -> AnalyticSeries:
    """Truncated ``z / (1 - x z)**2`` with coefficients ``n x**(n-1)``."""
    n = np.arange(degree + 1)
    out = n * np.power(complex(rotation), np.maximum(n - 1, 0))
    out[0] = 0
    return AnalyticSeries(out)


def geometric(degree: int = DEFAULT_TRUNCATION, ratio: complex = 1.0) -> AnalyticSeries:
    """Truncated ``1 / (1 - w z)``."""
    return AnalyticSeries(np.power(complex(ratio), np.arange(degree + 1)))


def exp_series(s: AnalyticSeries, degree: int | None = None) -> AnalyticSeries:
    """Truncated ``exp(s(z))`` via the recurrence ``n g_n = sum m s_m g_{n-m}``."""
    if degree is None:
        degree = s.truncation_degree
    e = s.padded(degree).coeffs
    g = np.zeros(degree + 1, dtype=np.complex128)
    g[0] = np.exp(e[0])
    m = np.arange(1, degree + 1)
    me = m * e[1:]
    for n in range(1, degree + 1):
        g[n] = np.dot(me[:n], g[n - 1 :: -1][:n]) / n
    return AnalyticSeries(g)


def series_to_json(s: AnalyticSeries) -> str:
    return json.dumps(s.to_json_obj())


def series_from_json(text: str) -> AnalyticSeries:
    return AnalyticSeries.from_json_obj(json.loads(text))
