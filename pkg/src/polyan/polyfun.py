"""Poly-analytic functions ``F(z) = sum_k conj(z)**k A_k(z)`` and their calculus."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np

from . import series as ser
from .reports import DomainError
from .series import AnalyticSeries


@dataclass(frozen=True, eq=False)
class PolyFunction:
    """Order-``alpha`` poly-analytic function stored as its analytic components.

    ``components[k]`` multiplies ``conj(z)**k``. Order 1 is the analytic case;
    order 2 is the bi-analytic ``conj(z) A + B`` with ``components = (B, A)``.
    """

    components: tuple[AnalyticSeries, ...]

    def __post_init__(self) -> None:
        comps = tuple(
            c if isinstance(c, AnalyticSeries) else AnalyticSeries(c) for c in self.components
        )
        if not comps:
            raise DomainError("a poly-analytic function needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def order(self) -> int:
        return len(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyFunction):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __call__(self, z):
        return eval_poly(self, z)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def to_json_obj(self) -> dict[str, Any]:
        return {"order": self.order, "components": [c.to_json_obj() for c in self.components]}

    @classmethod
    def from_json_obj(cls, obj: dict[str, Any]) -> "PolyFunction":
        try:
            comps = [AnalyticSeries.from_json_obj(c) for c in obj["components"]]
            order = int(obj.get("order", len(comps)))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed poly-analytic JSON: {exc}") from exc
        if order != len(comps):
            raise DomainError(f"order {order} does not match {len(comps)} components")
        return cls(tuple(comps))


def from_components(*components: Iterable[complex] | AnalyticSeries) -> PolyFunction:
    return PolyFunction(tuple(components))


def analytic(a: AnalyticSeries) -> PolyFunction:
    return PolyFunction((a,))


def bianalytic(a: AnalyticSeries, b: AnalyticSeries) -> PolyFunction:
    """``conj(z) * a(z) + b(z)``."""
    return PolyFunction((b, a))


def zero_function() -> PolyFunction:
    return PolyFunction((ser.zero(),))


def eval_poly(F: PolyFunction, z):
    """Evaluate ``sum_k conj(z)**k A_k(z)`` at a scalar or array ``z``."""
    zz = np.asarray(z, dtype=np.complex128)
    zbar = np.conj(zz)
    acc = np.zeros_like(zz)
    # Horner in conj(z) over the components.
    for comp in reversed(F.components):
        acc = acc * zbar + ser.eval_series(comp, zz)
    if np.ndim(acc) == 0:
        return complex(acc)
    return acc


def d_z(F: PolyFunction) -> PolyFunction:
    """Wirtinger derivative in z: each A_k is replaced by A_k'."""
    return PolyFunction(tuple(ser.derivative(c) for c in F.components))


def d_zbar(F: PolyFunction) -> PolyFunction:
    """Wirtinger derivative in conj(z); the order drops by one.

    For an analytic input the result is the order-1 zero function.
    """
    if F.order == 1:
        return zero_function()
    return PolyFunction(tuple(F.components[k].scale(k) for k in range(1, F.order)))


def jacobian(F: PolyFunction, z):
    """``|F_z|**2 - |F_zbar|**2`` at ``z``."""
    fz = np.asarray(eval_poly(d_z(F), z))
    fzb = np.asarray(eval_poly(d_zbar(F), z))
    out = np.abs(fz) ** 2 - np.abs(fzb) ** 2
    if np.ndim(out) == 0:
        return float(out)
    return out


def majorant_poly(F: PolyFunction, r: float) -> float:
    """``sum_k r**k M(A_k, r)``, the generalised majorant ``sum |a_{n,k}| r**(n+k)``."""
    r = float(r)
    if not (0.0 <= r < 1.0):
        raise DomainError(f"majorant radius must satisfy 0 <= r < 1, got {r}")
    total = 0.0
    for k, comp in enumerate(F.components):
        total += r**k * ser.majorant(comp, r)
    return total


def wirtinger_fd(F: PolyFunction, z: complex, h: float = 1e-5) -> tuple[complex, complex]:
    """Central-difference estimates of ``(F_z, F_zbar)`` at ``z``."""
    fx = (eval_poly(F, z + h) - eval_poly(F, z - h)) / (2 * h)
    fy = (eval_poly(F, z + 1j * h) - eval_poly(F, z - 1j * h)) / (2 * h)
    return (fx - 1j * fy) / 2, (fx + 1j * fy) / 2


def poly_to_json(F: PolyFunction) -> str:
    return json.dumps(F.to_json_obj())


def poly_from_json(text: str) -> PolyFunction:
    return PolyFunction.from_json_obj(json.loads(text))
