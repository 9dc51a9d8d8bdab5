"""Harness configuration: defaults, ``key = value`` config files, env overrides.

Config file schema (one ``key = value`` per line, ``#`` starts a comment,
an optional ``[polyan]`` section header is ignored, strings may be quoted)::

    seed              = 0          # int; default for every command
    tolerance         = 1e-9       # float; slack on checked inequalities
    truncation        = 64         # int; series degree for generated functions
    M                 = 2.0        # float; sup bound for the landau class
    circle_panels     = 128        # int >= 64
    radial_panels     = 32         # int >= 16
    refinement_levels = 6          # int >= 1
    quad_tolerance    = 1e-12      # float; relative quadrature stopping rule
    injectivity_grid  = 32         # int >= 8
    linkage_grid      = 64         # int >= 32
    rng               = "numpy.random.PCG64"

Precedence: command-line flags > config file > ``POLYAN_SEED`` (seed only) > defaults.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Any

from ..geometry import QuadratureConfig
from ..reports import DomainError
from .generators import RNG_ALGORITHM

SEED_ENV = "POLYAN_SEED"


@dataclass(frozen=True)
class HarnessConfig:
    seed: int = 0
    tolerance: float = 1e-9
    truncation: int = 64
    M: float = 2.0
    circle_panels: int = 128
    radial_panels: int = 32
    refinement_levels: int = 6
    quad_tolerance: float = 1e-12
    injectivity_grid: int = 32
    linkage_grid: int = 64
    rng: str = RNG_ALGORITHM

    def __post_init__(self) -> None:
        if self.rng != RNG_ALGORITHM:
            raise DomainError(f"only {RNG_ALGORITHM} is supported, got {self.rng!r}")
        if self.truncation < 1:
            raise DomainError("truncation must be >= 1")
        self.quadrature()  # validates the quadrature fields

    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(self.circle_panels, self.radial_panels,
                                self.refinement_levels, self.quad_tolerance)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def updated(self, **overrides: Any) -> "HarnessConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


_TYPES = {f.name: f.type for f in fields(HarnessConfig)}
_CASTS = {"int": int, "float": float, "str": str}


def parse_config_text(text: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or (line.startswith("[") and line.endswith("]")):
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _TYPES:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
        value = value.strip("'\"")
        try:
            out[key] = _CASTS[_TYPES[key]](value)
        except ValueError as exc:
            raise DomainError(f"config line {lineno}: bad value for {key}: {value!r}") from exc
    return out


def load_config(path: str | Path | None = None, env: dict[str, str] | None = None,
                **overrides: Any) -> HarnessConfig:
    env = os.environ if env is None else env
    values: dict[str, Any] = {}
    if env.get(SEED_ENV):
        try:
            values["seed"] = int(env[SEED_ENV])
        except ValueError as exc:
            raise DomainError(f"{SEED_ENV} must be an integer, got {env[SEED_ENV]!r}") from exc
    if path is not None:
        values.update(parse_config_text(Path(path).read_text()))
    values.update({k: v for k, v in overrides.items() if v is not None})
    return HarnessConfig(**values)
