"""Numerical toolkit for poly-analytic functions ``F = sum_k conj(z)**k A_k(z)``."""

from .reports import BoundReport, DomainError, GenerationError, QuadratureError, RadiusResult
from .series import AnalyticSeries
from .polyfun import PolyFunction

__version__ = "0.1.0"

__all__ = [
    "AnalyticSeries", "BoundReport", "DomainError", "GenerationError", "PolyFunction",
    "QuadratureError", "RadiusResult", "__version__",
]
