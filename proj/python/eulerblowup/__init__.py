"""Localized-moment blowup certificates for compressible Euler flows."""

from ._core import (
    ExactSolution,
    __version__,
    blowup_time,
    constants,
    moments,
    phantom_check,
    theorem3,
)

__all__ = [
    "ExactSolution",
    "__version__",
    "blowup_time",
    "constants",
    "moments",
    "phantom_check",
    "theorem3",
]
