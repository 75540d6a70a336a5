"""Recurrence coefficients of the semi-classical Krawtchouk weight.

The heavy lifting happens in the _gkraw extension; exact rationals cross the
boundary as "p/q" strings so nothing is lost. ``fraction`` converts them to
``fractions.Fraction`` for plotting or further python-side arithmetic.
"""

from fractions import Fraction

from ._gkraw import (
    DomainError,
    ModeMismatchError,
    SingularTrajectoryError,
    certify,
    compatibility_residuals,
    compute,
    hankel_b0,
    initial_xy,
    krawtchouk,
    kummer_m,
    laguerre,
    limit_deviation,
    moment,
    p5_params,
    toda_residual,
    weight_at,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "ModeMismatchError",
    "SingularTrajectoryError",
    "certify",
    "compatibility_residuals",
    "compute",
    "fraction",
    "hankel_b0",
    "initial_xy",
    "krawtchouk",
    "kummer_m",
    "laguerre",
    "limit_deviation",
    "moment",
    "p5_params",
    "toda_residual",
    "weight_at",
]


def fraction(text):
    """Exact rational string ("p/q" or "p") to fractions.Fraction."""
    return Fraction(text)
