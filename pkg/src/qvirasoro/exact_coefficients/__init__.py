"""Exact coefficient arithmetic: Gaussian rationals, monomials, rational
functions in s = q^(1/2), t = q1^(1/2), u, and truncated ratio series."""

from .field import CTX, VARIABLES, FieldElem, reduce_fraction
from .gaussian import GaussianRational
from .laurent import LaurentPoly
from .monomial import IOTA, ONE, S, T, U, Monomial, mono, q_power
from .series import (
    TruncatedSeries,
    pochhammer_log_series,
    series_exp,
    series_from_rational,
    series_inverse,
    series_log,
    series_mul,
    series_scalar_combine,
)


def evaluate(value, assignment):
    """Evaluate a FieldElem (or pass through a GaussianRational) at a sample."""
    if isinstance(value, FieldElem):
        return value.evaluate(assignment)
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value)


__all__ = [
    "CTX", "VARIABLES", "FieldElem", "GaussianRational", "LaurentPoly", "Monomial",
    "IOTA", "ONE", "S", "T", "U", "mono", "q_power", "reduce_fraction", "evaluate",
    "TruncatedSeries", "pochhammer_log_series", "series_exp", "series_from_rational",
    "series_inverse", "series_log", "series_mul", "series_scalar_combine",
]
