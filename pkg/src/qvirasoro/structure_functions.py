"""Scalar structure series alpha_phi, alpha_psi, beta, f, the R-matrix
kernels, and the scalar identities used when assembling T(z).

Variables: q = s^2, q1 = t^2, q2 = s^-4 t^-2, q3 = s^4 (q1 q2 q3 = 1).
"""

from dataclasses import dataclass

import mpmath

from .exact_coefficients import (
    ONE,
    TruncatedSeries,
    mono,
    pochhammer_log_series,
    series_exp,
    series_from_rational,
    series_mul,
)
from .report import CheckReport

NAMES = ("alpha_phi", "alpha_psi", "beta", "f")

Q = mono(s=2)
Q1 = mono(t=2)
Q2 = mono(s=-4, t=-2)
Q3 = mono(s=4)


@dataclass
class StructureSeries:
    name: str
    series: TruncatedSeries

    @property
    def ratio(self):
        return self.series.ratio

    def coefficient(self, k):
        return self.series.coeffs[k]


def _ratio_of_pochhammers(num_base, den_base, p, n, params):
    """(num_base x; p)_inf / (den_base x; p)_inf through x^n."""
    log = pochhammer_log_series(num_base, p, n, params) - pochhammer_log_series(den_base, p, n, params)
    return series_exp(log, params.one)


def build(name, n, params):
    """Exact series of a structure function through x^n."""
    p = mono(s=8)  # q^4
    if name == "alpha_phi":
        s = _ratio_of_pochhammers(mono(s=8), mono(s=4), p, n, params)
    elif name == "alpha_psi":
        s = _ratio_of_pochhammers(mono(s=4), ONE, p, n, params)
    elif name == "beta":
        s = _ratio_of_pochhammers(mono(s=2), mono(s=6), p, n, params)
    elif name == "f":
        s = series_exp(f_log_series(n, params), params.one)
    else:
        raise ValueError(f"unknown structure series {name!r}")
    return StructureSeries(name, s)


def f_log_series(n, params):
    """sum_m (1/m) (1 - q1^m)(1 - q2^m)/(1 + q3^-m) x^m."""
    out = [params.zero]
    for m in range(1, n + 1):
        a = 1 - params.mono(Q1 ** m)
        b = 1 - params.mono(Q2 ** m)
        c = 1 + params.mono(Q3 ** -m)
        out.append(a * b / (c * m))
    return TruncatedSeries(out)


def rescale_series(series, c):
    """S(c x) for a scalar c in the coefficient domain."""
    out = []
    power = c * 0 + 1
    for a in series.coeffs:
        out.append(a * power)
        power = power * c
    return TruncatedSeries(out, series.ratio)


def f_via_beta(n, params):
    """(1/(1-x)) beta(q1 q x) beta(x/(q1 q)) through x^n."""
    beta = build("beta", n, params).series
    c = params.mono(Q1 * Q)
    left = rescale_series(beta, c)
    right = rescale_series(beta, 1 / c)
    geometric = TruncatedSeries([params.one] * (n + 1))
    return series_mul(geometric, series_mul(left, right))


def verify_f_beta_identity(n, params):
    f = build("f", n, params).series
    g = f_via_beta(n, params)
    witness = None
    for k in range(n + 1):
        r = f.coeffs[k] - g.coeffs[k]
        if not r.is_zero():
            witness = {"order": k, "residual": str(r)}
            break
    return CheckReport("series", f"f-via-beta/N={n}", "structure.f-via-beta",
                       {"order": n, **params.describe()},
                       "pass" if witness is None else "fail", witness)


@dataclass
class RationalKernel:
    """num(x)/den(x), with coefficient lists in the parameter domain."""
    name: str
    num: tuple
    den: tuple

    def series(self, n, ratio):
        return series_from_rational(self.num, self.den, n, ratio)

    def value(self, x):
        num = sum((c * x ** k for k, c in enumerate(self.num)), x * 0)
        den = sum((c * x ** k for k, c in enumerate(self.den)), x * 0)
        return num / den


def rational_kernels(params):
    """Kernels appearing in R(x), R^-1(x) and the interchange relations."""
    one, q = params.one, params.q
    q2 = q * q
    zero = params.zero
    return {
        # R^-1 middle block, expanded in x = z/w
        "q(1-x)/(q^2-x)": RationalKernel("q(1-x)/(q^2-x)", (q, -q), (q2, -one)),
        "(q^2-1)/(q^2-x)": RationalKernel("(q^2-1)/(q^2-x)", (q2 - 1,), (q2, -one)),
        "(q^2-1)x/(q^2-x)": RationalKernel("(q^2-1)x/(q^2-x)", (zero, q2 - 1), (q2, -one)),
        # R middle block
        "q(1-x)/(1-q^2x)": RationalKernel("q(1-x)/(1-q^2x)", (q, -q), (one, -q2)),
        "(1-q^2)/(1-q^2x)": RationalKernel("(1-q^2)/(1-q^2x)", (1 - q2,), (one, -q2)),
        "(1-q^2)x/(1-q^2x)": RationalKernel("(1-q^2)x/(1-q^2x)", (zero, 1 - q2), (one, -q2)),
        "1": RationalKernel("1", (one,), (one,)),
    }


def r_matrix(params):
    """R(x) on (v+v+, v+v-, v-v+, v-v-) as a dict of nonzero kernel entries."""
    k = rational_kernels(params)
    return {
        (("+", "+"), ("+", "+")): k["1"],
        (("+", "-"), ("+", "-")): k["q(1-x)/(1-q^2x)"],
        (("+", "-"), ("-", "+")): k["(1-q^2)/(1-q^2x)"],
        (("-", "+"), ("+", "-")): k["(1-q^2)x/(1-q^2x)"],
        (("-", "+"), ("-", "+")): k["q(1-x)/(1-q^2x)"],
        (("-", "-"), ("-", "-")): k["1"],
    }


def r_matrix_inverse(params):
    k = rational_kernels(params)
    return {
        (("+", "+"), ("+", "+")): k["1"],
        (("+", "-"), ("+", "-")): k["q(1-x)/(q^2-x)"],
        (("+", "-"), ("-", "+")): k["(q^2-1)/(q^2-x)"],
        (("-", "+"), ("+", "-")): k["(q^2-1)x/(q^2-x)"],
        (("-", "+"), ("-", "+")): k["q(1-x)/(q^2-x)"],
        (("-", "-"), ("-", "-")): k["1"],
    }


def derived_scalar_constants(params):
    """Closed scalars used by the T(z) assembly.

    beta(q/q1) beta(1/(q q1)) = 1 - q1^-1 telescopes the infinite products,
    so the prefactor q^(3/2)(q1^(1/2) - q1^(-1/2)) / (beta(q/q1) beta(1/(q q1)))
    folds to the rational value s^3 t.
    """
    s, t = params.s, params.t
    telescoped = 1 - 1 / (t * t)
    raw = s ** 3 * (t - 1 / t) / telescoped
    folded = params.mono(mono(s=3, t=1))
    return {
        "beta_product": telescoped,
        "folded_prefactor": folded,
        "folded_prefactor_raw": raw,
        "twisted_folded_prefactor": params.iota * folded,
    }


def qpochhammer(a, p, dps):
    """(a; p)_inf at working precision dps via mpmath."""
    with mpmath.workdps(dps):
        return mpmath.qp(a, p)


def numeric_beta(x, q, dps=60):
    with mpmath.workdps(dps):
        return qpochhammer(q * x, q ** 4, dps) / qpochhammer(q ** 3 * x, q ** 4, dps)


def certify_beta_telescoping(points, dps=60):
    """|beta(q/q1) beta(1/(q q1)) - (1 - 1/q1)| at each (q, q1) sample."""
    out = []
    with mpmath.workdps(dps):
        for q, q1 in points:
            q, q1 = mpmath.mpf(q), mpmath.mpf(q1)
            lhs = numeric_beta(q / q1, q, dps) * numeric_beta(1 / (q * q1), q, dps)
            out.append(abs(lhs - (1 - 1 / q1)))
    return out


def certify_f_beta_numeric(points, order=30, dps=60):
    """Compare f(x) from its exponential with the beta-product form at numeric x."""
    out = []
    with mpmath.workdps(dps):
        for q, q1, x in points:
            q, q1, x = mpmath.mpf(q), mpmath.mpf(q1), mpmath.mpf(x)
            q3 = q * q
            q2 = 1 / (q1 * q3)
            log_f = mpmath.nsum(lambda n: (1 - q1 ** n) * (1 - q2 ** n) / (1 + q3 ** -n) * x ** n / n,
                                [1, mpmath.inf])
            rhs = numeric_beta(q1 * q * x, q, dps) * numeric_beta(x / (q1 * q), q, dps) / (1 - x)
            out.append(abs(mpmath.exp(log_f) - rhs))
    return out


DEFAULT_NUMERIC_POINTS = (
    ("0.3", "0.7"),
    ("0.45", "2.5"),
    ("-0.2", "0.55"),
    ("0.6", "1.9"),
)
