from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvirasoro.errors import DegenerateBase, RatioOrientationMismatch
from qvirasoro.exact_coefficients import GaussianRational, TruncatedSeries, mono, pochhammer_log_series
from qvirasoro.params import Params
from qvirasoro.structure_functions import (
    DEFAULT_NUMERIC_POINTS,
    build,
    certify_beta_telescoping,
    certify_f_beta_numeric,
    derived_scalar_constants,
    numeric_beta,
    r_matrix,
    r_matrix_inverse,
    verify_f_beta_identity,
)

SYM = Params("symbolic")
SAMPLED = Params("sampled", 11)


def test_low_order_coefficients():
    q = SYM.q
    beta = build("beta", 3, SYM).series
    assert beta.coeffs[0] == 1
    # log (q x; q^4) - log (q^3 x; q^4) at order 1
    assert beta.coeffs[1] == -q / (1 + q * q)
    # (q^2 x; q^4) / (x; q^4)
    alpha = build("alpha_psi", 2, SYM).series
    assert alpha.coeffs[1] == 1 / (1 + q * q)


def test_alpha_phi_first_coefficient():
    q = SYM.q
    a = build("alpha_phi", 2, SYM).series
    # (q^4 x; q^4) / (q^2 x; q^4): -q^4/(1-q^4) + q^2/(1-q^4)
    assert a.coeffs[1] == (q * q - q ** 4) / (1 - q ** 4)


def test_f_via_beta_symbolic():
    report = verify_f_beta_identity(6, SYM)
    assert report.status == "pass"


def test_folded_prefactor():
    c = derived_scalar_constants(SYM)
    assert c["folded_prefactor_raw"] == c["folded_prefactor"]
    assert c["twisted_folded_prefactor"] == SYM.iota * SYM.s ** 3 * SYM.t


def test_numeric_certificates():
    for r in certify_beta_telescoping(DEFAULT_NUMERIC_POINTS):
        assert r < mpmath.mpf("1e-30")
    for r in certify_f_beta_numeric((("0.3", "0.7", "0.2"), ("0.45", "1.5", "0.1"),
                                     ("-0.2", "0.55", "0.3"))):
        assert r < mpmath.mpf("1e-30")


def test_numeric_beta_matches_series():
    """The exact series summed at a point inside the disc agrees with mpmath."""
    q, x = mpmath.mpf("0.4"), mpmath.mpf("0.25")
    s = mpmath.sqrt(q)
    approx = mpmath.mpf(0)
    for k, c in enumerate(build("beta", 30, SYM).series.coeffs):
        approx += _real(c, s) * x ** k
    assert abs(numeric_beta(x, q) - approx) < mpmath.mpf("1e-15")


def _real(c, s):
    num = _poly_value(c.p, s)
    den = _poly_value(c.d, s)
    return num / den


def _poly_value(poly, s):
    total = mpmath.mpf(0)
    for exps, coeff in poly.terms():
        total += int(coeff) * s ** int(exps[0])
    return total


def test_degenerate_base():
    with pytest.raises(DegenerateBase):
        pochhammer_log_series(mono(s=1), mono(iota=1), 4, SYM)


def test_orientation_mismatch():
    a = TruncatedSeries([SYM.one, SYM.one], "z/w")
    b = TruncatedSeries([SYM.one, SYM.one], "w/z")
    with pytest.raises(RatioOrientationMismatch):
        a * b


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=Fraction(-5), max_value=5, max_denominator=9))
def test_r_matrix_times_inverse(x):
    """R(x) R^-1(x) = 1 on the four-dimensional tensor square."""
    p = SAMPLED
    xv = GaussianRational(x)
    r, ri = r_matrix(p), r_matrix_inverse(p)
    labels = [("+", "+"), ("+", "-"), ("-", "+"), ("-", "-")]
    try:
        rv = {k: v.value(xv) for k, v in r.items()}
        iv = {k: v.value(xv) for k, v in ri.items()}
    except ZeroDivisionError:
        return
    for a in labels:
        for c in labels:
            total = p.zero
            for b in labels:
                if (a, b) in rv and (b, c) in iv:
                    total = total + rv[(a, b)] * iv[(b, c)]
            assert total == (p.one if a == c else p.zero)
