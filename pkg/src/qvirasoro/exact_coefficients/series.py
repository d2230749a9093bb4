"""Truncated power series in a formal ratio variable.

A series remembers which ratio it is expanded in ("x", "w/z" or "z/w");
products of two-variable operators only accept the orientation that makes
the coefficient sums finite.
"""

from ..errors import DegenerateBase, NonzeroConstantTerm, RatioOrientationMismatch

RATIOS = ("x", "w/z", "z/w")


class TruncatedSeries:
    """Coefficients c_0..c_N of sum c_k r^k, known exactly through order N."""

    __slots__ = ("coeffs", "ratio")

    def __init__(self, coeffs, ratio="x"):
        if ratio not in RATIOS:
            raise ValueError(f"unknown ratio {ratio!r}")
        self.coeffs = tuple(coeffs)
        self.ratio = ratio

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def with_ratio(self, ratio):
        return TruncatedSeries(self.coeffs, ratio)

    def truncate(self, n):
        return TruncatedSeries(self.coeffs[: n + 1], self.ratio)

    def _check(self, other):
        if other.ratio != self.ratio and "x" not in (self.ratio, other.ratio):
            raise RatioOrientationMismatch(f"{self.ratio} vs {other.ratio}")
        return self.ratio if self.ratio != "x" else other.ratio

    def __add__(self, other):
        ratio = self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], ratio)

    def __sub__(self, other):
        ratio = self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], ratio)

    def scale(self, c):
        return TruncatedSeries([c * a for a in self.coeffs], self.ratio)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        return series_mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.ratio == other.ratio
                and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, ratio={self.ratio!r})"


def series_mul(a, b):
    ratio = a._check(b)
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = a.coeffs[0] * b.coeffs[k]
        for i in range(1, k + 1):
            acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return TruncatedSeries(out, ratio)


def series_scalar_combine(pairs):
    """sum c_i * S_i for (c_i, S_i) pairs."""
    pairs = list(pairs)
    c0, s0 = pairs[0]
    total = s0.scale(c0)
    for c, s in pairs[1:]:
        total = total + s.scale(c)
    return total


def series_exp(s, one):
    """exp of a series with zero constant term; `one` fixes the domain."""
    if not _is_zero(s.coeffs[0]):
        raise NonzeroConstantTerm("exp needs a zero constant term")
    n = s.order
    e = [one]
    for m in range(1, n + 1):
        acc = s.coeffs[1] * e[m - 1]
        for k in range(2, m + 1):
            acc = acc + k * s.coeffs[k] * e[m - k]
        e.append(acc / m)
    return TruncatedSeries(e, s.ratio)


def series_log(s):
    """log of a series with constant term 1."""
    c0 = s.coeffs[0]
    if not _is_zero(c0 - 1):
        raise NonzeroConstantTerm("log needs constant term 1")
    n = s.order
    out = [c0 * 0]
    # m L_m = m s_m - sum_{k=1}^{m-1} k L_k s_{m-k}
    for m in range(1, n + 1):
        acc = m * s.coeffs[m]
        for k in range(1, m):
            acc = acc - k * out[k] * s.coeffs[m - k]
        out.append(acc / m)
    return TruncatedSeries(out, s.ratio)


def series_inverse(s):
    c0 = s.coeffs[0]
    inv0 = 1 / c0
    out = [inv0]
    for m in range(1, s.order + 1):
        acc = s.coeffs[1] * out[m - 1]
        for k in range(2, m + 1):
            acc = acc + s.coeffs[k] * out[m - k]
        out.append(-acc * inv0)
    return TruncatedSeries(out, s.ratio)


def pochhammer_log_series(a, p, n, params):
    """log (a x; p)_inf = -sum_m a^m x^m / (m (1 - p^m)) through x^n.

    a and p are Monomials; a may be None for the trivial product.
    """
    zero = params.zero
    if a is None or a.is_zero():
        return TruncatedSeries([zero] * (n + 1))
    out = [zero]
    for m in range(1, n + 1):
        pm = p ** m
        if pm.is_one():
            raise DegenerateBase(f"base {p} is a root of unity of order dividing {m}")
        out.append(-params.mono(a ** m) / (m * (1 - params.mono(pm))))
    return TruncatedSeries(out)


def series_from_rational(num, den, n, ratio="x"):
    """Power series of num(x)/den(x) for coefficient lists num, den."""
    if _is_zero(den[0]):
        raise ZeroDivisionError("rational kernel has a pole at the origin")
    num = list(num) + [den[0] * 0] * (n + 1)
    inv0 = 1 / den[0]
    out = []
    for k in range(n + 1):
        acc = num[k]
        for i in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[i] * out[k - i]
        out.append(acc * inv0)
    return TruncatedSeries(out, ratio)


def _is_zero(x):
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0
