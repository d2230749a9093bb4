"""Exact elements of Q(i)(s, t, u).

An element is kept as (P + i*Q) / D with P, Q, D integer polynomials in
s, t, u.  The denominator is real, gcd(P, Q, D) = 1 and the lex-leading
coefficient of D is positive, which makes the representation unique, so
equality is structural.  Laurent monomials simply live in D.
"""

from fractions import Fraction

import flint
from gmpy2 import mpq

from ..errors import DivisionByZero, PoleAtSample
from .gaussian import GaussianRational
from .monomial import Monomial

VARIABLES = ("s", "t", "u")
CTX = flint.fmpz_mpoly_ctx.get(VARIABLES, "lex")
_P0 = CTX.constant(0)
_P1 = CTX.constant(1)
_MPQ = type(mpq(0))


def _poly_from_monomial(coeff, exps):
    return CTX.from_dict({exps: coeff})


class FieldElem:
    __slots__ = ("p", "q", "d")

    def __init__(self, value=0):
        other = _coerce(value)
        if other is None:
            raise TypeError(f"cannot build FieldElem from {value!r}")
        self.p, self.q, self.d = other.p, other.q, other.d

    @classmethod
    def _raw(cls, p, q, d):
        obj = object.__new__(cls)
        obj.p = p
        obj.q = q
        obj.d = d
        return obj

    @classmethod
    def _reduced(cls, p, q, d):
        if d.is_zero():
            raise DivisionByZero("zero denominator")
        if p.is_zero() and q.is_zero():
            return cls._raw(_P0, _P0, _P1)
        if not d.is_one():
            g = p.gcd(q).gcd(d)
            if not g.is_one():
                p = p / g
                q = q / g
                d = d / g
            if d.leading_coefficient() < 0:
                p, q, d = -p, -q, -d
        return cls._raw(p, q, d)

    @classmethod
    def zero(cls):
        return cls._raw(_P0, _P0, _P1)

    @classmethod
    def one(cls):
        return cls._raw(_P1, _P0, _P1)

    @classmethod
    def i(cls):
        return cls._raw(_P0, _P1, _P1)

    @classmethod
    def gen(cls, name):
        exps = tuple(1 if v == name else 0 for v in VARIABLES)
        if sum(exps) != 1:
            raise ValueError(f"unknown variable {name!r}")
        return cls._raw(_poly_from_monomial(1, exps), _P0, _P1)

    @classmethod
    def from_monomial(cls, m):
        c = m.coeff
        num = [0, 0, 0]
        den = [0, 0, 0]
        for i, e in enumerate(m.exponents):
            if e >= 0:
                num[i] = e
            else:
                den[i] = -e
        top = _poly_from_monomial(c.numerator, tuple(num))
        bottom = _poly_from_monomial(c.denominator, tuple(den))
        if m.iota:
            return cls._raw(_P0, top, bottom)
        return cls._raw(top, _P0, bottom)

    @classmethod
    def from_polys(cls, p, q=None, d=None):
        return cls._reduced(p, _P0 if q is None else q, _P1 if d is None else d)

    def is_zero(self):
        return self.p.is_zero() and self.q.is_zero()

    def is_one(self):
        return self.p.is_one() and self.q.is_zero() and self.d.is_one()

    def is_real(self):
        return self.q.is_zero()

    # arithmetic

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return FieldElem._reduced(self.p + o.p, self.q + o.q, self.d)
        g = self.d.gcd(o.d)
        a = self.d / g
        b = o.d / g
        return FieldElem._reduced(self.p * b + o.p * a, self.q * b + o.q * a, a * o.d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(-self.p, -self.q, self.d)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        p1, q1, p2, q2 = self.p, self.q, o.p, o.q
        if q1.is_zero():
            if q2.is_zero():
                return FieldElem._reduced(p1 * p2, _P0, self.d * o.d)
            return FieldElem._reduced(p1 * p2, p1 * q2, self.d * o.d)
        if q2.is_zero():
            return FieldElem._reduced(p1 * p2, q1 * p2, self.d * o.d)
        return FieldElem._reduced(p1 * p2 - q1 * q2, p1 * q2 + q1 * p2, self.d * o.d)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if self.q.is_zero():
            return FieldElem._reduced(self.d, _P0, self.p)
        norm = self.p * self.p + self.q * self.q
        return FieldElem._reduced(self.d * self.p, -(self.d * self.q), norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.q.is_zero():
            return FieldElem._raw(self.p ** n, _P0, self.d ** n)
        result = FieldElem.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q and self.d == o.d

    def __hash__(self):
        return hash(str(self))

    # inspection

    def numerator(self):
        from .laurent import LaurentPoly
        return LaurentPoly.from_polys(self.p, self.q)

    def denominator(self):
        from .laurent import LaurentPoly
        return LaurentPoly.from_polys(self.d, _P0)

    def evaluate(self, assignment):
        """Evaluate at s, t, u -> GaussianRational values."""
        vals = [_as_gaussian(assignment[v]) for v in VARIABLES]
        den = _eval_poly(self.d, vals)
        if den.is_zero():
            raise PoleAtSample(f"denominator vanishes at {assignment}")
        num = _eval_poly(self.p, vals)
        if not self.q.is_zero():
            num = num + GaussianRational.i() * _eval_poly(self.q, vals)
        return num / den

    def __str__(self):
        if self.q.is_zero():
            num = str(self.p)
        elif self.p.is_zero():
            num = f"I*({self.q})"
        else:
            num = f"{self.p} + I*({self.q})"
        if self.d.is_one():
            return num
        return f"({num})/({self.d})"

    def __repr__(self):
        return f"FieldElem({self})"


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def _eval_poly(poly, vals):
    total = GaussianRational.zero()
    powers = [{} for _ in vals]
    for exps, c in poly.terms():
        term = GaussianRational(int(c))
        for i, e in enumerate(exps):
            e = int(e)
            if e:
                cache = powers[i]
                if e not in cache:
                    cache[e] = vals[i] ** e
                term = term * cache[e]
        total = total + term
    return total


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, int):
        return FieldElem._raw(CTX.constant(x), _P0, _P1)
    if isinstance(x, (Fraction, _MPQ)):
        x = Fraction(int(x.numerator), int(x.denominator))
        return FieldElem._raw(CTX.constant(x.numerator), _P0, CTX.constant(x.denominator))
    if isinstance(x, GaussianRational):
        re = Fraction(int(x.re.numerator), int(x.re.denominator))
        im = Fraction(int(x.im.numerator), int(x.im.denominator))
        den = re.denominator * im.denominator
        return FieldElem._reduced(CTX.constant(re.numerator * im.denominator),
                                  CTX.constant(im.numerator * re.denominator),
                                  CTX.constant(den))
    if isinstance(x, Monomial):
        return FieldElem.from_monomial(x)
    return None


def reduce_fraction(num, den):
    """Canonical form of num/den for FieldElem-coercible inputs."""
    return FieldElem(num) / FieldElem(den)
