"""Monomials c * i^k * s^a * t^b * u^c with rational c and k in {0, 1}.

These describe every structural constant of the free field currents
(prefactors, bases, zero-mode roots), independently of the coefficient
domain they are later evaluated in.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ..errors import NoCanonicalRoot


@dataclass(frozen=True, order=True)
class Monomial:
    coeff: Fraction = Fraction(1)
    iota: int = 0
    es: int = 0
    et: int = 0
    eu: int = 0

    def __post_init__(self):
        c = Fraction(self.coeff)
        k = self.iota % 4
        if k >= 2:
            c = -c
            k -= 2
        object.__setattr__(self, "coeff", c)
        object.__setattr__(self, "iota", k)

    @property
    def exponents(self):
        return (self.es, self.et, self.eu)

    def is_zero(self):
        return self.coeff == 0

    def is_one(self):
        return self == ONE

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(other)
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.coeff * other.coeff, self.iota + other.iota,
                        self.es + other.es, self.et + other.et, self.eu + other.eu)

    __rmul__ = __mul__

    def __neg__(self):
        return Monomial(-self.coeff, self.iota, self.es, self.et, self.eu)

    def inverse(self):
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero monomial")
        # 1/i = -i
        c = 1 / self.coeff
        if self.iota:
            c = -c
        return Monomial(c, self.iota, -self.es, -self.et, -self.eu)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(other)
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return Monomial(self.coeff ** n, self.iota * n,
                        self.es * n, self.et * n, self.eu * n)

    def sqrt(self):
        """Canonical square root: (-m)^(1/2) = i*m^(1/2), even exponents halved."""
        if self.iota or self.es % 2 or self.et % 2 or self.eu % 2:
            raise NoCanonicalRoot(f"no canonical root of {self}")
        c = abs(self.coeff)
        rn, rd = isqrt(c.numerator), isqrt(c.denominator)
        if rn * rn != c.numerator or rd * rd != c.denominator:
            raise NoCanonicalRoot(f"no canonical root of {self}")
        return Monomial(Fraction(rn, rd), 1 if self.coeff < 0 else 0,
                        self.es // 2, self.et // 2, self.eu // 2)

    def is_root_of_unity_power(self, m):
        """True when self**m == 1 identically."""
        return (self ** m) == ONE

    def __str__(self):
        parts = []
        if self.coeff != 1 or not (self.iota or self.es or self.et or self.eu):
            parts.append(str(self.coeff))
        if self.iota:
            parts.append("I")
        for name, e in (("s", self.es), ("t", self.et), ("u", self.eu)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


def mono(coeff=1, iota=0, s=0, t=0, u=0):
    return Monomial(Fraction(coeff), iota, s, t, u)


ONE = Monomial()
IOTA = mono(iota=1)
S = mono(s=1)
T = mono(t=1)
U = mono(u=1)


def q_power(half_exponent):
    """q^(n/2) = s^n."""
    return mono(s=half_exponent)
