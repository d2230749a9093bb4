"""Coefficient domains: exact symbolic parameters or a random rational sample."""

import random
from fractions import Fraction

from .exact_coefficients import FieldElem, GaussianRational, Monomial

MODES = ("symbolic", "sampled")


class Params:
    """Values of s = q^(1/2), t = q1^(1/2), u and i in one coefficient domain.

    In symbolic mode they are the generators of Q(i)(s, t, u); in sampled
    mode they are random rationals drawn from `seed`, and every algorithm
    runs unchanged over Gaussian rationals.
    """

    def __init__(self, mode="symbolic", seed=0):
        if mode not in MODES:
            raise ValueError(f"unknown parameter mode {mode!r}")
        self.mode = mode
        self.seed = seed
        self._mono = {}
        self._qint = {}
        if mode == "symbolic":
            self.domain = FieldElem
            self.s = FieldElem.gen("s")
            self.t = FieldElem.gen("t")
            self.u = FieldElem.gen("u")
            self.iota = FieldElem.i()
            self.sample = None
        else:
            self.domain = GaussianRational
            self.sample = draw_sample(seed)
            self.s = self.sample["s"]
            self.t = self.sample["t"]
            self.u = self.sample["u"]
            self.iota = GaussianRational.i()
        self.one = self.domain.one()
        self.zero = self.domain.zero()
        self.q = self.s * self.s

    def describe(self):
        if self.mode == "symbolic":
            return {"mode": "symbolic"}
        return {"mode": "sampled", "seed": self.seed,
                "s": str(self.s), "t": str(self.t), "u": str(self.u)}

    def mono(self, m):
        """Value of a Monomial in this domain."""
        v = self._mono.get(m)
        if v is None:
            if self.mode == "symbolic":
                v = FieldElem.from_monomial(m)
            else:
                v = GaussianRational(m.coeff)
                if m.iota:
                    v = v * self.iota
                for base, e in ((self.s, m.es), (self.t, m.et), (self.u, m.eu)):
                    if e:
                        v = v * base ** e
            self._mono[m] = v
        return v

    def qpow(self, half):
        """q^(half/2) = s^half."""
        return self.mono(Monomial(1, 0, half))

    def qint(self, n):
        """[n] = (q^n - q^-n) / (q - q^-1)."""
        v = self._qint.get(n)
        if v is None:
            v = (self.qpow(2 * n) - self.qpow(-2 * n)) / (self.q - 1 / self.q)
            self._qint[n] = v
        return v

    def lift(self, value):
        """Map a value from the symbolic domain into this one."""
        if self.mode == "symbolic" or isinstance(value, GaussianRational):
            return value
        return value.evaluate(self.sample)


def draw_sample(seed, lo=2, hi=41):
    """Random rationals for s, t, u, avoiding +-1 and coincidences."""
    rng = random.Random(seed)
    seen = set()
    out = {}
    for name in ("s", "t", "u"):
        while True:
            v = Fraction(rng.randint(lo, hi), rng.randint(lo, hi))
            if v != 1 and v not in seen and 1 / v not in seen:
                break
        seen.add(v)
        out[name] = GaussianRational(v)
    return out
