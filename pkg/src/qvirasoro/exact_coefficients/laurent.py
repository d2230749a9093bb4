"""Sparse Laurent polynomials in s, t, u with Gaussian rational coefficients."""

from .gaussian import GaussianRational


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            c = c if isinstance(c, GaussianRational) else GaussianRational(c)
            if not c.is_zero():
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def from_polys(cls, p, q):
        terms = {}
        for exps, c in p.terms():
            terms[tuple(map(int, exps))] = GaussianRational(int(c))
        for exps, c in q.terms():
            exps = tuple(map(int, exps))
            terms[exps] = terms.get(exps, GaussianRational.zero()) + GaussianRational(0, int(c))
        return cls(terms)

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, GaussianRational.zero()) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, GaussianRational.zero()) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def to_field(self):
        from .field import FieldElem
        from .monomial import Monomial
        total = FieldElem.zero()
        for (a, b, c), coeff in self.terms.items():
            total = total + FieldElem(coeff) * FieldElem.from_monomial(Monomial(1, 0, a, b, c))
        return total

    def evaluate(self, assignment):
        vals = [assignment[v] for v in ("s", "t", "u")]
        total = GaussianRational.zero()
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                term = term * (GaussianRational(v) if not isinstance(v, GaussianRational) else v) ** e
            total = total + term
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            mon = "*".join(f"{n}^{e}" for n, e in zip("stu", exps) if e)
            parts.append(f"({self.terms[exps]})" + (f"*{mon}" if mon else ""))
        return " + ".join(parts)
