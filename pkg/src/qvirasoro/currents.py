"""Vertex operator currents on the Fock space.

Specs are immutable descriptions; an `Engine` bound to a coefficient
domain evaluates their modes on basis states and caches the results.

Exponents are doubled throughout: mode k2 of a current C(z) is the
coefficient of z^(k2/2), so half-integer powers stay integral.

Exponential currents have the shape

    scalar * z^(z_offset/2) * exp(sum_n A_n a_{-n} z^n) exp(sum_n B_n a_n z^-n)
        * e^(shift*alpha/2) * prod (root^2 z)^((a d + b)/2)

where A_n, B_n are sums of c * g^n / [n] or c * g^n / [2n].  All zero-mode
factors are evaluated on the sector of the source vector and the lattice
shift acts last.
"""

from dataclasses import dataclass, field, fields

from .errors import NotStabilized, RatioOrientationMismatch
from .exact_coefficients import IOTA, ONE, Monomial, mono
from .fock_space import (
    BasisState,
    BlockMatrix,
    FockVector,
    contraction,
    enumerate_block,
    merge,
    partitions,
    pruned,
    removals,
)


class _CachedHash:
    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((type(self).__name__,) + tuple(getattr(self, f.name) for f in fields(self)
                                                     if f.compare))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True, eq=True)
class Term(_CachedHash):
    """c * g^n / [denom * n]."""
    c: Monomial
    g: Monomial
    denom: int = 2


@dataclass(frozen=True, eq=True)
class ZeroMode(_CachedHash):
    """(root^2 z)^((a d + b)/2) when z is set, otherwise root^(a d + b)."""
    root: Monomial
    a: int
    b: int = 0
    z: bool = True


@dataclass(frozen=True, eq=True)
class ExpSpec(_CachedHash):
    name: str = field(compare=False)
    creation: tuple
    annihilation: tuple
    shift: int
    zero_modes: tuple
    scalar: Monomial = ONE
    z_offset: int = 0

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class Mode(_CachedHash):
    """A single mode (coefficient of z^(k2/2)) used as a fixed operator."""
    spec: object
    k2: int

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class QComm(_CachedHash):
    """[C(z), x]_p = C(z) x - p x C(z)."""
    spec: object
    mode: Mode
    p: Monomial

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class Rescaled(_CachedHash):
    """C(root^2 z)."""
    spec: object
    root: Monomial

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class Scaled(_CachedHash):
    """scalar * z^(z_shift/2) * C(z) * source, source a z-free zero mode."""
    spec: object
    scalar: Monomial = ONE
    z_shift: int = 0
    source: ZeroMode = None

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class SumSpec(_CachedHash):
    terms: tuple

    def __hash__(self):
        return _CachedHash.__hash__(self)


for _cls in (Term, ZeroMode):
    _cls.__hash__ = _CachedHash.__hash__


# the concrete currents

Q = mono(s=2)
S = mono(s=1)


def x_plus_spec():
    return ExpSpec("X+", (Term(ONE, S ** -1, 1),), (Term(mono(-1), S ** -1, 1),), 2,
                   (ZeroMode(ONE, 2),))


def x_minus_spec():
    return ExpSpec("X-", (Term(mono(-1), S, 1),), (Term(ONE, S, 1),), -2,
                   (ZeroMode(ONE, -2),))


X_PLUS = x_plus_spec()
X_MINUS = x_minus_spec()


def x_plus(k):
    """x^+_k, the coefficient of z^(-k-1) in X^+(z)."""
    return Mode(X_PLUS, -2 * k - 2)


def x_minus(k):
    return Mode(X_MINUS, -2 * k - 2)


PHI_MINUS = ExpSpec("Phi-", (Term(ONE, mono(s=7)),), (Term(mono(-1), mono(s=-5)),), 1,
                    (ZeroMode(mono(iota=1, s=3), 1),))
PSI_PLUS = ExpSpec("Psi+", (Term(mono(-1), S),), (Term(ONE, mono(s=-3)),), -1,
                   (ZeroMode(mono(iota=1, s=1), -1),))


def rescale_exp(spec, root, name=None):
    """Structural C(root^2 z) for an exponential spec."""
    gamma = root * root
    return ExpSpec(
        name or f"{spec.name}@{root}",
        tuple(Term(t.c, t.g * gamma, t.denom) for t in spec.creation),
        tuple(Term(t.c, t.g / gamma, t.denom) for t in spec.annihilation),
        spec.shift,
        tuple(ZeroMode(zm.root * root, zm.a, zm.b, True) if zm.z else zm
              for zm in spec.zero_modes),
        spec.scalar * root ** spec.z_offset,
        spec.z_offset,
    )


def normal_ordered_product(factors, name="NO", scalar=ONE, z_offset=0):
    """:C_1(g_1 z) ... C_r(g_r z): for (spec, root) pairs with g_i = root_i^2."""
    creation, annihilation, zms = [], [], []
    shift = 0
    sc = scalar
    off = z_offset
    for spec, root in factors:
        r = rescale_exp(spec, root)
        creation.extend(r.creation)
        annihilation.extend(r.annihilation)
        zms.extend(r.zero_modes)
        shift += r.shift
        sc = sc * r.scalar
        off += r.z_offset
    return ExpSpec(name, tuple(creation), tuple(annihilation), shift, tuple(zms), sc, off)


PSI_STAR_MINUS = rescale_exp(PSI_PLUS, mono(s=2), "Psi*-")
PHI_PLUS = QComm(PHI_MINUS, x_minus(0), Q)
PHI_PLUS_ALT = Scaled(QComm(PHI_MINUS, x_minus(1), Q ** -1), Q ** -2, -2)
PSI_MINUS = QComm(PSI_PLUS, x_plus(0), Q)
PSI_MINUS_ALT = Scaled(QComm(PSI_PLUS, x_plus(-1), Q ** -1), Q ** 2, 2)
PSI_STAR_PLUS = Rescaled(PSI_MINUS, mono(s=2))
PSI_STAR_PLUS_ALT = QComm(PSI_STAR_MINUS, x_plus(0), Q)

K_ZERO_MODE = ZeroMode(Q, 1, 0, False)


def phi(eps):
    return PHI_MINUS if eps < 0 else PHI_PLUS


def psi(eps):
    return PSI_PLUS if eps > 0 else PSI_MINUS


def psi_star(eps):
    return PSI_STAR_MINUS if eps < 0 else PSI_STAR_PLUS


def q_power_mono(half):
    return mono(s=half)


# evaluation engine


class Engine:
    """Evaluates modes of current specs over one coefficient domain."""

    def __init__(self, params):
        self.params = params
        self.zero = params.zero
        self.one = params.one
        self._state = {}
        self._coef = {}
        self._create = {}
        self._ann = {}
        self._prod = {}

    # exponential building blocks

    def _family(self, terms, n):
        p = self.params
        total = None
        for t in terms:
            v = p.mono(t.c * t.g ** n) / p.qint(n * t.denom)
            total = v if total is None else total + v
        return total if total is not None else self.zero

    def _coefficients(self, spec, n):
        key = (spec, n)
        r = self._coef.get(key)
        if r is None:
            a = self._family(spec.creation, n)
            b = self._family(spec.annihilation, n) * contraction(n, self.params)
            r = (a, b)
            self._coef[key] = r
        return r

    def creation_poly(self, spec, c):
        """Coefficient of z^c in exp(sum_n A_n x_n z^n) as {partition: coeff}."""
        key = (spec, c)
        r = self._create.get(key)
        if r is None:
            r = {}
            for mu in partitions(c):
                coef = self.one
                run = {}
                for part in mu:
                    run[part] = run.get(part, 0) + 1
                for n, m in run.items():
                    a = self._coefficients(spec, n)[0]
                    coef = coef * a ** m
                    if m > 1:
                        coef = coef / _factorial(m)
                if not coef.is_zero():
                    r[mu] = coef
            self._create[key] = r
        return r

    def annihilation_terms(self, spec, lam):
        """exp(sum_n B_n a_n z^-n) on x^lam as [(e, rest, coeff)]."""
        key = (spec, lam)
        r = self._ann.get(key)
        if r is None:
            r = []
            for weight, rest, binom, picked in removals(lam):
                coef = self.one * binom
                for n, k in picked:
                    coef = coef * self._coefficients(spec, n)[1] ** k
                if not coef.is_zero():
                    r.append((weight, rest, coef))
            self._ann[key] = r
        return r

    def z_exponent(self, spec, j):
        """Doubled z-exponent contributed by the zero modes on sector j."""
        h = spec.z_offset
        for zm in spec.zero_modes:
            if zm.z:
                h += zm.a * j + zm.b
        return h

    def zero_mode_value(self, spec, j):
        m = spec.scalar
        for zm in spec.zero_modes:
            m = m * zm.root ** (zm.a * j + zm.b)
        return self.params.mono(m)

    def _exp_state(self, spec, k2, st):
        lam, j = st
        diff = k2 - self.z_exponent(spec, j)
        if diff % 2:
            return {}
        delta = diff // 2
        if sum(lam) + delta < 0:
            return {}
        j2 = j + spec.shift
        out = {}
        for e, rest, coef in self.annihilation_terms(spec, lam):
            c = e + delta
            if c < 0:
                continue
            for nu, a in self.creation_poly(spec, c).items():
                key = BasisState(merge(rest, nu), j2)
                v = coef * a
                if key in out:
                    out[key] = out[key] + v
                else:
                    out[key] = v
        sigma = self.zero_mode_value(spec, j)
        return {k: sigma * v for k, v in out.items() if not v.is_zero()}

    # generic action

    def act_state(self, spec, k2, st):
        key = (spec, k2, st)
        r = self._state.get(key)
        if r is not None:
            return r
        if isinstance(spec, ExpSpec):
            r = self._exp_state(spec, k2, st)
        elif isinstance(spec, QComm):
            x = spec.mode
            first = self.act_terms(spec.spec, k2, self.act_state(x.spec, x.k2, st))
            second = self.act_terms(x.spec, x.k2, self.act_state(spec.spec, k2, st))
            r = dict(first)
            p = self.params.mono(spec.p)
            for k, v in second.items():
                v = p * v
                r[k] = r[k] - v if k in r else -v
            r = pruned(r)
        elif isinstance(spec, Rescaled):
            inner = self.act_state(spec.spec, k2, st)
            f = self.params.mono(spec.root ** k2)
            r = {k: f * v for k, v in inner.items()}
        elif isinstance(spec, Scaled):
            inner = self.act_state(spec.spec, k2 - spec.z_shift, st)
            m = spec.scalar
            if spec.source is not None:
                zm = spec.source
                m = m * zm.root ** (zm.a * st.sector + zm.b)
            f = self.params.mono(m)
            r = {k: f * v for k, v in inner.items()}
        elif isinstance(spec, SumSpec):
            r = {}
            for t in spec.terms:
                for k, v in self.act_state(t, k2, st).items():
                    r[k] = r[k] + v if k in r else v
            r = pruned(r)
        else:
            raise TypeError(f"unknown spec {spec!r}")
        self._state[key] = r
        return r

    def act_terms(self, spec, k2, terms):
        out = {}
        for st, c in terms.items():
            for k, v in self.act_state(spec, k2, st).items():
                v = c * v
                if k in out:
                    out[k] = out[k] + v
                else:
                    out[k] = v
        return pruned(out)

    def act(self, spec, k2, vec):
        return FockVector(self.act_terms(spec, k2, vec.terms))

    def apply_mode(self, mode, vec):
        return self.act(mode.spec, mode.k2, vec)

    def mode_matrix(self, spec, k2, source, target):
        return BlockMatrix.of_operator(lambda st: FockVector(self.act_state(spec, k2, st)),
                                       source, target, self.zero)

    # grading bookkeeping

    def out_sector(self, spec, j):
        if isinstance(spec, ExpSpec):
            return j + spec.shift
        if isinstance(spec, QComm):
            return self.out_sector(spec.spec, self.out_sector(spec.mode.spec, j))
        if isinstance(spec, (Rescaled, Scaled)):
            return self.out_sector(spec.spec, j)
        if isinstance(spec, SumSpec):
            return self.out_sector(spec.terms[0], j)
        raise TypeError(spec)

    def out_degree(self, spec, j, d, k2):
        """Heisenberg degree of the image of block (j, d) under mode k2, or None."""
        if d is None:
            return None
        if isinstance(spec, ExpSpec):
            diff = k2 - self.z_exponent(spec, j)
            if diff % 2:
                return None
            r = d + diff // 2
            return r if r >= 0 else None
        if isinstance(spec, QComm):
            x = spec.mode
            d1 = self.out_degree(x.spec, j, d, x.k2)
            if d1 is not None:
                r = self.out_degree(spec.spec, self.out_sector(x.spec, j), d1, k2)
                if r is not None:
                    return r
            d2 = self.out_degree(spec.spec, j, d, k2)
            return self.out_degree(x.spec, self.out_sector(spec.spec, j), d2, x.k2)
        if isinstance(spec, Rescaled):
            return self.out_degree(spec.spec, j, d, k2)
        if isinstance(spec, Scaled):
            return self.out_degree(spec.spec, j, d, k2 - spec.z_shift)
        if isinstance(spec, SumSpec):
            for t in spec.terms:
                r = self.out_degree(t, j, d, k2)
                if r is not None:
                    return r
            return None
        raise TypeError(spec)

    def degree_change(self, spec, j, k2):
        """Unclipped change of Heisenberg degree under mode k2 on sector j."""
        if isinstance(spec, ExpSpec):
            return (k2 - self.z_exponent(spec, j)) // 2
        if isinstance(spec, QComm):
            x = spec.mode
            return (self.degree_change(x.spec, j, x.k2)
                    + self.degree_change(spec.spec, self.out_sector(x.spec, j), k2))
        if isinstance(spec, Rescaled):
            return self.degree_change(spec.spec, j, k2)
        if isinstance(spec, Scaled):
            return self.degree_change(spec.spec, j, k2 - spec.z_shift)
        if isinstance(spec, SumSpec):
            return self.degree_change(spec.terms[0], j, k2)
        raise TypeError(spec)

    def product_out_degree(self, prod, a2, b2, st):
        """Heisenberg degree of the output block of a two-variable product."""
        d = len_degree(st)
        j = st.sector
        if isinstance(prod, NormalOrdered2):
            return (d + (a2 - self.z_exponent(prod.z_spec, j)) // 2
                    + (b2 - self.z_exponent(prod.w_spec, j)) // 2)
        e_left = a2 if prod.left_var == "z" else b2
        e_right = a2 if prod.right_var == "z" else b2
        d1 = d + self.degree_change(prod.right, j, e_right)
        return d1 + self.degree_change(prod.left, self.out_sector(prod.right, j), e_left)

    def min_exponent(self, spec, j, d):
        """Lower bound on k2 with a possibly nonzero mode on block (j, d)."""
        if d is None:
            return None
        if isinstance(spec, ExpSpec):
            return self.z_exponent(spec, j) - 2 * d
        if isinstance(spec, QComm):
            x = spec.mode
            cands = []
            d1 = self.out_degree(x.spec, j, d, x.k2)
            if d1 is not None:
                cands.append(self.min_exponent(spec.spec, self.out_sector(x.spec, j), d1))
            cands.append(self.min_exponent(spec.spec, j, d))
            cands = [c for c in cands if c is not None]
            return min(cands) if cands else None
        if isinstance(spec, Rescaled):
            return self.min_exponent(spec.spec, j, d)
        if isinstance(spec, Scaled):
            m = self.min_exponent(spec.spec, j, d)
            return None if m is None else m + spec.z_shift
        if isinstance(spec, SumSpec):
            cands = [self.min_exponent(t, j, d) for t in spec.terms]
            cands = [c for c in cands if c is not None]
            return min(cands) if cands else None
        raise TypeError(spec)

    def exponent_parity(self, spec, j):
        return self.min_exponent(spec, j, 0) % 2

    # two-variable products

    def product_coeff(self, prod, a2, b2, st):
        key = (prod, a2, b2, st)
        r = self._prod.get(key)
        if r is not None:
            return r
        if isinstance(prod, Product):
            e_left = a2 if prod.left_var == "z" else b2
            e_right = a2 if prod.right_var == "z" else b2
            r = self.act_terms(prod.left, e_left, self.act_state(prod.right, e_right, st))
        elif isinstance(prod, NormalOrdered2):
            r = self._normal_ordered2(prod, a2, b2, st)
        else:
            raise TypeError(prod)
        self._prod[key] = r
        return r

    def _normal_ordered2(self, prod, a2, b2, st):
        zs, ws = prod.z_spec, prod.w_spec
        lam, j = st
        dz = a2 - self.z_exponent(zs, j)
        dw = b2 - self.z_exponent(ws, j)
        if dz % 2 or dw % 2:
            return {}
        dz //= 2
        dw //= 2
        j2 = j + zs.shift + ws.shift
        out = {}
        for ew, rest_w, cw in self.annihilation_terms(ws, lam):
            if ew + dw < 0:
                continue
            for ez, rest, cz in self.annihilation_terms(zs, rest_w):
                if ez + dz < 0:
                    continue
                base = cw * cz
                for nu_z, az in self.creation_poly(zs, ez + dz).items():
                    for nu_w, aw in self.creation_poly(ws, ew + dw).items():
                        key = BasisState(merge(merge(rest, nu_z), nu_w), j2)
                        v = base * az * aw
                        out[key] = out[key] + v if key in out else v
        sigma = self.zero_mode_value(zs, j) * self.zero_mode_value(ws, j)
        return {k: sigma * v for k, v in out.items() if not v.is_zero()}

    def right_min(self, prod, j, d):
        """Lower bound for the exponent of the variable acting first."""
        if isinstance(prod, Product):
            return self.min_exponent(prod.right, j, d)
        return self.min_exponent(prod.w_spec, j, d)

    def twovar_coeff(self, expr, a2, b2, st):
        """Coefficient of z^(a2/2) w^(b2/2) of a TwoVarExpr applied to st."""
        out = {}
        for term in expr.terms:
            a, b = a2 - term.z_shift, b2 - term.w_shift
            scale = self.params.mono(term.coef)
            if term.series is None:
                contrib = self.product_coeff(term.product, a, b, st)
                for k, v in contrib.items():
                    v = scale * v
                    out[k] = out[k] + v if k in out else v
                continue
            rvar = _right_var(term.product)
            if term.series.ratio == "w/z":
                if rvar != "w":
                    raise RatioOrientationMismatch("w/z series needs w acting first")
            elif term.series.ratio == "z/w":
                if rvar != "z":
                    raise RatioOrientationMismatch("z/w series needs z acting first")
            else:
                raise RatioOrientationMismatch("series has no declared orientation")
            lo = self.right_min(term.product, st.sector, len_degree(st))
            if lo is None:
                continue
            right_exp = b if rvar == "w" else a
            kmax = (right_exp - lo) // 2
            for k in range(kmax + 1):
                sk = term.series.coeff(k)
                if sk.is_zero():
                    continue
                if rvar == "w":
                    contrib = self.product_coeff(term.product, a + 2 * k, b - 2 * k, st)
                else:
                    contrib = self.product_coeff(term.product, a - 2 * k, b + 2 * k, st)
                if not contrib:
                    continue
                f = scale * sk
                for key, v in contrib.items():
                    v = f * v
                    out[key] = out[key] + v if key in out else v
        return pruned(out)

    def specialize(self, expr, substitute, root, n2, st, guard=4, slack=8):
        """Coefficient of x^(n2/2) after setting w = root^2 z (substitute='w')
        or z = root^2 w (substitute='z').

        The scan runs over the exponent of the variable acting first,
        upward from its hard lower bound, and stops once `guard`
        consecutive admissible exponents past the last nonzero term vanish.
        Returns (terms, Certificate) or raises NotStabilized.
        """
        rvars = {_right_var(t.product) for t in expr.terms}
        if len(rvars) != 1:
            raise ValueError("mixed operator orders in one specialization")
        rvar = rvars.pop()
        lam, j = st
        d = len(lam) and sum(lam)
        los = []
        for t in expr.terms:
            lo = self.right_min(t.product, j, d)
            if lo is not None:
                shift = t.w_shift if rvar == "w" else t.z_shift
                # series terms push the first-acting exponent down only
                los.append(lo + shift)
        if not los:
            return {}, Certificate(None, None, guard, None)
        lo = min(los)
        t0 = expr.terms[0]
        x0 = lo
        a0, b0 = (n2 - x0, x0) if rvar == "w" else (x0, n2 - x0)
        d_out = max(self.product_out_degree(t0.product, a0 - t0.z_shift, b0 - t0.w_shift, st), 0)
        # the regularized coefficient is a Laurent polynomial whose width is
        # bounded by the source and target degrees; the guard band certifies it
        span = 2 * (d + d_out) + slack
        cap = lo + span + 2 * guard + 4 * slack + 2 * abs(n2)
        out = {}
        first_nonzero = last_nonzero = None
        x = lo
        zeros = 0
        while True:
            other = n2 - x
            a2, b2 = (other, x) if rvar == "w" else (x, other)
            c = self.twovar_coeff(expr, a2, b2, st)
            if c:
                sub_exp = b2 if substitute == "w" else a2
                f = self.params.mono(root ** sub_exp)
                for k, v in c.items():
                    v = f * v
                    out[k] = out[k] + v if k in out else v
                if first_nonzero is None:
                    first_nonzero = x
                last_nonzero = x
                zeros = 0
            else:
                zeros += 1
            if x >= lo + span and zeros >= guard:
                break
            x += 2
            if x > cap:
                raise NotStabilized(f"no stable support for {st} at exponent {n2}")
        return pruned(out), Certificate(first_nonzero, last_nonzero, guard, x)


def len_degree(st):
    return sum(st.partition)


def _factorial(m):
    r = 1
    for i in range(2, m + 1):
        r *= i
    return r


@dataclass(frozen=True, eq=True)
class Product(_CachedHash):
    """left(left_var) o right(right_var); right acts first."""
    left: object
    left_var: str
    right: object
    right_var: str

    def __hash__(self):
        return _CachedHash.__hash__(self)


@dataclass(frozen=True, eq=True)
class NormalOrdered2(_CachedHash):
    """:A(z) B(w): for exponential specs A and B."""
    z_spec: ExpSpec
    w_spec: ExpSpec

    def __hash__(self):
        return _CachedHash.__hash__(self)


def _right_var(prod):
    if isinstance(prod, Product):
        return prod.right_var
    return "w"


def product_coefficients(first, second):
    """first(w) o second(z): second acts first."""
    return Product(first, "w", second, "z")


class LazySeries:
    """Series coefficients extended on demand from a builder(order)."""

    def __init__(self, builder, ratio, order=8):
        self.builder = builder
        self.ratio = ratio
        self._series = builder(order)

    def coeff(self, k):
        while k > self._series.order:
            self._series = self.builder(max(2 * self._series.order, k + 4))
        return self._series.coeffs[k]


@dataclass
class TwoVarTerm:
    """coef * z^(z_shift/2) w^(w_shift/2) * series(ratio) * product."""
    coef: Monomial
    product: object
    series: LazySeries = None
    z_shift: int = 0
    w_shift: int = 0


@dataclass
class TwoVarExpr:
    terms: list

    def __add__(self, other):
        return TwoVarExpr(self.terms + other.terms)

    def __neg__(self):
        return TwoVarExpr([TwoVarTerm(-t.coef, t.product, t.series, t.z_shift, t.w_shift)
                           for t in self.terms])

    def __sub__(self, other):
        return self + (-other)


def term(product, coef=ONE, series=None, z_shift=0, w_shift=0):
    return TwoVarExpr([TwoVarTerm(coef, product, series, z_shift, w_shift)])


def multiply_by_series(expr, series):
    """Multiply every term of an expression by a ratio series."""
    out = []
    for t in expr.terms:
        if t.series is not None:
            raise ValueError("term already carries a series")
        rvar = _right_var(t.product)
        want = "w/z" if rvar == "w" else "z/w"
        if series.ratio != want:
            raise RatioOrientationMismatch(f"{series.ratio} series on a product with {rvar} first")
        out.append(TwoVarTerm(t.coef, t.product, series, t.z_shift, t.w_shift))
    return TwoVarExpr(out)


@dataclass(frozen=True)
class Certificate:
    """Support of a specialized coefficient in the scanned exponent."""
    k_min: int
    k_max: int
    guard: int
    scanned_to: int


def block_states(sectors, max_degree):
    out = []
    for j in sectors:
        for d in range(max_degree + 1):
            out.extend(enumerate_block(j, d))
    return out


__all__ = [
    "Term", "ZeroMode", "ExpSpec", "Mode", "QComm", "Rescaled", "Scaled", "SumSpec",
    "Engine", "Product", "NormalOrdered2", "TwoVarExpr", "TwoVarTerm", "LazySeries",
    "Certificate", "X_PLUS", "X_MINUS", "x_plus", "x_minus", "PHI_MINUS", "PHI_PLUS",
    "PHI_PLUS_ALT", "PSI_PLUS", "PSI_MINUS", "PSI_MINUS_ALT", "PSI_STAR_MINUS",
    "PSI_STAR_PLUS", "PSI_STAR_PLUS_ALT", "K_ZERO_MODE", "rescale_exp",
    "normal_ordered_product", "product_coefficients", "multiply_by_series", "term",
    "phi", "psi", "psi_star", "block_states", "IOTA",
]
