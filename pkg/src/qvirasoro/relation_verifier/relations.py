"""Two-variable operator relations of the vertex operators.

Each relation is a TwoVarExpr for LHS - RHS together with an optional
delta contribution c (-1)^d delta(...) that the residual must equal.
Coefficients are read off at z^(a2/2) w^(b2/2) on basis states.
"""

from dataclasses import dataclass

from ..currents import (
    PHI_MINUS,
    PSI_PLUS,
    PSI_STAR_MINUS,
    LazySeries,
    NormalOrdered2,
    Product,
    QComm,
    Rescaled,
    Scaled,
    SumSpec,
    normal_ordered_product,
    phi,
    psi,
    psi_star,
    term,
    x_minus,
    x_plus,
)
from ..exact_coefficients import ONE, TruncatedSeries, mono, series_mul
from ..fock_space import add_into, pruned
from ..structure_functions import build, r_matrix, r_matrix_inverse

Q = mono(s=2)
SIGNS = ("+", "-")
PAIRS = [(a, b) for a in SIGNS for b in SIGNS]


def sign(e):
    return 1 if e == "+" else -1


def structure(name, ratio, params, kernel=None, factor=None):
    """Lazy series of a structure function, optionally times a rational kernel
    or a polynomial factor given as a coefficient list."""
    def builder(n):
        s = build(name, n, params).series.with_ratio(ratio)
        if kernel is not None:
            s = series_mul(s, kernel.series(n, ratio))
        if factor is not None:
            poly = list(factor) + [params.zero] * (n + 1)
            s = series_mul(s, TruncatedSeries(poly[: n + 1], ratio))
        return s
    return LazySeries(builder, ratio)


@dataclass
class Delta:
    """c * (-1)^d * delta, where delta is "z,q2w" for delta(z, q^2 w) or
    "q2z,w" for delta(q^2 z, w)."""
    coef: object
    kind: str

    def value(self, params, a2, b2, sector):
        if a2 + b2 != -2:
            return None
        power = b2 if self.kind == "z,q2w" else a2
        v = params.mono(self.coef) * params.qpow(2 * power)
        return -v if sector % 2 else v


@dataclass
class Relation:
    name: str
    anchor: str
    expr: object
    delta: Delta = None
    parity_term: int = 0


def _ordered(a, a_var, b, b_var):
    """a(a_var) b(b_var) with b acting first."""
    return Product(a, a_var, b, b_var)


def ordered_pair_relation(name, anchor, left, right, series_name, params, half, delta=None):
    """z^(half/2) s(w/z) left(z) right(w) - w^(half/2) s(z/w) right(w) left(z)."""
    lhs = term(_ordered(left, "z", right, "w"), series=structure(series_name, "w/z", params),
               z_shift=half)
    rhs = term(_ordered(right, "w", left, "z"), series=structure(series_name, "z/w", params),
               w_shift=half)
    return Relation(name, anchor, lhs - rhs, delta)


# R-matrix relations

PHI_DELTA = {("-", "+"): mono(iota=1, s=-1), ("+", "-"): mono(-1, iota=1, s=-3)}
PSI_STAR_DELTA = {("-", "+"): mono(iota=1, s=3), ("+", "-"): mono(-1, iota=1, s=1)}
PSI_DELTA = {("+", "-"): mono(iota=1, s=5), ("-", "+"): mono(-1, iota=1, s=3)}


def phi_r_matrix_relations(params):
    """All four components of the exchange relation for Phi with R^-1 and delta term."""
    rinv = r_matrix_inverse(params)
    out = []
    for e in PAIRS:
        lhs = term(_ordered(phi(sign(e[0])), "z", phi(sign(e[1])), "w"),
                   series=structure("alpha_phi", "w/z", params), z_shift=-1)
        expr = lhs
        for f in PAIRS:
            k = rinv.get((e, f))
            if k is None:
                continue
            expr = expr - term(_ordered(phi(sign(f[1])), "w", phi(sign(f[0])), "z"),
                               series=structure("alpha_phi", "z/w", params, kernel=k), w_shift=-1)
        d = PHI_DELTA.get(e)
        out.append(Relation(f"phi-R/({e[0]},{e[1]})", "rmatrix.phi-exchange", expr,
                            Delta(d, "z,q2w") if d else None))
    return out


def psi_star_r_matrix_relations(params):
    """Exchange relation for Psi* with R acting on the operator row vector."""
    r = r_matrix(params)
    out = []
    for e in PAIRS:
        expr = term(_ordered(psi_star(sign(e[0])), "z", psi_star(sign(e[1])), "w"),
                    series=structure("alpha_psi", "w/z", params), z_shift=-1)
        for f in PAIRS:
            k = r.get((f, e))
            if k is None:
                continue
            expr = expr - term(_ordered(psi_star(sign(f[1])), "w", psi_star(sign(f[0])), "z"),
                               series=structure("alpha_psi", "z/w", params, kernel=k), w_shift=-1)
        d = PSI_STAR_DELTA.get(e)
        out.append(Relation(f"psi*-R/({e[0]},{e[1]})", "rmatrix.psi-star-exchange", expr,
                            Delta(d, "q2z,w") if d else None))
    return out


def psi_mixed_relations(params):
    """The two mixed-sign exchange relations for Psi, R acting on the column."""
    r = r_matrix(params)
    out = []
    for e in (("+", "-"), ("-", "+")):
        expr = term(_ordered(psi(sign(e[0])), "z", psi(sign(e[1])), "w"),
                    series=structure("alpha_psi", "w/z", params), z_shift=-1)
        for f in PAIRS:
            k = r.get((e, f))
            if k is None:
                continue
            expr = expr - term(_ordered(psi(sign(f[1])), "w", psi(sign(f[0])), "z"),
                               series=structure("alpha_psi", "z/w", params, kernel=k), w_shift=-1)
        out.append(Relation(f"psi-R/({e[0]},{e[1]})", "rmatrix.psi-exchange", expr,
                            Delta(PSI_DELTA[e], "q2z,w")))
    return out


def phi_alpha_psi_variant(params):
    """The (+,-) Phi relation with alpha_psi on the reversed product.

    Negative control: the relation only holds with alpha_phi there.
    """
    rinv = r_matrix_inverse(params)
    e = ("+", "-")
    expr = term(_ordered(phi(1), "z", phi(-1), "w"),
                series=structure("alpha_phi", "w/z", params), z_shift=-1)
    for f in PAIRS:
        k = rinv.get((e, f))
        if k is not None:
            expr = expr - term(_ordered(phi(sign(f[1])), "w", phi(sign(f[0])), "z"),
                               series=structure("alpha_psi", "z/w", params, kernel=k), w_shift=-1)
    return Relation("phi-R/(+,-)/alpha-psi", "rmatrix.phi-exchange", expr,
                    Delta(PHI_DELTA[e], "z,q2w"))


@dataclass
class QCommIdentity:
    """[A(z) B(w), x]_p = expr, checked coefficientwise."""
    name: str
    anchor: str
    product: Product
    mode: object
    p: object
    expr: object


def preprocessing_identities():
    pp = _ordered(PHI_MINUS, "z", PHI_MINUS, "w")
    yy = _ordered(psi(1), "z", psi(1), "w")
    return [
        QCommIdentity("phi-qcomm/x0-", "rmatrix.phi-qcommutator", pp, x_minus(0), Q ** 2,
                      term(_ordered(phi(-1), "z", phi(1), "w"))
                      + term(_ordered(phi(1), "z", phi(-1), "w"), coef=Q)),
        QCommIdentity("phi-qcomm/x1-", "rmatrix.phi-qcommutator", pp, x_minus(1), Q ** -2,
                      term(_ordered(phi(-1), "z", phi(1), "w"), coef=Q ** 2, w_shift=2)
                      + term(_ordered(phi(1), "z", phi(-1), "w"), coef=Q, z_shift=2)),
        QCommIdentity("psi-qcomm/x0+", "rmatrix.psi-qcommutator", yy, x_plus(0), Q ** 2,
                      term(_ordered(psi(1), "z", psi(-1), "w"))
                      + term(_ordered(psi(-1), "z", psi(1), "w"), coef=Q)),
        QCommIdentity("psi-qcomm/x-1+", "rmatrix.psi-qcommutator", yy, x_plus(-1), Q ** -2,
                      term(_ordered(psi(1), "z", psi(-1), "w"), coef=Q ** -2, w_shift=-2)
                      + term(_ordered(psi(-1), "z", psi(1), "w"), coef=Q ** -3, z_shift=-2)),
    ]


# normal ordering and interchange

def normal_ordering_relations(params):
    no_pp = NormalOrdered2(PHI_MINUS, PHI_MINUS)
    no_yy = NormalOrdered2(PSI_PLUS, PSI_PLUS)
    no_py = NormalOrdered2(PHI_MINUS, PSI_STAR_MINUS)
    c3 = mono(iota=1, s=3)
    c1 = mono(iota=1, s=1)
    return [
        Relation("normal-order/phi-phi", "interchange.normal-ordering",
                 term(_ordered(PHI_MINUS, "z", PHI_MINUS, "w"), coef=c3.inverse(),
                      series=structure("alpha_phi", "w/z", params), z_shift=-1) - term(no_pp)),
        Relation("normal-order/psi-psi", "interchange.normal-ordering",
                 term(_ordered(PSI_PLUS, "z", PSI_PLUS, "w"), coef=c1.inverse(),
                      series=structure("alpha_psi", "w/z", params), z_shift=-1) - term(no_yy)),
        Relation("normal-order/phi-psi*", "interchange.normal-ordering",
                 term(_ordered(PHI_MINUS, "z", PSI_STAR_MINUS, "w"), coef=c3,
                      series=structure("beta", "w/z", params), z_shift=1) - term(no_py)),
        Relation("normal-order/psi*-phi", "interchange.normal-ordering",
                 term(_ordered(PSI_STAR_MINUS, "w", PHI_MINUS, "z"), coef=c3,
                      series=structure("beta", "z/w", params), w_shift=1) - term(no_py)),
    ]


def interchange_relations(params):
    out = []
    for e in ("-", "+"):
        out.append(ordered_pair_relation(f"phi-phi/({e},{e})", "interchange.phi-phi",
                                         phi(sign(e)), phi(sign(e)), "alpha_phi", params, -1))
        out.append(ordered_pair_relation(f"psi*-psi*/({e},{e})", "interchange.psi-star-psi-star",
                                         psi_star(sign(e)), psi_star(sign(e)), "alpha_psi",
                                         params, -1))
    for e1, e2 in PAIRS:
        out.append(ordered_pair_relation(f"phi-psi*/({e1},{e2})", "interchange.phi-psi-star",
                                         phi(sign(e1)), psi_star(sign(e2)), "beta", params, 1))
    return out


def vanishing_commutators():
    return [
        ("commute/phi- x0+", "interchange.vanishing-commutator", QComm(PHI_MINUS, x_plus(0), ONE)),
        ("commute/psi*- x0-", "interchange.vanishing-commutator",
         QComm(PSI_STAR_MINUS, x_minus(0), ONE)),
    ]


# special points

@dataclass
class SpecialPoint:
    name: str
    anchor: str
    expr: object
    substitute: str
    root: object
    divisor: object
    # expected value: coefficient * (-1)^d at doubled exponent n2
    n2: int
    value: object


def special_points(params):
    """Pole-carrying combinations times their vanishing factor, with the
    substitution, the factor's value there and the expected result."""
    one, q = params.one, params.q
    inv_iota_s = mono(iota=1, s=1).inverse()
    phi_expr = (term(_ordered(phi(-1), "z", phi(1), "w"), coef=Q * inv_iota_s, z_shift=-1)
                - term(_ordered(phi(1), "z", phi(-1), "w"), coef=inv_iota_s, z_shift=-1))
    phi_series = structure("alpha_phi", "w/z", params, factor=(one, -q * q))
    psi_expr = (term(_ordered(psi(-1), "z", psi(1), "w"), coef=inv_iota_s, z_shift=-1)
                - term(_ordered(psi(1), "z", psi(-1), "w"), coef=Q * inv_iota_s, z_shift=-1))
    psi_series = structure("alpha_psi", "w/z", params, factor=(one, -1 / (q * q)))
    root = mono(s=1, t=1)
    star_p = Rescaled(psi_star(1), root)
    star_m = Rescaled(psi_star(-1), root)
    itz = mono(iota=1, t=1)
    star_expr = (term(_ordered(star_p, "z", star_m, "w"), coef=itz, z_shift=-1)
                 - term(_ordered(star_m, "z", star_p, "w"), coef=Q * itz, z_shift=-1))
    from ..currents import multiply_by_series
    return [
        SpecialPoint("special/phi", "special-point.phi", multiply_by_series(phi_expr, phi_series),
                     "w", mono(s=2), 1 - q ** 4, -2, 1 / (q * q * (1 - q * q))),
        SpecialPoint("special/psi", "special-point.psi", multiply_by_series(psi_expr, psi_series),
                     "z", mono(s=2), 1 - q ** -4, -2, q / (1 - q * q)),
        SpecialPoint("special/psi*", "special-point.psi-star",
                     multiply_by_series(star_expr, psi_series),
                     "z", mono(s=2), 1 - q ** -4, -2, -1 / (1 - q * q)),
    ]


OMEGA = normal_ordered_product([(PHI_MINUS, mono(s=2)), (PHI_MINUS, ONE)], name="Omega")
UPSILON = normal_ordered_product([(PSI_PLUS, ONE), (PSI_PLUS, mono(s=2))], name="Upsilon")

# q^2 w [Omega, x_0^-]_{q^2} - [Omega, x_1^-]_{q^-2}
PHI_LEMMA = SumSpec((Scaled(QComm(OMEGA, x_minus(0), Q ** 2), Q ** 2, 2),
                     Scaled(QComm(OMEGA, x_minus(1), Q ** -2), mono(-1))))
# [Upsilon, x_0^+]_{q^2} - q^4 z [Upsilon, x_{-1}^+]_{q^-2}
PSI_LEMMA = SumSpec((QComm(UPSILON, x_plus(0), Q ** 2),
                     Scaled(QComm(UPSILON, x_plus(-1), Q ** -2), mono(-1, s=8), 2)))


def lemma_identities(params):
    """(name, anchor, spec, k2, coefficient of (-1)^d at mode k2)."""
    q = params.q
    return [
        ("lemma/phi", "special-point.phi-lemma", PHI_LEMMA, 0, 1 / (q * q)),
        ("lemma/upsilon", "special-point.upsilon-lemma", PSI_LEMMA, -2, -params.one),
    ]


# evaluation helpers

def side_parities(engine, expr, st):
    """Parities of the doubled z and w exponents in the first term on st."""
    t = expr.terms[0]
    prod = t.product
    j = st.sector
    if isinstance(prod, NormalOrdered2):
        return ((engine.z_exponent(prod.z_spec, j) + t.z_shift) % 2,
                (engine.z_exponent(prod.w_spec, j) + t.w_shift) % 2)
    first = engine.exponent_parity(prod.right, j)
    second = engine.exponent_parity(prod.left, engine.out_sector(prod.right, j))
    par = {prod.right_var: first, prod.left_var: second}
    return (par["z"] + t.z_shift) % 2, (par["w"] + t.w_shift) % 2


def window(bound2, parity):
    return [k for k in range(-bound2, bound2 + 1) if k % 2 == parity]


def relation_residual(engine, rel, st, a2, b2):
    r = dict(engine.twovar_coeff(rel.expr, a2, b2, st))
    if rel.delta is not None:
        v = rel.delta.value(engine.params, a2, b2, st.sector)
        if v is not None:
            add_into(r, {st: v}, -engine.params.one)
    return pruned(r)


def qcomm_identity_residual(engine, ident, st, a2, b2):
    """[P(a2, b2), x]_p st - expr(a2, b2) st."""
    x = ident.mode
    p = engine.params.mono(ident.p)
    one = {st: engine.params.one}
    moved = engine.act_terms(x.spec, x.k2, one)
    out = {}
    for s2, c in moved.items():
        add_into(out, engine.product_coeff(ident.product, a2, b2, s2), c)
    first = engine.product_coeff(ident.product, a2, b2, st)
    add_into(out, engine.act_terms(x.spec, x.k2, first), -p)
    add_into(out, engine.twovar_coeff(ident.expr, a2, b2, st), -engine.params.one)
    return pruned(out)


def state_label(st):
    return [list(st.partition), st.sector]
