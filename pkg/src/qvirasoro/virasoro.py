"""Deformed Virasoro generators T_n (and twisted T_r) built from the
vertex operators, with relation, highest-weight and character checks.

The building block is the beta-regularized product at w = q q1 z,

    s^3 t z^(1/2) beta(z/w) Psi*_-(w) Phi_-(z) |_{w = q q1 z},

which is a single normally ordered exponential.  The other sign pairs
follow from q-commutators with x_0^-, x_0^+:

    Reg(-,+) = [Reg(-,-), x_0^-]_q,   Reg(+,-) = [Reg(-,-), x_0^+]_q,
    Reg(+,+) = [Reg(-,+), x_0^+]_q - Reg(-,-) q^(d+1).
"""

from dataclasses import dataclass
from functools import lru_cache

from .currents import (
    PHI_MINUS,
    PSI_STAR_MINUS,
    Engine,
    QComm,
    Scaled,
    SumSpec,
    ZeroMode,
    normal_ordered_product,
    x_minus,
    x_plus,
)
from .exact_coefficients import IOTA, LaurentPoly, mono
from .fock_space import (
    BasisState,
    FockVector,
    add_into,
    bareiss_rank,
    enumerate_block,
    partition_count,
    principal_block,
    principal_degree2,
    pruned,
)
from .report import CheckReport
from .structure_functions import build

Q = mono(s=2)
GAMMA_ROOT = mono(s=1, t=1)  # (q q1)^(1/2)

# s^3 t z^(1/2) (-q^3 w)^(-1/2) :Phi_-(z) Psi*_-(w): at w = q q1 z
REG_MM = normal_ordered_product([(PHI_MINUS, mono()), (PSI_STAR_MINUS, GAMMA_ROOT)],
                                name="Reg--", scalar=mono(iota=1, s=1).inverse())
REG_MP = QComm(REG_MM, x_minus(0), Q)
REG_PM = QComm(REG_MM, x_plus(0), Q)
REG_PP = SumSpec((QComm(REG_MP, x_plus(0), Q),
                  Scaled(REG_MM, mono(-1), 0, ZeroMode(Q, 1, 1, False))))
REG_PP_ALT = SumSpec((QComm(REG_PM, x_minus(0), Q),
                      Scaled(REG_MM, mono(-1, s=4), 0, ZeroMode(Q, -1, -1, False))))

T_NONTWISTED = SumSpec((Scaled(REG_PP, mono(u=1)), Scaled(REG_MM, mono(u=-1))))
T_TWISTED = SumSpec((Scaled(REG_MP, IOTA, 1), Scaled(REG_PM, IOTA, -1)))


def central_factor(params):
    """(1 - q1)(1 - q2)/(1 - q3^-1)."""
    q1 = params.mono(mono(t=2))
    q2 = params.mono(mono(s=-4, t=-2))
    q3 = params.mono(mono(s=4))
    return (1 - q1) * (1 - q2) / (1 - 1 / q3)


def highest_weight(params, j):
    """lambda_{u,j} = (-q)^(1/2)(q q1)^(j/2) u + inverse."""
    x = params.mono(mono(iota=1, s=1 + j, t=j, u=1))
    return x + 1 / x


class VirasoroGenerators:
    """Modes T_k of the deformed Virasoro current over one engine.

    Indices are doubled: mode(n2) is T_{n2/2}, the coefficient of z^(-n2/2).
    """

    def __init__(self, engine, variant="nontwisted", spec=None):
        if variant not in ("nontwisted", "twisted"):
            raise ValueError(variant)
        self.engine = engine
        self.params = engine.params
        self.variant = variant
        self.spec = spec or (T_NONTWISTED if variant == "nontwisted" else T_TWISTED)
        self._f = None
        self._pairs = {}

    def act_state(self, n2, st):
        return self.engine.act_state(self.spec, -n2, st)

    def act(self, n2, terms):
        return self.engine.act_terms(self.spec, -n2, terms)

    def grade2(self, st):
        """Doubled grading lowered by T_{n2/2} by exactly n2."""
        if self.variant == "nontwisted":
            return 2 * sum(st.partition)
        return principal_degree2(st)

    def f(self, l):
        if self._f is None or l > self._f.order:
            n = max(8, 2 * l + 4)
            self._f = build("f", n, self.params).series
        return self._f.coeffs[l]

    def pair(self, a2, b2, st):
        """T_{a2/2} T_{b2/2} on a basis state, shared between relations."""
        key = (a2, b2, st)
        r = self._pairs.get(key)
        if r is None:
            inner = self.act_state(b2, st)
            r = self.act(a2, inner) if inner else {}
            self._pairs[key] = r
        return r

    def _side(self, a2, b2, st, top2, guard):
        """sum_l f_l T_{a-l} T_{b+l} applied to a basis state."""
        out = {}
        lmax = (top2 - b2) // 2
        for l in range(0, max(lmax, -1) + 1 + guard):
            if l > lmax:
                if self.act_state(b2 + 2 * l, st):
                    raise AssertionError(
                        f"T_{(b2 + 2 * l) / 2} does not annihilate a degree {top2 / 2} vector")
                continue
            add_into(out, self.pair(a2 - 2 * l, b2 + 2 * l, st), self.f(l))
        return out

    def relation_residual(self, n2, m2, st, guard=4):
        top2 = self.grade2(st)
        lhs = self._side(n2, m2, st, top2, guard)
        rhs_side = self._side(m2, n2, st, top2, guard)
        add_into(lhs, rhs_side, -self.params.one)
        if n2 + m2 == 0:
            p = self.params
            c = central_factor(p)
            val = -c * (p.mono(mono(s=-2 * n2)) - p.mono(mono(s=2 * n2)))
            add_into(lhs, {st: -val})
        return pruned(lhs)

    def mode_indices(self, bound2):
        """Doubled mode indices with |n| <= bound2/2 of the right parity."""
        if self.variant == "nontwisted":
            return [k for k in range(-bound2, bound2 + 1) if k % 2 == 0]
        return [k for k in range(-bound2, bound2 + 1) if k % 2 == 1]


def build_T_nontwisted(params_or_engine):
    return VirasoroGenerators(_engine(params_or_engine), "nontwisted")


def build_T_twisted(params_or_engine):
    return VirasoroGenerators(_engine(params_or_engine), "twisted")


def _engine(x):
    return x if isinstance(x, Engine) else Engine(x)


def _witness(residual, extra=None):
    k, v = sorted(residual.items())[0]
    w = {"state": [list(k.partition), k.sector], "value": str(v)}
    if extra:
        w.update(extra)
    return w


def nontwisted_sources(sectors, degree):
    return [st for j in sectors for d in range(degree + 1) for st in enumerate_block(j, d)]


def twisted_sources(i, deg2):
    return [st for g in range(deg2 + 1) for st in principal_block(i, g)]


def check_virasoro_relation(gen, n2, m2, sources, guard=4, label=None):
    """One report for T-relation (n2/2, m2/2) over all source states."""
    witness = None
    for st in sources:
        r = gen.relation_residual(n2, m2, st, guard)
        if r:
            witness = _witness(r, {"source": [list(st.partition), st.sector]})
            break
    suite = "virasoro" if gen.variant == "nontwisted" else "virasoro-twisted"
    return CheckReport(suite, label or f"relation/n={n2}/2,m={m2}/2", "virasoro.defining-relation",
                       {"n2": n2, "m2": m2, "sources": len(sources), **gen.params.describe()},
                       "pass" if witness is None else "fail", witness)


def check_sector_preservation(gen, sources, modes):
    """Non-twisted T_k keeps the sector; twisted T_r shifts it by +-2."""
    witness = None
    for st in sources:
        for k in modes:
            for out in gen.act_state(k, st):
                delta = out.sector - st.sector
                ok = delta == 0 if gen.variant == "nontwisted" else delta in (-2, 2)
                if not ok:
                    witness = {"source": [list(st.partition), st.sector], "mode2": k,
                               "target_sector": out.sector}
                    break
            if witness:
                break
        if witness:
            break
    suite = "virasoro" if gen.variant == "nontwisted" else "virasoro-twisted"
    return CheckReport(suite, "sector-law", "virasoro.sector-law",
                       {"sources": len(sources), **gen.params.describe()},
                       "pass" if witness is None else "fail", witness)


@dataclass
class HighestWeightReport:
    sector: int
    eigenvalue: object
    expected: object
    annihilated_up_to: int
    ok: bool


def check_highest_weights(gen, sectors, top=3):
    out = []
    p = gen.params
    for j in sectors:
        st = BasisState((), j)
        image = gen.act_state(0, st)
        eig = image.get(st, p.zero)
        clean = len([k for k in image if k != st]) == 0
        lam = highest_weight(p, j)
        annihilated = all(not gen.act_state(2 * n, st) for n in range(1, top + 1))
        out.append(HighestWeightReport(j, eig, lam, top, clean and annihilated and eig == lam))
    return out


def check_twisted_highest(gen, i, top2=7):
    st = BasisState((), i)
    bad = [r for r in range(1, top2 + 1, 2) if gen.act_state(r, st)]
    return CheckReport("virasoro-twisted", f"highest-weight/i={i}", "virasoro.twisted-highest-weight",
                       {"i": i, "top2": top2, **gen.params.describe()},
                       "pass" if not bad else "fail", None if not bad else {"mode2": bad[0]})


# characters


def half_odd_partition_counts(max2):
    """Coefficients of prod_{r in 1/2 + Z>=0} 1/(1 - x^r), indexed by doubled degree."""
    c = [1] + [0] * max2
    for part in range(1, max2 + 1, 2):
        for n in range(part, max2 + 1):
            c[n] += c[n - part]
    return c


def gauss_rhs_counts(i, max2):
    """Coefficients of sum_{j in i+2Z} x^(j(j-1)/4) / prod (1 - x^n), doubled degree."""
    c = [0] * (max2 + 1)
    for j in range(-2 * max2 - 2, 2 * max2 + 4):
        if (j - i) % 2:
            continue
        g = j * (j - 1) // 2
        if g > max2:
            continue
        for extra in range(0, max2 - g + 1, 2):
            c[g + extra] += partition_count(extra // 2)
    return c


def half_odd_partitions(n2, largest=None):
    """Multisets of odd doubled parts summing to n2, each as a descending tuple."""
    if largest is None:
        largest = n2
    if n2 == 0:
        return [()]
    out = []
    for first in range(min(n2, largest), 0, -1):
        if first % 2 == 0:
            continue
        for rest in half_odd_partitions(n2 - first, first):
            out.append((first,) + rest)
    return out


def pbw_rank(gen, i, n2):
    """Rank of {T_{-r_m} ... T_{-r_1} |Lambda_i>} at doubled degree n2."""
    vac = {BasisState((), i): gen.params.one}
    vectors = []
    for parts in half_odd_partitions(n2):
        v = vac
        # r_1 <= ... <= r_m, T_{-r_1} acts first
        for r2 in sorted(parts):
            v = gen.act(-r2, v)
        vectors.append(v)
    basis = principal_block(i, n2)
    index = {st: k for k, st in enumerate(basis)}
    rows = [[gen.params.zero] * len(basis) for _ in vectors]
    for r, v in enumerate(vectors):
        for st, c in v.items():
            rows[r][index[st]] = c
    return bareiss_rank(rows) if rows else 0, len(vectors), len(basis)


def character_checks(params, max_partition=8, gauss2=10, pbw2=5, seed_engine=None):
    """Block dimensions, the Gauss identity and twisted PBW ranks."""
    reports = []
    dims = [len(enumerate_block(0, n)) for n in range(max_partition + 1)]
    reference = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    ok = dims == reference[: max_partition + 1]
    reports.append(CheckReport("characters", "block-dimensions", "characters.partition-count",
                               {"max_degree": max_partition}, "pass" if ok else "fail",
                               None if ok else {"dims": dims}))
    lhs = half_odd_partition_counts(gauss2)
    for i in (0, 1):
        rhs = gauss_rhs_counts(i, gauss2)
        blocks = [len(principal_block(i, n)) for n in range(gauss2 + 1)]
        ok = lhs == rhs == blocks
        reports.append(CheckReport("characters", f"gauss/i={i}", "characters.gauss-identity",
                                   {"max2": gauss2}, "pass" if ok else "fail",
                                   None if ok else {"lhs": lhs, "rhs": rhs, "blocks": blocks}))
    gen = build_T_twisted(seed_engine or params)
    for i in (0, 1):
        bad = None
        for n2 in range(1, pbw2 + 1):
            rank, count, dim = pbw_rank(gen, i, n2)
            if not (rank == count == dim == lhs[n2]):
                bad = {"deg2": n2, "rank": rank, "vectors": count, "dim": dim}
                break
        reports.append(CheckReport("characters", f"pbw-rank/i={i}", "characters.pbw-basis",
                                   {"max2": pbw2, **gen.params.describe()},
                                   "pass" if bad is None else "fail", bad))
    return reports
