"""Verification suites.

Every suite is an ordered list of independent `Check`s.  A check runs
against a `Context` (one parameter domain with its engine and caches) and
returns (status, witness, params).
"""

import time
from dataclasses import dataclass
from typing import Callable

import mpmath

from ..currents import (
    PHI_PLUS,
    PHI_PLUS_ALT,
    PSI_MINUS,
    PSI_MINUS_ALT,
    PSI_STAR_PLUS,
    PSI_STAR_PLUS_ALT,
    Engine,
    Product,
    block_states,
    phi,
    psi_star,
    term,
)
from ..errors import NotStabilized, PoleAtSample, VerifierError
from ..exact_coefficients import TruncatedSeries, mono, series_mul
from ..fock_space import add_into, enumerate_block, pruned
from ..params import Params
from ..report import CheckReport
from ..structure_functions import (
    DEFAULT_NUMERIC_POINTS,
    build,
    certify_beta_telescoping,
    certify_f_beta_numeric,
    r_matrix,
    r_matrix_inverse,
    verify_f_beta_identity,
)
from ..virasoro import (
    REG_MM,
    REG_MP,
    REG_PM,
    REG_PP,
    REG_PP_ALT,
    VirasoroGenerators,
    character_checks,
    check_highest_weights,
    check_sector_preservation,
    check_twisted_highest,
    check_virasoro_relation,
    nontwisted_sources,
    twisted_sources,
)
from .pi_involution import (
    CONJUGATIONS,
    TRANSPORTS,
    PiInvolution,
    check_conjugation,
    check_intertwining,
    check_involution,
    check_normalization,
    check_transport,
)
from .relations import (
    interchange_relations,
    lemma_identities,
    normal_ordering_relations,
    phi_r_matrix_relations,
    preprocessing_identities,
    psi_mixed_relations,
    psi_star_r_matrix_relations,
    qcomm_identity_residual,
    relation_residual,
    side_parities,
    special_points,
    state_label,
    structure,
    vanishing_commutators,
    window,
)

DEFAULT_SEED = 7
NUMERIC_TOLERANCE = mpmath.mpf("1e-30")
F_NUMERIC_POINTS = (("0.3", "0.7", "0.2"), ("0.45", "1.5", "0.1"), ("-0.2", "0.55", "0.3"))


@dataclass(frozen=True)
class Check:
    suite: str
    check: str
    anchor: str
    run: Callable


class Context:
    """One coefficient domain with its engine and memoized artifacts."""

    def __init__(self, cfg, mode=None):
        self.cfg = cfg
        seed = cfg.seed if cfg.seed is not None else DEFAULT_SEED
        self.params = Params(mode or cfg.param_mode, seed)
        self.engine = Engine(self.params)
        self._memo = {}

    def memo(self, key, builder):
        if key not in self._memo:
            self._memo[key] = builder()
        return self._memo[key]

    def generators(self, variant):
        return self.memo(("gen", variant), lambda: VirasoroGenerators(self.engine, variant))


def execute(check, ctx, timings=False):
    """Run one check, mapping certification failures to report statuses."""
    t0 = time.perf_counter()
    try:
        status, witness, extra = check.run(ctx)
    except NotStabilized as e:
        status, witness, extra = "not-stabilized", {"error": str(e)}, {}
    except PoleAtSample as e:
        status, witness, extra = "pole-at-sample", {"error": str(e)}, {}
    except VerifierError as e:
        status, witness, extra = "fail", {"error": f"{type(e).__name__}: {e}"}, {}
    wall = time.perf_counter() - t0 if timings else None
    return CheckReport(check.suite, check.check, check.anchor,
                       {**extra, **ctx.params.describe()}, status, witness, wall)


def _status(witness):
    return "pass" if witness is None else "fail"


def _signed(st):
    return -1 if st.sector % 2 else 1


# series

def euler_ratio(num_base, den_base, n, params):
    """(a x; p)_inf / (b x; p)_inf from the two Euler expansions, p = q^4."""
    p = params.mono(mono(s=8))
    a = params.mono(num_base)
    b = params.mono(den_base)
    num, den = [params.one], [params.one]
    pp = params.one  # (p; p)_k
    for k in range(1, n + 1):
        pp = pp * (1 - p ** k)
        num.append((-a) ** k * p ** (k * (k - 1) // 2) / pp)
        den.append(b ** k / pp)
    return series_mul(TruncatedSeries(num), TruncatedSeries(den))


STRUCTURE_BASES = {
    "alpha_phi": (mono(s=8), mono(s=4)),
    "alpha_psi": (mono(s=4), mono()),
    "beta": (mono(s=2), mono(s=6)),
}


def series_checks(cfg):
    n = max(12, cfg.order)
    checks = [Check("series", f"f-via-beta/N={n}", "structure.f-via-beta",
                    lambda ctx: _f_beta(ctx, n))]
    for name in STRUCTURE_BASES:
        checks.append(Check("series", f"euler-oracle/{name}", "structure.pochhammer-ratios",
                            lambda ctx, name=name: _euler(ctx, name, cfg.order)))
    checks.append(Check("series", "r-matrix-inverse", "rmatrix.inverse",
                        lambda ctx: _r_inverse(ctx, cfg.order)))
    checks.append(Check("series", "numeric/beta-telescoping", "structure.beta-telescoping",
                        lambda ctx: _numeric(certify_beta_telescoping(DEFAULT_NUMERIC_POINTS),
                                             DEFAULT_NUMERIC_POINTS)))
    checks.append(Check("series", "numeric/f-via-beta", "structure.f-via-beta",
                        lambda ctx: _numeric(certify_f_beta_numeric(F_NUMERIC_POINTS),
                                             F_NUMERIC_POINTS)))
    return checks


def _f_beta(ctx, n):
    r = verify_f_beta_identity(n, ctx.params)
    return r.status, r.witness, {"order": n}


def _euler(ctx, name, n):
    got = build(name, n, ctx.params).series
    want = euler_ratio(*STRUCTURE_BASES[name], n, ctx.params)
    for k in range(n + 1):
        if got.coeffs[k] != want.coeffs[k]:
            return "fail", {"order": k, "log_exp": str(got.coeffs[k]),
                            "euler": str(want.coeffs[k])}, {"order": n}
    return "pass", None, {"order": n}


def _r_inverse(ctx, n):
    """R(x) R^-1(x) = 1 as power series through x^n."""
    p = ctx.params
    r, rinv = r_matrix(p), r_matrix_inverse(p)
    basis = [(a, b) for a in "+-" for b in "+-"]
    for row in basis:
        for col in basis:
            acc = [p.zero] * (n + 1)
            for mid in basis:
                f, g = r.get((row, mid)), rinv.get((mid, col))
                if f is None or g is None:
                    continue
                prod = series_mul(f.series(n, "x"), g.series(n, "x"))
                acc = [x + y for x, y in zip(acc, prod.coeffs)]
            want = [p.one if row == col else p.zero] + [p.zero] * n
            if acc != want:
                return "fail", {"row": "".join(row), "col": "".join(col)}, {"order": n}
    return "pass", None, {"order": n}


def _numeric(residuals, points):
    worst = max(residuals)
    ok = worst < NUMERIC_TOLERANCE and len(points) >= 3
    return ("pass" if ok else "fail",
            None if ok else {"max_residual": mpmath.nstr(worst, 5)},
            {"points": len(points), "tolerance": "1e-30", "max_residual": mpmath.nstr(worst, 3)})


# characters

CHARACTER_IDS = (
    ("block-dimensions", "characters.partition-count"),
    ("gauss/i=0", "characters.gauss-identity"),
    ("gauss/i=1", "characters.gauss-identity"),
    ("pbw-rank/i=0", "characters.pbw-basis"),
    ("pbw-rank/i=1", "characters.pbw-basis"),
)


def character_suite(cfg):
    def run(ctx, idx):
        reps = ctx.memo("characters", lambda: character_checks(ctx.params, 8, 10, 5, ctx.engine))
        r = reps[idx]
        extra = {k: v for k, v in r.params.items() if k not in ("mode", "seed", "s", "t", "u")}
        return r.status, r.witness, extra
    return [Check("characters", name, anchor, lambda ctx, i=i: run(ctx, i))
            for i, (name, anchor) in enumerate(CHARACTER_IDS)]


# two-variable relations

def _sources(cfg, j):
    return [st for d in range(cfg.product_degree + 1) for st in enumerate_block(j, d)]


def _relation_outcome(ctx, rel, sources, bound2, residual=relation_residual):
    engine = ctx.engine
    witness = None
    count = 0
    for st in sources:
        pz, pw = side_parities(engine, rel.expr, st)
        for a2 in window(bound2, pz):
            for b2 in window(bound2, pw):
                count += 1
                r = residual(engine, rel, st, a2, b2)
                if r and witness is None:
                    k, v = sorted(r.items())[0]
                    witness = {"source": state_label(st), "z2": a2, "w2": b2,
                               "state": state_label(k), "value": str(v)}
    return witness, count


def _relation_checks(suite, cfg, key, factory, residual=relation_residual):
    """One check per relation and sector; relations are built per context."""
    names = [(r.name, r.anchor) for r in factory(Params("sampled", DEFAULT_SEED))]
    checks = []
    for idx, (name, anchor) in enumerate(names):
        for j in range(-cfg.sectors, cfg.sectors + 1):
            def run(ctx, idx=idx, j=j):
                rel = ctx.memo(key, lambda: factory(ctx.params))[idx]
                w, n = _relation_outcome(ctx, rel, _sources(cfg, j), 2 * cfg.modes, residual)
                return _status(w), w, {"sector": j, "max_degree": cfg.product_degree,
                                       "window2": 2 * cfg.modes, "coefficients": n}
            checks.append(Check(suite, f"{name}/j={j}", anchor, run))
    return checks


def _preprocessing(params):
    return preprocessing_identities()


def rmatrix_phi_suite(cfg):
    pre = lambda p: [i for i in _preprocessing(p) if i.name.startswith("phi")]
    return (_relation_checks("rmatrix-phi", cfg, "phi-R", phi_r_matrix_relations)
            + _relation_checks("rmatrix-phi", cfg, "phi-pre", pre, qcomm_identity_residual))


def rmatrix_psi_suite(cfg):
    pre = lambda p: [i for i in _preprocessing(p) if i.name.startswith("psi")]
    return (_relation_checks("rmatrix-psi", cfg, "psi*-R", psi_star_r_matrix_relations)
            + _relation_checks("rmatrix-psi", cfg, "psi-R", psi_mixed_relations)
            + _relation_checks("rmatrix-psi", cfg, "psi-pre", pre, qcomm_identity_residual))


# special points

def special_point_suite(cfg):
    checks = []
    names = [(sp.name, sp.anchor) for sp in special_points(Params("sampled", DEFAULT_SEED))]
    for idx, (name, anchor) in enumerate(names):
        for j in range(-cfg.sectors, cfg.sectors + 1):
            checks.append(Check("special-points", f"{name}/j={j}", anchor,
                                lambda ctx, idx=idx, j=j: _special(ctx, cfg, idx, j)))
    for idx, (name, anchor, *_rest) in enumerate(lemma_identities(Params("sampled", DEFAULT_SEED))):
        for j in range(-cfg.sectors, cfg.sectors + 1):
            checks.append(Check("special-points", f"{name}/j={j}", anchor,
                                lambda ctx, idx=idx, j=j: _lemma(ctx, cfg, idx, j)))
    return checks


def _special(ctx, cfg, idx, j):
    sp = ctx.memo("special", lambda: special_points(ctx.params))[idx]
    engine, p = ctx.engine, ctx.params
    witness = None
    count = 0
    certificates = []
    for st in _sources(cfg, j):
        pz, pw = side_parities(engine, sp.expr, st)
        for n2 in window(2 * cfg.modes, (pz + pw) % 2):
            terms, cert = engine.specialize(sp.expr, sp.substitute, sp.root, n2, st, cfg.guard)
            count += 1
            certificates.append(cert.scanned_to - (cert.k_max if cert.k_max is not None else 0))
            r = {k: v / sp.divisor for k, v in terms.items()}
            if n2 == sp.n2:
                add_into(r, {st: sp.value * _signed(st)}, -p.one)
            r = pruned(r)
            if r and witness is None:
                k, v = sorted(r.items())[0]
                witness = {"source": state_label(st), "n2": n2, "state": state_label(k),
                           "value": str(v)}
    return _status(witness), witness, {"sector": j, "max_degree": cfg.product_degree,
                                       "window2": 2 * cfg.modes, "coefficients": count,
                                       "guard": cfg.guard}


def _lemma(ctx, cfg, idx, j):
    name, anchor, spec, k2_expected, value = lemma_identities(ctx.params)[idx]
    engine, p = ctx.engine, ctx.params
    witness = None
    for st in _sources(cfg, j):
        for k2 in range(-2 * cfg.modes - 2, 2 * cfg.modes + 3):
            r = dict(engine.act_state(spec, k2, st))
            if k2 == k2_expected:
                add_into(r, {st: value * _signed(st)}, -p.one)
            r = pruned(r)
            if r and witness is None:
                k, v = sorted(r.items())[0]
                witness = {"source": state_label(st), "mode2": k2, "state": state_label(k),
                           "value": str(v)}
    return _status(witness), witness, {"sector": j, "max_degree": cfg.product_degree}


# interchange

DEFINITION_PAIRS = (
    ("definition/phi+", PHI_PLUS, PHI_PLUS_ALT),
    ("definition/psi-", PSI_MINUS, PSI_MINUS_ALT),
    ("definition/psi*+", PSI_STAR_PLUS, PSI_STAR_PLUS_ALT),
)


def interchange_suite(cfg):
    checks = (_relation_checks("interchange", cfg, "no", normal_ordering_relations)
              + _relation_checks("interchange", cfg, "ic", interchange_relations))
    for idx, (name, anchor, _spec) in enumerate(vanishing_commutators()):
        for j in range(-cfg.sectors, cfg.sectors + 1):
            checks.append(Check("interchange", f"{name}/j={j}", anchor,
                                lambda ctx, idx=idx, j=j: _vanishing(ctx, cfg, idx, j)))
    for name, a, b in DEFINITION_PAIRS:
        checks.append(Check("interchange", name, "currents.two-definitions",
                            lambda ctx, a=a, b=b: _same_current(ctx, cfg, a, b)))
    return checks


def _vanishing(ctx, cfg, idx, j):
    spec = vanishing_commutators()[idx][2]
    for st in _sources(cfg, j):
        for k2 in range(-2 * cfg.modes - 2, 2 * cfg.modes + 3):
            r = ctx.engine.act_state(spec, k2, st)
            if r:
                k, v = sorted(r.items())[0]
                return "fail", {"source": state_label(st), "mode2": k2,
                                "state": state_label(k), "value": str(v)}, {"sector": j}
    return "pass", None, {"sector": j, "max_degree": cfg.product_degree}


def _same_current(ctx, cfg, a, b):
    engine = ctx.engine
    count = 0
    for st in block_states(range(-cfg.sectors, cfg.sectors + 1), cfg.degree):
        for k2 in range(-2 * cfg.modes - 2, 2 * cfg.modes + 3):
            x, y = engine.act_state(a, k2, st), engine.act_state(b, k2, st)
            count += 1
            if x != y:
                return "fail", {"source": state_label(st), "mode2": k2}, {}
    return "pass", None, {"max_degree": cfg.degree, "pairs": count}


# pi involution

def pi_suite(cfg):
    def involution(ctx):
        return ctx.memo("pi", lambda: PiInvolution(ctx.engine, cfg.pi_degree))

    extra = {"max_degree": cfg.pi_degree}

    def norm(ctx):
        w = check_normalization(involution(ctx))
        return _status(w), w, extra

    def square(ctx):
        w = check_involution(involution(ctx))
        return _status(w), w, extra

    def intertwine(ctx, name):
        res = ctx.memo("pi-intertwine", lambda: check_intertwining(involution(ctx), ctx.engine))
        return _status(res[name]), res[name], extra

    def conj(ctx, name, i):
        w, n = check_conjugation(involution(ctx), ctx.engine, name, i, 2 * cfg.modes + 6)
        return _status(w), w, {**extra, "i": i, "comparisons": n}

    def transport(ctx, name):
        w, n = check_transport(involution(ctx), ctx.engine, name, 2 * cfg.modes)
        return _status(w), w, {**extra, "window2": 2 * cfg.modes, "comparisons": n}

    checks = [Check("pi", "normalization", "pi.normalization", norm),
              Check("pi", "involution", "pi.involution", square)]
    for name in ("K", "x0+", "x0-", "x1-", "x-1+"):
        checks.append(Check("pi", f"intertwine/{name}", "pi.drinfeld-action",
                            lambda ctx, name=name: intertwine(ctx, name)))
    for name, *_ in CONJUGATIONS:
        for i in (0, 1):
            checks.append(Check("pi", f"conjugation/{name}/i={i}", "pi.conjugation",
                                lambda ctx, name=name, i=i: conj(ctx, name, i)))
    for name, *_ in TRANSPORTS:
        checks.append(Check("pi", f"transport/{name}", "pi.interchange-transport",
                            lambda ctx, name=name: transport(ctx, name)))
    return checks


# virasoro

REG_ROUTES = (("-", "-", REG_MM), ("-", "+", REG_MP), ("+", "-", REG_PM), ("+", "+", REG_PP))


def reg_product(params, e_psi, e_phi):
    """s^3 t z^(1/2) beta(z/w) Psi*_e(w) Phi_e'(z), to be set at w = q q1 z."""
    return term(Product(psi_star(1 if e_psi == "+" else -1), "w",
                        phi(1 if e_phi == "+" else -1), "z"),
                coef=mono(s=3, t=1), series=structure("beta", "z/w", params), z_shift=1)


def virasoro_suite(cfg):
    sectors = list(range(0, cfg.sectors + 1))
    checks = []
    bound2 = 2 * cfg.modes
    for n2 in range(-bound2, bound2 + 1, 2):
        for m2 in range(-bound2, bound2 + 1, 2):
            def run(ctx, n2=n2, m2=m2):
                gen = ctx.generators("nontwisted")
                src = ctx.memo("nt-sources", lambda: nontwisted_sources(sectors, cfg.degree))
                r = check_virasoro_relation(gen, n2, m2, src, cfg.guard)
                return r.status, r.witness, {"n": n2 // 2, "m": m2 // 2, "sectors": sectors,
                                             "max_degree": cfg.degree, "sources": len(src)}
            checks.append(Check("virasoro", f"relation/n={n2 // 2},m={m2 // 2}",
                                "virasoro.defining-relation", run))
    for j in range(-cfg.sectors, cfg.sectors + 1):
        def hw(ctx, j=j):
            h = check_highest_weights(ctx.generators("nontwisted"), [j], cfg.modes)[0]
            w = None if h.ok else {"eigenvalue": str(h.eigenvalue), "expected": str(h.expected)}
            return _status(w), w, {"sector": j, "annihilated_up_to": cfg.modes}
        checks.append(Check("virasoro", f"highest-weight/j={j}", "virasoro.highest-weight", hw))

    def law(ctx):
        gen = ctx.generators("nontwisted")
        r = check_sector_preservation(gen, nontwisted_sources(range(-cfg.sectors, cfg.sectors + 1),
                                                              cfg.product_degree),
                                      gen.mode_indices(bound2))
        return r.status, r.witness, {"max_degree": cfg.product_degree}
    checks.append(Check("virasoro", "sector-law", "virasoro.sector-law", law))

    for e_psi, e_phi, spec in REG_ROUTES:
        checks.append(Check("virasoro", f"regularized-product/({e_psi},{e_phi})",
                            "virasoro.regularized-product",
                            lambda ctx, a=e_psi, b=e_phi, spec=spec: _reg_route(ctx, cfg, a, b, spec)))
    checks.append(Check("virasoro", "regularized-product/(+,+)/two-routes",
                        "virasoro.regularized-product",
                        lambda ctx: _two_specs(ctx, cfg, REG_PP, REG_PP_ALT)))
    checks.append(Check("virasoro", "symbolic-vs-sampled", "consistency.symbolic-vs-sampled",
                        lambda ctx: _symbolic_vs_sampled(ctx, cfg)))
    return checks


def _reg_route(ctx, cfg, e_psi, e_phi, spec):
    engine = ctx.engine
    expr = ctx.memo(("reg", e_psi, e_phi), lambda: reg_product(ctx.params, e_psi, e_phi))
    root = mono(s=1, t=1)
    count = 0
    for st in block_states(range(-cfg.sectors, cfg.sectors + 1), cfg.product_degree):
        parity = engine.exponent_parity(spec, st.sector)
        for n2 in window(2 * cfg.modes, parity):
            got, _cert = engine.specialize(expr, "w", root, n2, st, cfg.guard)
            want = engine.act_state(spec, n2, st)
            count += 1
            if pruned(dict(got)) != pruned(dict(want)):
                return "fail", {"source": state_label(st), "mode2": n2}, {}
    return "pass", None, {"max_degree": cfg.product_degree, "window2": 2 * cfg.modes,
                          "comparisons": count}


def _two_specs(ctx, cfg, a, b):
    engine = ctx.engine
    for st in block_states(range(-cfg.sectors, cfg.sectors + 1), cfg.degree):
        for k2 in range(-2 * cfg.modes, 2 * cfg.modes + 1):
            if engine.act_state(a, k2, st) != engine.act_state(b, k2, st):
                return "fail", {"source": state_label(st), "mode2": k2}, {}
    return "pass", None, {"max_degree": cfg.degree}


def _symbolic_vs_sampled(ctx, cfg):
    """T_n matrix entries: symbolic values evaluated at the sample equal the
    entries computed directly over the sampled rationals."""
    seed = cfg.seed if cfg.seed is not None else DEFAULT_SEED
    gens = {}
    for p in (Params("symbolic"), Params("sampled", seed)):
        same = p.describe() == ctx.params.describe()
        gens[p.mode] = VirasoroGenerators(ctx.engine if same else Engine(p), "nontwisted")
    sample = gens["sampled"].params.sample
    count = 0
    for st in nontwisted_sources(range(0, cfg.sectors + 1), cfg.product_degree):
        for n2 in range(-2 * cfg.modes, 2 * cfg.modes + 1, 2):
            a = gens["symbolic"].act_state(n2, st)
            b = gens["sampled"].act_state(n2, st)
            lifted = pruned({k: v.evaluate(sample) for k, v in a.items()})
            count += len(set(lifted) | set(b))
            if lifted != pruned(dict(b)):
                return "fail", {"source": state_label(st), "mode2": n2}, {}
    return "pass", None, {"seed": seed, "entries": count}


def twisted_suite(cfg):
    checks = []
    bound2 = 2 * cfg.modes - 1
    for r2 in range(-bound2, bound2 + 1, 2):
        for s2 in range(-bound2, bound2 + 1, 2):
            def run(ctx, r2=r2, s2=s2):
                gen = ctx.generators("twisted")
                src = ctx.memo("tw-sources", lambda: twisted_sources(0, cfg.twisted_degree2)
                               + twisted_sources(1, cfg.twisted_degree2))
                r = check_virasoro_relation(gen, r2, s2, src, cfg.guard)
                return r.status, r.witness, {"r2": r2, "s2": s2, "max_degree2": cfg.twisted_degree2,
                                             "sources": len(src)}
            checks.append(Check("virasoro-twisted", f"relation/r={r2}/2,s={s2}/2",
                                "virasoro.twisted-defining-relation", run))
    for i in (0, 1):
        def hw(ctx, i=i):
            r = check_twisted_highest(ctx.generators("twisted"), i, 2 * cfg.modes + 1)
            return r.status, r.witness, {"i": i, "top2": 2 * cfg.modes + 1}
        checks.append(Check("virasoro-twisted", f"highest-weight/i={i}",
                            "virasoro.twisted-highest-weight", hw))

    def law(ctx):
        gen = ctx.generators("twisted")
        src = twisted_sources(0, cfg.twisted_degree2) + twisted_sources(1, cfg.twisted_degree2)
        r = check_sector_preservation(gen, src, gen.mode_indices(bound2))
        return r.status, r.witness, {"max_degree2": cfg.twisted_degree2}
    checks.append(Check("virasoro-twisted", "sector-law", "virasoro.twisted-sector-law", law))
    return checks


SUITES = {
    "series": series_checks,
    "characters": character_suite,
    "rmatrix-phi": rmatrix_phi_suite,
    "rmatrix-psi": rmatrix_psi_suite,
    "special-points": special_point_suite,
    "interchange": interchange_suite,
    "pi": pi_suite,
    "virasoro": virasoro_suite,
    "virasoro-twisted": twisted_suite,
}


def suite_checks(name, cfg):
    return SUITES[name](cfg)
