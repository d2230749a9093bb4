"""Acceptance criteria, one test each.

Every test prints one line `[ACCEPT] n <title> .... PASS|FAIL (wall)`.
All exact checks run over the symbolic domain Q(i)(s, t, u) with the
default windows; the PBW rank runs at the seeded generic sample, and
criterion 8 reruns every suite there to compare statuses.
"""

import time
from dataclasses import replace

import mpmath

from qvirasoro.fock_space import partition_count
from qvirasoro.params import Params
from qvirasoro.relation_verifier.config import SUITE_ORDER, SuiteConfig
from qvirasoro.relation_verifier.suites import Context, execute, suite_checks
from qvirasoro.structure_functions import verify_f_beta_identity

SYMBOLIC = SuiteConfig(degree=4, sectors=2, modes=3, order=16, guard=4, product_degree=2,
                       twisted_degree2=6, pi_degree=2)
SAMPLED = replace(SYMBOLIC, param_mode="sampled", seed=7)
SYMBOLIC_TARGET = 15 * 60
SAMPLED_TARGET = 60

LINES = []
REPORTS = {}
_contexts = {}


def _run(cfg, suite, select=lambda name: True):
    ctx = _contexts.get(cfg.param_mode)
    if ctx is None:
        ctx = _contexts[cfg.param_mode] = Context(cfg)
    out = []
    for check in suite_checks(suite, cfg):
        if not select(check.check):
            continue
        key = (cfg.param_mode, suite, check.check)
        if key not in REPORTS:
            REPORTS[key] = execute(check, ctx)
        out.append(REPORTS[key])
    return out


def _failures(reports):
    return [f"{r.suite}:{r.check}:{r.status}" for r in reports if not r.passed]


def _verdict(n, title, ok, t0, note=""):
    head = f"[ACCEPT] {n} {title} "
    line = f"{head:.<58} {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.0f} s){note}"
    LINES.append(line)
    print("\n" + line)


def test_criterion_1_nontwisted_relation():
    t0 = time.perf_counter()
    reports = _run(SYMBOLIC, "virasoro", lambda c: c.startswith("relation/"))
    symbolic_wall = time.perf_counter() - t0
    t1 = time.perf_counter()
    sampled = _run(SAMPLED, "virasoro", lambda c: c.startswith("relation/"))
    sampled_wall = time.perf_counter() - t1
    bad = _failures(reports) + _failures(sampled)
    fast = symbolic_wall <= SYMBOLIC_TARGET and sampled_wall <= SAMPLED_TARGET
    ok = not bad and fast and len(reports) == 49
    _verdict(1, "non-twisted relation (symbolic)", ok, t0,
             f" symbolic {symbolic_wall:.0f} s, sampled {sampled_wall:.1f} s")
    assert not bad, bad
    assert len(reports) == 49
    assert {r.params["sources"] for r in reports} == {3 * sum(partition_count(d) for d in range(5))}
    assert symbolic_wall <= SYMBOLIC_TARGET
    assert sampled_wall <= SAMPLED_TARGET


def test_criterion_2_twisted_relation():
    t0 = time.perf_counter()
    reports = _run(SYMBOLIC, "virasoro-twisted", lambda c: c.startswith("relation/"))
    bad = _failures(reports)
    # r, s in {-5/2, ..., 5/2}
    ok = not bad and len(reports) == 36
    _verdict(2, "twisted relation (symbolic)", ok, t0)
    assert not bad, bad
    assert len(reports) == 36


def test_criterion_3_highest_weights():
    t0 = time.perf_counter()
    nt = _run(SYMBOLIC, "virasoro", lambda c: c.startswith("highest-weight/"))
    tw = _run(SYMBOLIC, "virasoro-twisted", lambda c: c.startswith("highest-weight/"))
    bad = _failures(nt + tw)
    ok = (not bad and len(nt) == 5 and len(tw) == 2
          and all(r.params["annihilated_up_to"] == 3 for r in nt)
          and all(r.params["top2"] == 7 for r in tw))
    _verdict(3, "highest weights", ok, t0)
    assert ok, bad


def test_criterion_4_r_matrix():
    t0 = time.perf_counter()
    reports = _run(SYMBOLIC, "rmatrix-phi") + _run(SYMBOLIC, "rmatrix-psi")
    bad = _failures(reports)
    relations = [r for r in reports if "-R/" in r.check]
    names = {r.check.rsplit("/j=", 1)[0] for r in relations}
    ok = (not bad and {r.params["sector"] for r in relations} == set(range(-2, 3))
          and all(r.params["window2"] == 6 and r.params["max_degree"] == 2 for r in relations)
          and len(names) == 10)
    _verdict(4, "R-matrix relations for Phi and Psi*", ok, t0)
    assert ok, bad


def test_criterion_5_special_points():
    t0 = time.perf_counter()
    reports = _run(SYMBOLIC, "special-points")
    bad = _failures(reports)
    lemmas = [r for r in reports if r.check.startswith("lemma/")]
    ok = not bad and len(reports) == 25 and len(lemmas) == 10
    _verdict(5, "special points and lemmas", ok, t0)
    assert ok, bad


def test_criterion_6_structure_identities():
    t0 = time.perf_counter()
    series = _run(SYMBOLIC, "series")
    gauss = _run(SYMBOLIC, "characters", lambda c: c.startswith("gauss/"))
    direct = verify_f_beta_identity(12, Params("symbolic"))
    numeric = [r for r in series if r.check.startswith("numeric/")]
    bad = _failures(series + gauss)
    ok = (not bad and direct.status == "pass" and len(gauss) == 2
          and all(r.params["max2"] == 10 for r in gauss) and len(numeric) == 2
          and all(r.params["points"] >= 3 for r in numeric)
          and all(mpmath.mpf(r.params["max_residual"]) < mpmath.mpf("1e-30") for r in numeric))
    _verdict(6, "structure identities", ok, t0)
    assert ok, bad


def test_criterion_7_pi_involution():
    t0 = time.perf_counter()
    reports = _run(SYMBOLIC, "pi")
    bad = _failures(reports)
    conj = [r for r in reports if r.check.startswith("conjugation/")]
    ok = (not bad and len(conj) == 8 and all(r.params["comparisons"] > 0 for r in conj)
          and {r.check for r in reports} >= {"normalization", "involution"})
    _verdict(7, "pi involution and conjugation", ok, t0)
    assert ok, bad


def test_criterion_8_consistency_oracles():
    t0 = time.perf_counter()
    definitions = _run(SYMBOLIC, "interchange", lambda c: c.startswith("definition/"))
    oracles = _run(SYMBOLIC, "virasoro",
                   lambda c: c.startswith("regularized-product/") or c == "symbolic-vs-sampled")
    dims = _run(SYMBOLIC, "characters", lambda c: c == "block-dimensions")
    pbw = _run(SAMPLED, "characters", lambda c: c.startswith("pbw-rank/"))
    for suite in SUITE_ORDER:
        _run(SAMPLED, suite)
    overlap = [k[1:] for k in REPORTS if k[0] == "sampled" and ("symbolic",) + k[1:] in REPORTS]
    disagree = [f"{s}:{c}" for s, c in overlap
                if REPORTS[("symbolic", s, c)].status != REPORTS[("sampled", s, c)].status]
    bad = _failures(definitions + oracles + dims + pbw)
    ok = (not bad and not disagree and len(definitions) == 3 and len(pbw) == 2
          and len(overlap) > 100)
    _verdict(8, "consistency oracles", ok, t0, f" {len(overlap)} overlapping checks")
    assert not bad, bad
    assert not disagree, disagree
    assert len(overlap) > 100
    assert ok
