import json

import pytest

from qvirasoro.currents import Engine
from qvirasoro.fock_space import BasisState, enumerate_block
from qvirasoro.params import Params
from qvirasoro.relation_verifier.cli import run_cli
from qvirasoro.relation_verifier.config import ConfigError, SuiteConfig
from qvirasoro.relation_verifier.pi_involution import (
    PiInvolution,
    check_involution,
    check_normalization,
)
from qvirasoro.relation_verifier.relations import (
    interchange_relations,
    normal_ordering_relations,
    phi_alpha_psi_variant,
    phi_r_matrix_relations,
    psi_mixed_relations,
    psi_star_r_matrix_relations,
    relation_residual,
    side_parities,
    special_points,
    window,
)
from qvirasoro.relation_verifier.suites import SUITES, suite_checks

SAMPLED = Params("sampled", 7)
ENGINE = Engine(SAMPLED)


def _first_failure(rel, sectors=(-1, 0, 1), degree=1, bound2=4):
    for j in sectors:
        for d in range(degree + 1):
            for st in enumerate_block(j, d):
                pz, pw = side_parities(ENGINE, rel.expr, st)
                for a2 in window(bound2, pz):
                    for b2 in window(bound2, pw):
                        if relation_residual(ENGINE, rel, st, a2, b2):
                            return st, a2, b2
    return None


@pytest.mark.parametrize("rel", phi_r_matrix_relations(SAMPLED), ids=lambda r: r.name)
def test_phi_exchange(rel):
    assert _first_failure(rel) is None


@pytest.mark.parametrize("rel", psi_star_r_matrix_relations(SAMPLED) + psi_mixed_relations(SAMPLED),
                         ids=lambda r: r.name)
def test_psi_exchange(rel):
    assert _first_failure(rel) is None


def test_alpha_psi_variant_of_phi_relation_fails():
    """Negative control: swapping in alpha_psi breaks the (+,-) relation."""
    assert _first_failure(phi_alpha_psi_variant(SAMPLED)) is not None


def test_delta_terms_are_needed():
    """Without its delta term the (-,+) Phi relation fails at a2 + b2 = -2."""
    rel = next(r for r in phi_r_matrix_relations(SAMPLED) if r.name == "phi-R/(-,+)")
    rel.delta = None
    st, a2, b2 = _first_failure(rel)
    assert a2 + b2 == -2


@pytest.mark.parametrize("rel", normal_ordering_relations(SAMPLED) + interchange_relations(SAMPLED),
                         ids=lambda r: r.name)
def test_interchange(rel):
    assert _first_failure(rel, degree=1) is None


def test_special_point_vacuum():
    for sp in special_points(SAMPLED):
        st = BasisState((), 0)
        terms, cert = ENGINE.specialize(sp.expr, sp.substitute, sp.root, sp.n2, st)
        got = {k: v / sp.divisor for k, v in terms.items()}
        assert got == {st: sp.value}
        assert cert.scanned_to >= (cert.k_max or 0) + cert.guard


def test_pi_normalization_and_involution():
    pi = PiInvolution(ENGINE, 2)
    assert check_normalization(pi) is None
    assert check_involution(pi) is None


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig(suite="nope")
    with pytest.raises(ConfigError):
        SuiteConfig(param_mode="sampled")
    with pytest.raises(ConfigError):
        SuiteConfig(degree=0)


def test_every_check_has_an_anchor():
    cfg = SuiteConfig(param_mode="sampled", seed=7)
    for name in SUITES:
        for c in suite_checks(name, cfg):
            assert c.anchor and "." in c.anchor


def test_cli_usage_errors(capsys):
    assert run_cli(["verify", "--suite", "nope"]) == 2
    assert run_cli(["verify", "--suite", "series", "--param-mode", "sampled"]) == 2
    assert run_cli(["verify", "--degree", "-1"]) == 2
    assert run_cli([]) == 2


def _report(tmp_path, name, *extra):
    out = tmp_path / name
    code = run_cli(["verify", "--suite", "characters", "--param-mode", "sampled", "--seed", "7",
                    "--output", str(out), *extra])
    return code, out.read_bytes()


def test_cli_report_format_and_determinism(tmp_path):
    code, first = _report(tmp_path, "a.ndjson")
    _, second = _report(tmp_path, "b.ndjson")
    assert code == 0
    assert first == second
    lines = [json.loads(x) for x in first.decode().splitlines()]
    *checks, summary = lines
    assert list(checks[0]) == ["suite", "check", "anchor", "params", "status", "witness"]
    assert summary["summary"]["ok"] is True
    assert summary["summary"]["checks"] == len(checks)
    spot = [c for c in checks if c["check"] == "symbolic-spot-check"]
    assert len(spot) == 1 and spot[0]["status"] == "pass"


def test_cli_jobs_do_not_change_report(tmp_path):
    _, serial = _report(tmp_path, "a.ndjson")
    _, pooled = _report(tmp_path, "b.ndjson", "--jobs", "2")
    assert serial == pooled


def test_cli_timings_flag(tmp_path):
    _, text = _report(tmp_path, "t.ndjson", "--timings")
    first = json.loads(text.decode().splitlines()[0])
    assert isinstance(first["wall_time"], float)
