import pytest

from qvirasoro.currents import (
    PHI_MINUS,
    PHI_PLUS,
    PHI_PLUS_ALT,
    PSI_MINUS,
    PSI_MINUS_ALT,
    PSI_STAR_MINUS,
    Engine,
    Product,
    Rescaled,
    block_states,
    multiply_by_series,
    rescale_exp,
    term,
    x_minus,
    x_plus,
)
from qvirasoro.errors import NotStabilized, RatioOrientationMismatch
from qvirasoro.exact_coefficients import mono
from qvirasoro.fock_space import BasisState, FockVector, add_into, pruned
from qvirasoro.params import Params
from qvirasoro.relation_verifier.relations import structure

SAMPLED = Params("sampled", 5)
ENGINE = Engine(SAMPLED)
SYM_ENGINE = Engine(Params("symbolic"))


def _apply(engine, mode, terms):
    return engine.act_terms(mode.spec, mode.k2, terms)


def _commutator(engine, a, b, st):
    one = engine.params.one
    left = _apply(engine, a, _apply(engine, b, {st: one}))
    right = _apply(engine, b, _apply(engine, a, {st: one}))
    return pruned(add_into(dict(left), right, -one))


@pytest.mark.parametrize("j", [-2, -1, 0, 1, 2])
def test_x_plus_x_minus_on_vacuum(j):
    """[x_0^+, x_0^-] = (K - K^-1)/(q - q^-1) with K = q^j on sector j."""
    p = SYM_ENGINE.params
    st = BasisState((), j)
    got = _commutator(SYM_ENGINE, x_plus(0), x_minus(0), st)
    want = pruned({st: p.qint(j) if j >= 0 else -p.qint(-j)})
    assert got == want


def test_x_modes_change_sector_and_degree():
    st = BasisState((1,), 0)
    mode = x_minus(-1)
    out = ENGINE.act_state(mode.spec, mode.k2, st)
    assert out and {k.sector for k in out} == {-2}
    assert ENGINE.out_degree(mode.spec, 0, 1, mode.k2) == {k.degree for k in out}.pop()
    # x_1^- would lower the degree below the ground state
    assert not ENGINE.act_state(x_minus(1).spec, x_minus(1).k2, st)


@pytest.mark.parametrize("a,b", [(PHI_PLUS, PHI_PLUS_ALT), (PSI_MINUS, PSI_MINUS_ALT)])
def test_two_definitions_agree(a, b):
    for st in block_states(range(-1, 2), 2):
        for k2 in range(-4, 5):
            assert ENGINE.act_state(a, k2, st) == ENGINE.act_state(b, k2, st)


def test_structural_rescaling_matches_mode_rescaling():
    root = mono(s=1, t=1)
    direct = rescale_exp(PHI_MINUS, root)
    wrapped = Rescaled(PHI_MINUS, root)
    for st in block_states([0, 1], 2):
        for k2 in range(-5, 6):
            assert ENGINE.act_state(direct, k2, st) == ENGINE.act_state(wrapped, k2, st)


def test_vertex_operator_sector_shift():
    vac = BasisState((), 0)
    for k2 in range(-3, 4):
        for st in ENGINE.act_state(PHI_MINUS, k2, vac):
            assert st.sector == 1


def test_fock_vector_interface():
    vac = FockVector.vacuum(0, SAMPLED.one)
    v = ENGINE.act(PHI_MINUS, ENGINE.z_exponent(PHI_MINUS, 0), vac)
    assert v.coefficient(BasisState((), 1)) == SAMPLED.mono(mono(iota=1, s=3)) ** 0
    assert v.sectors() == {1}


def test_raw_product_does_not_stabilize():
    """Without the beta factor the product has no finite specialization."""
    expr = term(Product(PSI_STAR_MINUS, "w", PHI_MINUS, "z"))
    with pytest.raises(NotStabilized):
        ENGINE.specialize(expr, "w", mono(s=1, t=1), 1, BasisState((), 0), guard=2, slack=2)


def test_regularized_product_stabilizes():
    expr = term(Product(PSI_STAR_MINUS, "w", PHI_MINUS, "z"),
                coef=mono(s=3, t=1), series=structure("beta", "z/w", SAMPLED), z_shift=1)
    terms, cert = ENGINE.specialize(expr, "w", mono(s=1, t=1), 0, BasisState((), 0))
    assert terms
    assert cert.k_min is not None and cert.scanned_to > cert.k_max


def test_series_orientation_is_enforced():
    expr = term(Product(PSI_STAR_MINUS, "w", PHI_MINUS, "z"))
    wrong = structure("beta", "w/z", SAMPLED)
    with pytest.raises(RatioOrientationMismatch):
        multiply_by_series(expr, wrong)
    bad = term(Product(PSI_STAR_MINUS, "w", PHI_MINUS, "z"), series=wrong)
    with pytest.raises(RatioOrientationMismatch):
        ENGINE.twovar_coeff(bad, 0, 0, BasisState((), 0))
