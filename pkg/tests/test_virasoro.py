import pytest

from qvirasoro.currents import Engine
from qvirasoro.exact_coefficients import mono
from qvirasoro.fock_space import BasisState, enumerate_block, partition_count, principal_block
from qvirasoro.params import Params
from qvirasoro.virasoro import (
    VirasoroGenerators,
    central_factor,
    character_checks,
    check_highest_weights,
    check_sector_preservation,
    check_twisted_highest,
    check_virasoro_relation,
    gauss_rhs_counts,
    half_odd_partition_counts,
    half_odd_partitions,
    highest_weight,
    nontwisted_sources,
    pbw_rank,
    twisted_sources,
)

SAMPLED = Params("sampled", 7)
ENGINE = Engine(SAMPLED)
NT = VirasoroGenerators(ENGINE, "nontwisted")
TW = VirasoroGenerators(ENGINE, "twisted")
SYM = Params("symbolic")


@pytest.mark.parametrize("j", [-2, -1, 0, 1, 2])
def test_highest_weight_symbolic(j):
    gen = VirasoroGenerators(Engine(SYM), "nontwisted")
    (h,) = check_highest_weights(gen, [j], top=3)
    assert h.ok
    assert h.eigenvalue == highest_weight(SYM, j)


def test_highest_weight_is_symmetric_in_u():
    """lambda is invariant under x -> 1/x with x the u-monomial."""
    lam = highest_weight(SYM, 0)
    x = SYM.mono(mono(iota=1, s=1, u=1))
    assert lam == x + 1 / x


@pytest.mark.parametrize("n2,m2", [(2, -2), (-2, 2), (0, 2), (2, 0), (-4, 2), (4, -4), (0, 0)])
def test_relation_small_window(n2, m2):
    src = nontwisted_sources([0, 1], 2)
    assert check_virasoro_relation(NT, n2, m2, src).status == "pass"


@pytest.mark.parametrize("r2,s2", [(1, -1), (-1, 1), (3, -1), (-3, 3), (1, 1)])
def test_twisted_relation_small_window(r2, s2):
    src = twisted_sources(0, 4) + twisted_sources(1, 4)
    assert check_virasoro_relation(TW, r2, s2, src).status == "pass"


def test_wrong_central_term_is_detected():
    """Dropping the central term leaves a nonzero residual on the vacuum."""
    st = BasisState((), 0)
    res = NT.relation_residual(2, -2, st)
    assert not res
    lhs = NT._side(2, -2, st, 0, 4)
    rhs = NT._side(-2, 2, st, 0, 4)
    diff = {k: lhs.get(k, SAMPLED.zero) - rhs.get(k, SAMPLED.zero) for k in set(lhs) | set(rhs)}
    assert any(not v.is_zero() for v in diff.values())


def test_central_factor_closed_form():
    q1, q2 = SYM.mono(mono(t=2)), SYM.mono(mono(s=-4, t=-2))
    assert central_factor(SYM) * (1 - SYM.mono(mono(s=-4))) == (1 - q1) * (1 - q2)


def test_sector_laws():
    src = nontwisted_sources(range(-1, 2), 2)
    assert check_sector_preservation(NT, src, NT.mode_indices(4)).status == "pass"
    tw = twisted_sources(0, 4) + twisted_sources(1, 4)
    assert check_sector_preservation(TW, tw, TW.mode_indices(3)).status == "pass"


@pytest.mark.parametrize("i", [0, 1])
def test_twisted_highest_weight(i):
    assert check_twisted_highest(TW, i, 7).status == "pass"


def test_modes_respect_grading():
    st = BasisState((2, 1), 0)
    for n2 in NT.mode_indices(6):
        for out in NT.act_state(n2, st):
            assert NT.grade2(out) == NT.grade2(st) - n2


def test_partition_counts():
    assert [len(enumerate_block(0, n)) for n in range(9)] == [partition_count(n) for n in range(9)]
    assert [partition_count(n) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


@pytest.mark.parametrize("i", [0, 1])
def test_gauss_identity(i):
    lhs = half_odd_partition_counts(10)
    assert gauss_rhs_counts(i, 10) == lhs
    assert [len(principal_block(i, n)) for n in range(11)] == lhs


def test_half_odd_partitions_enumeration():
    counts = half_odd_partition_counts(9)
    for n2 in range(10):
        parts = half_odd_partitions(n2)
        assert len(parts) == counts[n2]
        assert all(sum(p) == n2 and all(x % 2 for x in p) for p in parts)


@pytest.mark.parametrize("i", [0, 1])
def test_pbw_rank(i):
    for n2 in range(1, 6):
        rank, count, dim = pbw_rank(TW, i, n2)
        assert rank == count == dim


def test_character_checks_report():
    reports = character_checks(SAMPLED, seed_engine=ENGINE)
    assert all(r.status == "pass" for r in reports)
    assert {r.anchor for r in reports} == {"characters.partition-count", "characters.gauss-identity",
                                           "characters.pbw-basis"}


def test_sources_cover_blocks():
    src = nontwisted_sources([0, 2], 3)
    assert len(src) == 2 * sum(partition_count(d) for d in range(4))
    assert len(twisted_sources(1, 4)) == sum(half_odd_partition_counts(4))
