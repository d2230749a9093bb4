import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvirasoro.errors import InconsistentSystem, SectorMismatch
from qvirasoro.exact_coefficients import GaussianRational, mono
from qvirasoro.fock_space import (
    BasisState,
    FockVector,
    bareiss_rank,
    check_sector,
    contraction,
    enumerate_block,
    heis_annihilate,
    heis_create,
    k_op,
    lattice_shift,
    merge,
    parity_op,
    partition_count,
    partitions,
    principal_block,
    principal_degree2,
    removals,
    solve_linear,
    zero_mode_scale,
)
from qvirasoro.params import Params

SYMBOLIC = Params("symbolic")
SAMPLED = Params("sampled", 3)


def G(x, y=0):
    return GaussianRational(x, y)


def test_partition_counts():
    assert [partition_count(n) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_merge_and_removals():
    assert merge((3, 1), (2, 1)) == (3, 2, 1, 1)
    rem = removals((2, 1, 1))
    assert len(rem) == 6
    by_rest = {r[1]: r for r in rem}
    weight, rest, binom, picked = by_rest[(2,)]
    assert (weight, binom, picked) == (2, 1, ((1, 2),))
    assert by_rest[(2, 1)][2] == 2


def test_principal_grading():
    assert principal_degree2(BasisState((), 2)) == 1
    assert principal_degree2(BasisState((1,), -1)) == 3
    # partitions into distinct parts, by doubled degree
    distinct = [1, 1, 1, 2, 2, 3, 4]
    assert [len(principal_block(0, n)) for n in range(7)] == distinct
    assert [len(principal_block(1, n)) for n in range(7)] == distinct


def test_contraction_is_quantum_integer_ratio():
    p = SYMBOLIC
    assert contraction(1, p) == p.qint(2)
    assert contraction(2, p) == p.qint(4) * p.qint(2) / 2
    assert p.qint(2) == p.q + 1 / p.q


def test_lattice_parity_and_k():
    p = SYMBOLIC
    v = FockVector({BasisState((1,), 1): p.one, BasisState((), 0): p.one})
    shifted = lattice_shift(2, v)
    assert shifted.sectors() == {3, 2}
    assert parity_op(v).coefficient(BasisState((1,), 1)) == -1
    assert k_op(v, p).coefficient(BasisState((1,), 1)) == p.q
    scaled = zero_mode_scale(mono(s=2), v, p, a=1, b=1)
    assert scaled.coefficient(BasisState((1,), 1)) == p.q
    with pytest.raises(SectorMismatch):
        check_sector(v, 0)


def test_bareiss_rank_and_solve():
    rows = [[G(1), G(2), G(3)], [G(2), G(4), G(6)], [G(0), G(1), G(0, 1)]]
    assert bareiss_rank(rows) == 2
    x, null = solve_linear([[G(2), G(1)], [G(1), G(3)]], [G(5), G(10)])
    assert x == [G(1), G(3)] and null == []
    x, null = solve_linear([[G(1), G(1)]], [G(2)])
    assert len(null) == 1
    with pytest.raises(InconsistentSystem):
        solve_linear([[G(1), G(1)], [G(2), G(2)]], [G(1), G(3)])


def _vectors(draw, params, degree):
    basis = enumerate_block(0, degree)
    terms = {}
    for b in basis:
        c = draw(st.integers(-3, 3))
        if c:
            terms[b] = params.one * c
    return FockVector(terms)


@settings(max_examples=25, deadline=None)
@given(st.data(), st.integers(1, 3), st.integers(1, 3), st.integers(0, 3))
def test_heisenberg_commutator(data, n, m, degree):
    """[a_n, a_{-m}] = delta_{nm} [2n][n]/n on random vectors."""
    p = SAMPLED
    v = _vectors(data.draw, p, degree)
    lhs = heis_annihilate(n, heis_create(m, v), p)
    rhs = heis_create(m, heis_annihilate(n, v, p))
    diff = dict(lhs.terms)
    for k, c in rhs.terms.items():
        diff[k] = diff.get(k, p.zero) - c
    expected = {k: c * contraction(n, p) for k, c in v.terms.items()} if n == m else {}
    for k in set(diff) | set(expected):
        assert diff.get(k, p.zero) == expected.get(k, p.zero)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=4), st.lists(st.integers(1, 4), max_size=4))
def test_creation_operators_commute(a, b):
    v = FockVector.basis(BasisState((), 0), G(1))
    x = v
    for n in a + b:
        x = heis_create(n, x)
    y = v
    for n in b + a:
        y = heis_create(n, y)
    assert x.terms == y.terms
