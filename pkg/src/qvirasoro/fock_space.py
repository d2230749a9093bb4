"""Sparse Fock space of one deformed Heisenberg boson tensored with the
half-lattice group algebra.

A basis state a_{-lambda_1} ... a_{-lambda_r} |j> is indexed by a
partition (descending tuple) and a sector j, where e^(alpha/2) shifts
j -> j + 1.  Vectors are sparse dicts over any exact coefficient domain.
"""

from functools import lru_cache
from itertools import product
from math import comb
from typing import NamedTuple

from .errors import InconsistentSystem, SectorMismatch


class BasisState(NamedTuple):
    partition: tuple
    sector: int

    @property
    def degree(self):
        return sum(self.partition)


@lru_cache(maxsize=None)
def partitions(n):
    """Partitions of n as descending tuples, in lexicographically descending order."""
    if n == 0:
        return ((),)
    return tuple(_partitions(n, n))


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partition_count(n):
    return len(partitions(n))


_MERGE = {}


def merge(a, b):
    """Union of two partitions as multisets."""
    if not a:
        return b
    if not b:
        return a
    key = (a, b)
    r = _MERGE.get(key)
    if r is None:
        r = tuple(sorted(a + b, reverse=True))
        _MERGE[key] = r
    return r


@lru_cache(maxsize=None)
def multiplicities(lam):
    out = {}
    for part in lam:
        out[part] = out.get(part, 0) + 1
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def removals(lam):
    """All sub-multisets of lam: tuples (removed weight, remaining partition,
    binomial multiplier, ((n, k_n), ...))."""
    mult = multiplicities(lam)
    out = []
    for ks in product(*(range(m + 1) for _, m in mult)):
        weight = 0
        binom = 1
        rest = []
        picked = []
        for (n, m), k in zip(mult, ks):
            weight += n * k
            binom *= comb(m, k)
            rest.extend([n] * (m - k))
            if k:
                picked.append((n, k))
        rest.sort(reverse=True)
        out.append((weight, tuple(rest), binom, tuple(picked)))
    return tuple(out)


def enumerate_block(sector, degree):
    """Basis of the (sector, heisenberg degree) block, partitions in descending order."""
    return [BasisState(p, sector) for p in partitions(degree)]


def principal_degree2(state):
    """Twice the principal degree |lambda| + j(j-1)/4."""
    j = state.sector
    return 2 * sum(state.partition) + j * (j - 1) // 2


def sectors_for_principal(i, deg2):
    """Sectors j of parity i that can hold states of doubled principal degree <= deg2."""
    out = []
    j = i
    # j(j-1)/2 grows quadratically; scan a generous symmetric range
    for j in range(-2 * deg2 - 2, 2 * deg2 + 4):
        if j % 2 == i % 2 and j * (j - 1) // 2 <= deg2:
            out.append(j)
    return out


def principal_block(i, deg2):
    """Basis states of V(Lambda_i) with doubled principal degree exactly deg2."""
    out = []
    for j in sectors_for_principal(i, deg2):
        rest = deg2 - j * (j - 1) // 2
        if rest >= 0 and rest % 2 == 0:
            out.extend(enumerate_block(j, rest // 2))
    return out


class FockVector:
    """Finite linear combination of basis states."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {} if terms is None else terms

    @classmethod
    def basis(cls, state, one):
        return cls({BasisState(*state): one})

    @classmethod
    def vacuum(cls, sector, one):
        return cls({BasisState((), sector): one})

    def copy(self):
        return FockVector(dict(self.terms))

    def is_zero(self):
        return all(c.is_zero() for c in self.terms.values())

    def prune(self):
        return FockVector({k: c for k, c in self.terms.items() if not c.is_zero()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            if k in out:
                out[k] = out[k] + c
            else:
                out[k] = c
        return FockVector(out).prune()

    def __neg__(self):
        return FockVector({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return FockVector({k: c * v for k, v in self.terms.items()}).prune()

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, FockVector) and (self - other).is_zero()

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def sectors(self):
        return {k.sector for k in self.terms}

    def coefficient(self, state):
        return self.terms.get(BasisState(*state))

    def __repr__(self):
        inner = ", ".join(f"{c}*|{k.partition},{k.sector}>" for k, c in self)
        return f"FockVector({inner})"


def add_into(acc, terms, scale=None):
    """acc += scale * terms for plain dict vectors."""
    for k, c in terms.items():
        if scale is not None:
            c = scale * c
        if k in acc:
            acc[k] = acc[k] + c
        else:
            acc[k] = c
    return acc


def pruned(terms):
    return {k: c for k, c in terms.items() if not c.is_zero()}


def heis_create(n, vec):
    """a_{-n} for n >= 1."""
    out = {}
    for st, c in vec.terms.items():
        key = BasisState(merge(st.partition, (n,)), st.sector)
        out[key] = out[key] + c if key in out else c
    return FockVector(out).prune()


def contraction(n, params):
    """[a_n, a_{-n}] = [2n][n]/n."""
    return params.qint(2 * n) * params.qint(n) / n


def heis_annihilate(n, vec, params):
    """a_n for n >= 1, acting as contraction(n) * d/dx_n."""
    kappa = contraction(n, params)
    out = {}
    for st, c in vec.terms.items():
        m = st.partition.count(n)
        if not m:
            continue
        rest = list(st.partition)
        rest.remove(n)
        key = BasisState(tuple(rest), st.sector)
        val = c * kappa * m
        out[key] = out[key] + val if key in out else val
    return FockVector(out).prune()


def lattice_shift(halfsteps, vec):
    """e^(halfsteps * alpha / 2)."""
    return FockVector({BasisState(k.partition, k.sector + halfsteps): c
                       for k, c in vec.terms.items()})


def parity_op(vec):
    """(-1)^d on sector j gives (-1)^j."""
    return FockVector({k: (-c if k.sector % 2 else c) for k, c in vec.terms.items()})


def zero_mode_scale(base, vec, params, a=1, b=0):
    """base^((a*d + b)/2) with base a Monomial whose canonical root is used."""
    root = base.sqrt()
    return FockVector({k: c * params.mono(root ** (a * k.sector + b))
                       for k, c in vec.terms.items()}).prune()


def k_op(vec, params, power=1):
    """K^power, acting on sector j as q^(power * j)."""
    return FockVector({k: c * params.qpow(2 * power * k.sector)
                       for k, c in vec.terms.items()}).prune()


def check_sector(vec, sector):
    bad = vec.sectors() - {sector}
    if bad:
        raise SectorMismatch(f"vector has sectors {sorted(bad)}, expected {sector}")


# linear algebra over an exact field


class BlockMatrix:
    """Matrix of an operator from one ordered basis to another.

    rows[r][c] is the coefficient of target[r] in op(source[c]).
    """

    def __init__(self, source, target, rows):
        self.source = list(source)
        self.target = list(target)
        self.rows = rows

    @classmethod
    def of_operator(cls, op, source, target, zero):
        index = {st: r for r, st in enumerate(target)}
        rows = [[zero] * len(source) for _ in target]
        for c, st in enumerate(source):
            image = op(st)
            for k, v in image.terms.items():
                if k not in index:
                    if v.is_zero():
                        continue
                    raise SectorMismatch(f"image leaves target block at {k}")
                rows[index[k]][c] = v
        return cls(source, target, rows)

    def is_zero(self):
        return all(v.is_zero() for row in self.rows for v in row)


def bareiss_rank(rows):
    """Rank via fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = None
    for col in range(nc):
        pivot = next((r for r in range(rank, nr) if not m[r][col].is_zero()), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nr):
            f = m[r][col]
            for c in range(col, nc):
                v = p * m[r][c] - f * m[rank][c]
                m[r][c] = v if prev is None else v / prev
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def solve_linear(a, b):
    """Solve a x = b by fraction-free elimination.

    a is a list of rows, b a list of right-hand sides.  Returns
    (particular solution, basis of the null space).  Raises
    InconsistentSystem if there is no solution.
    """
    nr = len(a)
    nc = len(a[0]) if nr else 0
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    pivots = []
    rank = 0
    prev = None
    for col in range(nc):
        pivot = next((r for r in range(rank, nr) if not m[r][col].is_zero()), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(nr):
            if r == rank:
                continue
            f = m[r][col]
            if f.is_zero() and prev is None:
                continue
            for c in range(nc + 1):
                v = p * m[r][c] - f * m[rank][c]
                m[r][c] = v if prev is None else v / prev
        prev = p
        pivots.append(col)
        rank += 1
    for r in range(rank, nr):
        if not m[r][nc].is_zero():
            raise InconsistentSystem("right-hand side is not in the column span")
    zero = b[0] * 0 if b else None
    x = [zero] * nc
    for r, col in enumerate(pivots):
        x[col] = m[r][nc] / m[r][col]
    free = [c for c in range(nc) if c not in pivots]
    null = []
    for fc in free:
        v = [zero] * nc
        v[fc] = zero + 1
        for r, col in enumerate(pivots):
            v[col] = -m[r][fc] / m[r][col]
        null.append(v)
    return x, null
