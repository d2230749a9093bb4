"""The involution pi~ between V(Lambda_0) and V(Lambda_1).

pi swaps the Chevalley generators f_1 = x_0^- and f_0 = K x_{-1}^+.  Every
vector of V(Lambda_i) is a combination of f-words applied to |i>, and
pi~(w |i>) = pi(w) |1-i>, so pi~ is solved block by block from pairs
(w|i>, pi(w)|1-i>).
"""

from ..currents import (
    PHI_MINUS,
    PHI_PLUS,
    PSI_MINUS,
    PSI_PLUS,
    PSI_STAR_MINUS,
    PSI_STAR_PLUS,
    Product,
    x_minus,
    x_plus,
)
from ..errors import UnderdeterminedSystem
from ..exact_coefficients import mono
from ..fock_space import (
    BasisState,
    add_into,
    bareiss_rank,
    enumerate_block,
    pruned,
    solve_linear,
)


def k_apply(terms, params, power=1):
    return {k: params.qpow(2 * power * k.sector) * v for k, v in terms.items()}


class ChevalleyOps:
    """Generators and their pi-images as maps on sparse dict vectors."""

    def __init__(self, engine):
        self.engine = engine
        self.p = engine.params

    def mode(self, m, terms):
        return self.engine.act_terms(m.spec, m.k2, terms)

    def f1(self, terms):
        return self.mode(x_minus(0), terms)

    def f0(self, terms):
        return k_apply(self.mode(x_plus(-1), terms), self.p)

    def generators(self):
        """(name, x, pi(x)) triples for K and the four Drinfeld modes."""
        p = self.p
        q = p.q
        return [
            ("K", lambda v: k_apply(v, p), lambda v: {k: q * c for k, c in k_apply(v, p, -1).items()}),
            ("x0+", lambda v: self.mode(x_plus(0), v),
             lambda v: self.mode(x_minus(1), k_apply(v, p, -1))),
            ("x0-", lambda v: self.mode(x_minus(0), v),
             lambda v: k_apply(self.mode(x_plus(-1), v), p)),
            ("x1-", lambda v: self.mode(x_minus(1), v),
             lambda v: {k: q * c for k, c in self.mode(x_plus(0), k_apply(v, p, -1)).items()}),
            ("x-1+", lambda v: self.mode(x_plus(-1), v),
             lambda v: {k: c / q for k, c in k_apply(self.mode(x_minus(0), v), p).items()}),
        ]


def block_of(terms):
    keys = list(terms)
    j = keys[0].sector
    d = sum(keys[0].partition)
    return (j, d)


class PiInvolution:
    """Blockwise matrices of pi~ for sectors in [lo, 1 - lo], degree <= max_degree."""

    def __init__(self, engine, max_degree=2, lo=-2):
        self.engine = engine
        self.params = engine.params
        self.max_degree = max_degree
        self.sectors = list(range(lo, 2 - lo))
        self.blocks = {}
        self._build()

    def in_range(self, j, d):
        return j in self.sectors and 0 <= d <= self.max_degree

    def _build(self):
        ops = ChevalleyOps(self.engine)
        one = self.params.one
        pairs = {}
        frontier = []
        for i in (0, 1):
            v = {BasisState((), i): one}
            w = {BasisState((), 1 - i): one}
            pairs[(i, 0)] = [(v, w)]
            frontier.append((v, w))
        max_len = max(2 * d + j * (j - 1) // 2 for j in self.sectors for d in range(self.max_degree + 1))
        for _ in range(max_len):
            nxt = []
            for v, w in frontier:
                for op, partner in ((ops.f1, ops.f0), (ops.f0, ops.f1)):
                    a = pruned(op(v))
                    if not a:
                        continue
                    b = pruned(partner(w))
                    blk = block_of(a)
                    if blk[1] > self.max_degree + 2:
                        continue
                    have = pairs.setdefault(blk, [])
                    dim = len(enumerate_block(*blk))
                    if len(have) >= dim:
                        continue
                    basis = enumerate_block(*blk)
                    rows = [[x.get(st, self.params.zero) for st in basis] for x, _ in have + [(a, b)]]
                    if bareiss_rank(rows) == len(have) + 1:
                        have.append((a, b))
                        nxt.append((a, b))
            frontier = nxt
            if not frontier:
                break
        for j in self.sectors:
            for d in range(self.max_degree + 1):
                have = pairs.get((j, d), [])
                source = enumerate_block(j, d)
                target = enumerate_block(1 - j, d)
                if len(have) < len(source):
                    raise UnderdeterminedSystem(f"block {(j, d)} spanned by {len(have)} of {len(source)}")
                self.blocks[(j, d)] = self._solve(have, source, target)

    def _solve(self, pairs, source, target):
        zero = self.params.zero
        # columns: coordinates of the spanning vectors
        v_t = [[x.get(st, zero) for st in source] for x, _ in pairs]
        matrix = []
        for tst in target:
            rhs = [y.get(tst, zero) for _, y in pairs]
            row, _ = solve_linear(v_t, rhs)
            matrix.append(row)
        return (source, target, matrix)

    def apply(self, terms):
        """pi~ on a vector whose blocks are all in range; None otherwise."""
        out = {}
        for st, c in terms.items():
            blk = (st.sector, sum(st.partition))
            if blk not in self.blocks:
                return None
            source, target, matrix = self.blocks[blk]
            col = source.index(st)
            for r, tst in enumerate(target):
                v = matrix[r][col]
                if v.is_zero():
                    continue
                v = c * v
                out[tst] = out[tst] + v if tst in out else v
        return pruned(out)


# conjugation formulas

def phi_constant(i):
    """(-q^3)^(1/2 - i)."""
    return mono(iota=1, s=3) ** (1 - 2 * i)


def psi_constant(i):
    """(-q)^(3(1/2 - i))."""
    return mono(iota=1, s=1) ** (3 * (1 - 2 * i))


# (name, conjugated current, image current, doubled exponent offset, constant)
CONJUGATIONS = (
    ("Phi+", PHI_PLUS, PHI_MINUS, 1, phi_constant),
    ("Phi-", PHI_MINUS, PHI_PLUS, -1, phi_constant),
    ("Psi+", PSI_PLUS, PSI_MINUS, 1, psi_constant),
    ("Psi-", PSI_MINUS, PSI_PLUS, -1, psi_constant),
)

# pi~ P(z, w) pi~ = kappa * P'(z, w) at exponents shifted by (dz, dw)
TRANSPORTS = (
    ("phi-phi", Product(PHI_MINUS, "z", PHI_MINUS, "w"), Product(PHI_PLUS, "z", PHI_PLUS, "w"),
     -1, -1, mono()),
    ("psi*-psi*", Product(PSI_STAR_MINUS, "z", PSI_STAR_MINUS, "w"),
     Product(PSI_STAR_PLUS, "z", PSI_STAR_PLUS, "w"), 1, 1, mono(s=-4)),
    ("phi-psi*", Product(PHI_MINUS, "z", PSI_STAR_MINUS, "w"),
     Product(PHI_PLUS, "z", PSI_STAR_PLUS, "w"), -1, 1, mono(-1, s=-2)),
    ("psi*-phi", Product(PSI_STAR_MINUS, "w", PHI_MINUS, "z"),
     Product(PSI_STAR_PLUS, "w", PHI_PLUS, "z"), -1, 1, mono(-1, s=-2)),
)


class Mismatch:
    """First failing comparison plus the ratio test for a uniform constant."""

    def __init__(self):
        self.first = None
        self.ratios = set()
        self.structural = False
        self.count = 0

    def record(self, where, lhs, rhs):
        if lhs == rhs:
            return
        self.count += 1
        keys = set(lhs) | set(rhs)
        ratio = None
        for k in keys:
            a, b = lhs.get(k), rhs.get(k)
            if a is None or b is None:
                self.structural = True
                break
            r = a / b
            if ratio is None:
                ratio = r
            elif r != ratio:
                self.structural = True
                break
        if ratio is not None and not self.structural:
            self.ratios.add(str(ratio))
        if self.first is None:
            key = sorted(keys)[0]
            self.first = {**where, "state": [list(key.partition), key.sector],
                          "lhs": str(lhs.get(key, 0)), "rhs": str(rhs.get(key, 0))}

    def witness(self):
        if self.first is None:
            return None
        uniform = not self.structural and len(self.ratios) == 1
        w = dict(self.first)
        w["mismatches"] = self.count
        w["uniform_constant"] = sorted(self.ratios)[0] if uniform else None
        return w


def _in_range(pi, terms):
    return all((k.sector, sum(k.partition)) in pi.blocks for k in terms)


def _states(pi):
    return [st for (j, d) in sorted(pi.blocks) for st in enumerate_block(j, d)]


def check_normalization(pi):
    p = pi.params
    bad = None
    for i in (0, 1):
        img = pi.apply({BasisState((), i): p.one})
        if img != {BasisState((), 1 - i): p.one}:
            bad = {"i": i}
            break
    return bad


def check_involution(pi):
    p = pi.params
    for st in _states(pi):
        back = pi.apply(pi.apply({st: p.one}))
        if back != {st: p.one}:
            return {"state": [list(st.partition), st.sector]}
    return None


def check_intertwining(pi, engine):
    """pi~ x = pi(x) pi~ for K and the four Drinfeld modes, blockwise."""
    ops = ChevalleyOps(engine)
    out = {}
    for name, x, px in ops.generators():
        mm = Mismatch()
        for st in _states(pi):
            v = {st: pi.params.one}
            xv = pruned(x(v))
            if not _in_range(pi, xv):
                continue
            lhs = pi.apply(xv)
            rhs = pruned(px(pi.apply(v)))
            if not _in_range(pi, rhs):
                continue
            mm.record({"source": [list(st.partition), st.sector]}, lhs, rhs)
        out[name] = mm.witness()
    return out


def check_conjugation(pi, engine, name, i, span2=12):
    """pi~ C^(1-i,i)(z) pi~ against the expected multiple of its image, on
    vectors of V(Lambda_(1-i)) whose images stay inside the computed blocks."""
    _, current, image, offset, constant = next(c for c in CONJUGATIONS if c[0] == name)
    p = pi.params
    c = p.mono(constant(i))
    mm = Mismatch()
    checked = 0
    for st in _states(pi):
        if st.sector % 2 != 1 - i:
            continue
        v = {st: p.one}
        w = pi.apply(v)
        for k2 in range(-span2, span2 + 1):
            y = pruned(engine.act_terms(current, k2, w))
            if not _in_range(pi, y):
                continue
            rhs = pruned({k: c * val for k, val in engine.act_terms(image, k2 + offset, v).items()})
            if not _in_range(pi, rhs):
                continue
            lhs = pi.apply(y)
            if not lhs and not rhs:
                continue
            checked += 1
            mm.record({"source": [list(st.partition), st.sector], "mode2": k2}, lhs, rhs)
    return mm.witness(), checked


def check_transport(pi, engine, name, bound2=6):
    """pi~ conjugation carries the (-,-) products to the (+,+) ones."""
    _, minus, plus, dz, dw, kappa = next(t for t in TRANSPORTS if t[0] == name)
    p = pi.params
    k = p.mono(kappa)
    mm = Mismatch()
    checked = 0
    for st in _states(pi):
        v = {st: p.one}
        w = pi.apply(v)
        for a2 in range(-bound2, bound2 + 1):
            for b2 in range(-bound2, bound2 + 1):
                y = {}
                for s2, cw in w.items():
                    add_into(y, engine.product_coeff(minus, a2, b2, s2), cw)
                y = pruned(y)
                rhs = pruned({s: k * val for s, val in
                              engine.product_coeff(plus, a2 + dz, b2 + dw, st).items()})
                if not _in_range(pi, y) or not _in_range(pi, rhs):
                    continue
                lhs = pi.apply(y)
                if not lhs and not rhs:
                    continue
                checked += 1
                mm.record({"source": [list(st.partition), st.sector], "z2": a2, "w2": b2},
                          lhs, rhs)
    return mm.witness(), checked
