"""Coordinate polynomial algebra and its Hopf action by differential operators.

Symmetry generators act on coordinates through representation matrices,
L acting on x^mu gives -L^mu_alpha x^alpha, and momenta act as coordinate
derivatives.  Products of generators act by composition, so the Leibniz rule
for single letters extends the action to all of the polynomial algebra.  A
twist deforms the commutative product into a star product evaluated through
the expansion of the inverse twist.
"""

from __future__ import annotations

from fractions import Fraction

from .ncpoly import MOMENTUM, SYMMETRY, NCPoly, RewriteSystem, leg_word
from .scalars import GaussRational, TruncSeries, parse_gauss_literal
from .reporting import ResidualReport


class PolyCoord:
    """Commutative polynomial in the coordinates, exponent-vector keyed."""

    __slots__ = ("dim", "order", "terms")

    def __init__(self, dim: int, order: int, terms: dict):
        self.dim = dim
        self.order = order
        self.terms = terms

    @staticmethod
    def zero(dim, order) -> "PolyCoord":
        return PolyCoord(dim, order, {})

    @staticmethod
    def one(dim, order) -> "PolyCoord":
        return PolyCoord.monomial(dim, order, (0,) * dim)

    @staticmethod
    def coord(dim, order, mu: int) -> "PolyCoord":
        exp = tuple(1 if k == mu else 0 for k in range(dim))
        return PolyCoord.monomial(dim, order, exp)

    @staticmethod
    def monomial(dim, order, exp, coeff=1) -> "PolyCoord":
        if len(exp) != dim:
            raise ValueError("exponent vector has wrong length")
        c = TruncSeries.coerce(coeff, order)
        return PolyCoord(dim, order, {} if c.is_zero() else {tuple(exp): c})

    def _check(self, other):
        if not isinstance(other, PolyCoord):
            raise TypeError(f"expected PolyCoord, got {type(other).__name__}")
        if self.dim != other.dim or self.order != other.order:
            raise ValueError("coordinate algebra mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, c)
        return PolyCoord(self.dim, self.order, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, -c)
        return PolyCoord(self.dim, self.order, out)

    def __neg__(self):
        return PolyCoord(self.dim, self.order, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                _acc(out, e, c1 * c2)
        return PolyCoord(self.dim, self.order, out)

    __rmul__ = __mul__

    def scale(self, value) -> "PolyCoord":
        c = value if isinstance(value, TruncSeries) else TruncSeries.coerce(value, self.order)
        out = {}
        for e, k in self.terms.items():
            v = k * c
            if not v.is_zero():
                out[e] = v
        return PolyCoord(self.dim, self.order, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, PolyCoord):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.order == other.order
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = " ".join(
                f"x{k}" if p == 1 else f"x{k}^{p}" for k, p in enumerate(e) if p
            )
            parts.append(f"({c})*{mono or '1'}")
        return " + ".join(parts)


def _acc(d, key, value):
    prev = d.get(key)
    if prev is None:
        d[key] = value
    else:
        s = prev + value
        if s.is_zero():
            del d[key]
        else:
            d[key] = s


class RepData:
    """Representation matrices for the symmetry sector plus the pairing of
    momenta with coordinates.

    Validation checks that the matrices realize the declared brackets (the
    matrix of [L_a, L_b] equals the matrix commutator) and that the full
    action composes consistently with every bracket in the alphabet.
    """

    def __init__(self, rs: RewriteSystem, matrices: dict, momenta, coordinates=None,
                 validate: bool = True):
        self.rs = rs
        self.momenta = tuple(momenta)
        self.dim = len(self.momenta)
        self.coordinates = tuple(coordinates) if coordinates else tuple(
            f"x{k}" for k in range(self.dim)
        )
        if len(self.coordinates) != self.dim:
            raise ValueError("coordinate names must match the momentum count")

        declared_momenta = set(rs.names(MOMENTUM))
        if set(self.momenta) != declared_momenta:
            raise ValueError("momentum ordering must cover the declared momenta")
        self.momentum_index = {}
        for k, name in enumerate(self.momenta):
            self.momentum_index[rs._rank(name)] = k

        self.matrices = {}
        for name in rs.names(SYMMETRY):
            if name not in matrices:
                raise ValueError(f"missing representation matrix for {name!r}")
            rows = matrices[name]
            if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
                raise ValueError(f"matrix for {name!r} is not {self.dim}x{self.dim}")
            self.matrices[name] = tuple(
                tuple(
                    parse_gauss_literal(v) if isinstance(v, str) else GaussRational.coerce(v)
                    for v in row
                )
                for row in rows
            )

        self._mono_cache: dict = {}
        if validate:
            rep = self.representation_residuals()
            if not rep.ok():
                label, _ = rep.failures[0]
                raise ValueError(f"representation property fails: {label}")

    # -- the action ------------------------------------------------------

    def act_rank(self, rank: int, a: PolyCoord) -> PolyCoord:
        """One generator acting on a polynomial; momenta lower the coordinate
        degree by one, symmetry letters preserve it."""
        g = self.rs.generators[rank]
        out: dict = {}
        if g.sort == MOMENTUM:
            nu = self.momentum_index[rank]
            for e, c in a.terms.items():
                if e[nu]:
                    e2 = e[:nu] + (e[nu] - 1,) + e[nu + 1 :]
                    _acc(out, e2, c * e[nu])
        elif g.sort == SYMMETRY:
            mat = self.matrices[g.name]
            for e, c in a.terms.items():
                for beta in range(self.dim):
                    if not e[beta]:
                        continue
                    for alpha in range(self.dim):
                        entry = mat[beta][alpha]
                        if entry.is_zero():
                            continue
                        e2 = list(e)
                        e2[beta] -= 1
                        e2[alpha] += 1
                        _acc(out, tuple(e2), c * (-entry * e[beta]))
        else:
            raise ValueError(f"{g.name!r} does not act on the coordinate algebra")
        return PolyCoord(self.dim, a.order, out)

    def act_word(self, ranks, exp) -> PolyCoord:
        """A PBW word acting on a coordinate monomial, rightmost letter first."""
        key = (ranks, tuple(exp))
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        cur = PolyCoord.monomial(self.dim, self.rs.order, exp)
        for rank in reversed(ranks):
            cur = self.act_rank(rank, cur)
            if cur.is_zero():
                break
        self._mono_cache[key] = cur
        return cur

    # -- validation --------------------------------------------------------

    def representation_residuals(self) -> ResidualReport:
        """Matrix-commutator and action-composition consistency checks."""
        report = ResidualReport("representation")
        sym = self.rs.names(SYMMETRY)
        for i, na in enumerate(sym):
            for nb in sym[i + 1 :]:
                bracket = self.rs.bracket(na, nb)
                try:
                    want = _matrix_of(self, bracket)
                except ValueError as exc:
                    report.record(f"matrix [{na},{nb}]", True, str(exc))
                    continue
                have = _mat_sub(
                    _mat_mul(self.matrices[na], self.matrices[nb]),
                    _mat_mul(self.matrices[nb], self.matrices[na]),
                )
                diff = _mat_sub(have, want)
                report.record(f"matrix [{na},{nb}]", _mat_nonzero(diff), diff)
        names = self.rs.names()
        for i, na in enumerate(names):
            pa = NCPoly.gen(self.rs, na)
            for nb in names[i + 1 :]:
                pb = NCPoly.gen(self.rs, nb)
                for mu in range(self.dim):
                    xmu = PolyCoord.coord(self.dim, self.rs.order, mu)
                    lhs = act(self, pa * pb, xmu)
                    rhs = act(self, pa, act(self, pb, xmu))
                    res = lhs - rhs
                    report.record(
                        f"compose [{na},{nb}] on x{mu}", not res.is_zero(), res
                    )
        return report


def _matrix_of(rep: RepData, p: NCPoly):
    """Matrix of a symmetry-sector polynomial of degree <= 1 (no momenta)."""
    m = rep.dim
    out = [[GaussRational(0)] * m for _ in range(m)]
    for w, c in p.terms.items():
        if len(w) != 1:
            raise ValueError("bracket of symmetry generators leaves the symmetry sector")
        g = rep.rs.generators[w[0][1]]
        if g.sort != SYMMETRY:
            raise ValueError("bracket of symmetry generators leaves the symmetry sector")
        if any(k > 0 for k in c.data):
            raise ValueError("structure constants must be h-free for the matrix check")
        scalar = c.coefficient(0)
        mat = rep.matrices[g.name]
        for a in range(m):
            for b in range(m):
                out[a][b] = out[a][b] + scalar * mat[a][b]
    return tuple(tuple(row) for row in out)


def _mat_mul(a, b):
    m = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(m)), GaussRational(0)) for j in range(m))
        for i in range(m)
    )


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _mat_nonzero(a) -> bool:
    return any(not x.is_zero() for row in a for x in row)


def act(rep: RepData, h_elem: NCPoly, a: PolyCoord) -> PolyCoord:
    """Left action of a Hopf-algebra element on a coordinate polynomial."""
    if h_elem.nlegs != 1:
        raise ValueError("the action expects a single-leg element")
    if h_elem.rs is not rep.rs:
        raise ValueError("alphabet mismatch between element and representation")
    out = PolyCoord.zero(rep.dim, rep.rs.order)
    for word, c in h_elem.terms.items():
        ranks = tuple(r for _, r in word)
        for e, ce in a.terms.items():
            part = rep.act_word(ranks, e)
            if not part.is_zero():
                out = out + part.scale(c * ce)
    return out


class StarProduct:
    """The (possibly twisted) product on the coordinate algebra.

    With no twist this is the plain commutative product; with a twist F it is
    a *_F b = sum (Fbar_1 acting on a) (Fbar_2 acting on b) over the expansion
    of the inverse twist.  Monomial products are cached.
    """

    def __init__(self, rep: RepData, twist=None):
        self.rep = rep
        self.twist = twist if twist is not None and not twist.is_trivial() else None
        self._mono_cache: dict = {}

    def __call__(self, a: PolyCoord, b: PolyCoord) -> PolyCoord:
        if self.twist is None:
            return a * b
        out = PolyCoord.zero(self.rep.dim, self.rep.rs.order)
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                out = out + self._mono(ea, eb).scale(ca * cb)
        return out

    def _mono(self, ea, eb) -> PolyCoord:
        key = (ea, eb)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        rep = self.rep
        out = PolyCoord.zero(rep.dim, rep.rs.order)
        for word, c in self.twist.F_inv.terms.items():
            left = rep.act_word(leg_word(word, 1), ea)
            if left.is_zero():
                continue
            right = rep.act_word(leg_word(word, 2), eb)
            if right.is_zero():
                continue
            out = out + (left * right).scale(c)
        self._mono_cache[key] = out
        return out


def monomials_up_to(dim: int, degree: int):
    """All exponent vectors with total degree <= degree, unit first."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k, slots - 1)

    for d in range(degree + 1):
        rec([], d, dim)
    return out


def check_module_algebra(rep: RepData, degree: int = 3, max_word: int = 2) -> ResidualReport:
    """Leibniz compatibility L(ab) = sum (L_1 a)(L_2 b) over sampled inputs,
    plus consistency of the action with the algebra relations.

    The second half is what catches a corrupted representation matrix: the
    letterwise action always satisfies Leibniz, but then the normal form of
    X Y no longer acts like X after Y.
    """
    from .hopf import BialgebraPresentation

    bialg = BialgebraPresentation(rep.rs)
    report = ResidualReport("module-algebra")
    words = [(r,) for r in range(len(rep.rs.generators))]
    if max_word >= 2:
        n = len(rep.rs.generators)
        words += [(r1, r2) for r1 in range(n) for r2 in range(r1, n)]
    monos = monomials_up_to(rep.dim, degree)
    order = rep.rs.order
    for ranks in words:
        splits = bialg.word_splits(ranks)
        for ea in monos:
            a = PolyCoord.monomial(rep.dim, order, ea)
            for eb in monos:
                b = PolyCoord.monomial(rep.dim, order, eb)
                lhs = rep.act_word(ranks, tuple(x + y for x, y in zip(ea, eb)))
                rhs = PolyCoord.zero(rep.dim, order)
                for left, right, mult in splits:
                    part = rep.act_word(left, ea) * rep.act_word(right, eb)
                    rhs = rhs + part.scale(mult)
                res = lhs - rhs
                label = f"{'.'.join(rep.rs.generators[r].name for r in ranks)} on {ea}*{eb}"
                report.record(label, not res.is_zero(), res)
    names = rep.rs.names()
    for i, na in enumerate(names):
        pa = NCPoly.gen(rep.rs, na)
        for nb in names[: i + 1]:
            prod = pa * NCPoly.gen(rep.rs, nb)
            for ea in monos:
                mono = PolyCoord.monomial(rep.dim, order, ea)
                lhs = act(rep, prod, mono)
                rhs = act(rep, pa, rep.act_word((rep.rs._rank(nb),), ea))
                res = lhs - rhs
                report.record(f"relations [{na} {nb}] on {ea}", not res.is_zero(), res)
    return report


def check_braided_commutativity(star: StarProduct, R: NCPoly, degree: int = 3) -> ResidualReport:
    """Residual of a*b - (R_2 acting on b)*(R_1 acting on a) over monomials."""
    rep = star.rep
    order = rep.rs.order
    report = ResidualReport("braided-commutativity")
    monos = monomials_up_to(rep.dim, degree)
    for ea in monos:
        a = PolyCoord.monomial(rep.dim, order, ea)
        for eb in monos:
            b = PolyCoord.monomial(rep.dim, order, eb)
            rhs = PolyCoord.zero(rep.dim, order)
            for word, c in R.terms.items():
                rb = rep.act_word(leg_word(word, 2), eb)
                ra = rep.act_word(leg_word(word, 1), ea)
                if rb.is_zero() or ra.is_zero():
                    continue
                rhs = rhs + star(rb, ra).scale(c)
            res = star(a, b) - rhs
            report.record(f"{ea} vs {eb}", not res.is_zero(), res)
    return report


def star_commutator_table(star: StarProduct):
    """Matrix of x^mu * x^nu - x^nu * x^mu for all coordinate pairs."""
    rep = star.rep
    coords = [PolyCoord.coord(rep.dim, rep.rs.order, mu) for mu in range(rep.dim)]
    return [
        [star(coords[mu], coords[nu]) - star(coords[nu], coords[mu]) for nu in range(rep.dim)]
        for mu in range(rep.dim)
    ]


def coaction(smash_algebra, R: NCPoly, a: PolyCoord):
    """Right coaction delta(a) = (R_2 acting on a) (x) R_1 as a mixed element."""
    rep = smash_algebra.rep
    terms: dict = {}
    for word, c in R.terms.items():
        w1 = leg_word(word, 1)
        for e, ce in a.terms.items():
            part = rep.act_word(leg_word(word, 2), e)
            for e2, c2 in part.terms.items():
                _acc(terms, (e2, w1), c * ce * c2)
    return smash_algebra.from_terms(terms)
