"""The smash product carrier and its two multiplications.

Both the undeformed product and the twist-deformed product live on the same
vector space: coordinate monomial tensor PBW word.  Multiplication is always
computed structurally, by expanding the (possibly twisted) coproduct on the
Hopf side, acting with the first Sweedler leg on the coordinate part, and
multiplying the rest; mixed words are never rewritten as strings.  The linear
map phi built from the inverse twist intertwines the two products.
"""

from __future__ import annotations

from fractions import Fraction

from .hopf import BialgebraPresentation, CoproductMap, Twist
from .modalg import PolyCoord, RepData, StarProduct, monomials_up_to
from .ncpoly import NCPoly, leg_word
from .reporting import ResidualReport
from .scalars import GaussRational, TruncSeries


class SmashAlgebra:
    """Shared context: the Hopf presentation, the representation, caches."""

    def __init__(self, bialg: BialgebraPresentation, rep: RepData):
        if bialg.rs is not rep.rs:
            raise ValueError("bialgebra and representation use different alphabets")
        self.bialg = bialg
        self.rep = rep
        self.rs = bialg.rs
        self.dim = rep.dim
        self.order = bialg.order
        self._products: dict = {}

    def product(self, twist: Twist | None = None) -> "SmashProduct":
        """Memoized multiplication object; caches survive across sweeps."""
        key = id(twist)
        entry = self._products.get(key)
        if entry is None:
            entry = (twist, SmashProduct(self, twist))
            self._products[key] = entry
        return entry[1]

    # -- element constructors -------------------------------------------

    def from_terms(self, terms: dict) -> "SmashElem":
        return SmashElem(self, {k: v for k, v in terms.items() if not v.is_zero()})

    def zero(self) -> "SmashElem":
        return SmashElem(self, {})

    def one(self) -> "SmashElem":
        exp = (0,) * self.dim
        return SmashElem(self, {(exp, ()): TruncSeries.one(self.order)})

    def coord_elem(self, a: PolyCoord) -> "SmashElem":
        """a as a (x) 1."""
        if a.dim != self.dim or a.order != self.order:
            raise ValueError("coordinate algebra mismatch")
        return SmashElem(self, {(e, ()): c for e, c in a.terms.items()})

    def h_elem(self, p: NCPoly) -> "SmashElem":
        """p as 1 (x) p."""
        if p.rs is not self.rs or p.nlegs != 1:
            raise ValueError("expected a single-leg element over the same alphabet")
        exp = (0,) * self.dim
        return SmashElem(
            self, {(exp, tuple(r for _, r in w)): c for w, c in p.terms.items()}
        )

    def elem(self, a: PolyCoord, p: NCPoly | None = None) -> "SmashElem":
        """a (x) p for a coordinate polynomial and a Hopf element."""
        left = self.coord_elem(a)
        if p is None:
            return left
        out: dict = {}
        for (e, _w), ca in left.terms.items():
            for w, cp in p.terms.items():
                _acc(out, (e, tuple(r for _, r in w)), ca * cp)
        return self.from_terms(out)

    def basis_elem(self, exp, ranks, coeff=1) -> "SmashElem":
        c = TruncSeries.coerce(coeff, self.order)
        return self.from_terms({(tuple(exp), tuple(ranks)): c})

    def gen_name(self, rank: int) -> str:
        return self.rs.generators[rank].name

    # -- spanning sets for verification sweeps ---------------------------

    def spanning(self, degree: int, max_word: int | None = None):
        """Basis elements x^e (x) w with |e| <= degree, len(w) <= max_word."""
        if max_word is None:
            max_word = degree
        return [
            self.basis_elem(e, w)
            for e in monomials_up_to(self.dim, degree)
            for w in spanning_words(self.rs, max_word)
        ]


class SmashElem:
    """Element of the smash carrier: {(exponent vector, PBW word): coeff}."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: SmashAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, SmashElem):
            raise TypeError(f"expected SmashElem, got {type(other).__name__}")
        if self.algebra is not other.algebra:
            raise ValueError("elements from different smash algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return SmashElem(self.algebra, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return SmashElem(self.algebra, out)

    def __neg__(self):
        return SmashElem(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, value) -> "SmashElem":
        c = value if isinstance(value, TruncSeries) else TruncSeries.coerce(value, self.algebra.order)
        out = {}
        for k, v in self.terms.items():
            s = v * c
            if not s.is_zero():
                out[k] = s
        return SmashElem(self.algebra, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRational, TruncSeries)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def coord_part(self) -> PolyCoord:
        """The A-component, defined when every word is empty."""
        alg = self.algebra
        out = {}
        for (e, w), c in self.terms.items():
            if w:
                raise ValueError("element has a nontrivial Hopf factor")
            out[e] = c
        return PolyCoord(alg.dim, alg.order, out)

    def __eq__(self, other):
        if not isinstance(other, SmashElem):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [g.name for g in self.algebra.rs.generators]
        parts = []
        for e, w in sorted(self.terms):
            c = self.terms[(e, w)]
            mono = " ".join(
                f"x{k}" if p == 1 else f"x{k}^{p}" for k, p in enumerate(e) if p
            ) or "1"
            word = " ".join(names[r] for r in w) or "1"
            parts.append(f"({c})*{mono}#{word}")
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


class SmashProduct:
    """One of the two multiplications on the shared carrier.

    ``twist=None`` gives the undeformed product; a twist switches both the
    Sweedler legs (to the twisted coproduct) and the coordinate-sector
    product (to the star product).
    """

    def __init__(self, algebra: SmashAlgebra, twist: Twist | None = None):
        self.algebra = algebra
        self.twist = twist if twist is not None and not twist.is_trivial() else None
        self.delta = CoproductMap(algebra.bialg, self.twist)
        self.star = StarProduct(algebra.rep, self.twist)
        self._pair_cache: dict = {}

    def __call__(self, u: SmashElem, v: SmashElem) -> SmashElem:
        alg = self.algebra
        u._check(v)
        if u.algebra is not alg:
            raise ValueError("elements do not belong to this product's algebra")
        out: dict = {}
        for ku, ca in u.terms.items():
            for kv, cb in v.terms.items():
                c = ca * cb
                for key, cp in self._pair(ku, kv).items():
                    _acc(out, key, c * cp)
        return alg.from_terms(out)

    def _pair(self, ku, kv) -> dict:
        """Product of two basis elements as a term dict (cached)."""
        cached = self._pair_cache.get((ku, kv))
        if cached is not None:
            return cached
        alg = self.algebra
        rs = alg.rs
        ea, wa = ku
        eb, wb = kv
        a_mono = PolyCoord.monomial(alg.dim, alg.order, ea)
        out: dict = {}
        for left, right, cd in self.delta.word_splits(wa):
            acted = alg.rep.act_word(left, eb)
            if acted.is_zero():
                continue
            apart = self.star(a_mono, acted)
            if apart.is_zero():
                continue
            hpart = rs.normalize_word(tuple((0, r) for r in right + wb))
            for e2, c2 in apart.terms.items():
                cc = cd * c2
                for hw, ch in hpart.items():
                    _acc(out, (e2, tuple(r for _, r in hw)), cc * ch)
        self._pair_cache[(ku, kv)] = out
        return out

    def action_on_base(self, u: SmashElem, b: PolyCoord) -> PolyCoord:
        """The representation of the smash product on its coordinate algebra:
        (a (x) L) sends b to a * (L acting on b), with this product's star."""
        alg = self.algebra
        out = PolyCoord.zero(alg.dim, alg.order)
        for (e, w), c in u.terms.items():
            acted = PolyCoord.zero(alg.dim, alg.order)
            for eb, cb in b.terms.items():
                acted = acted + alg.rep.act_word(w, eb).scale(cb)
            if acted.is_zero():
                continue
            part = self.star(PolyCoord.monomial(alg.dim, alg.order, e), acted)
            out = out + part.scale(c)
        return out


def mul_undeformed(algebra: SmashAlgebra, u: SmashElem, v: SmashElem) -> SmashElem:
    return algebra.product(None)(u, v)


def mul_twisted(algebra: SmashAlgebra, twist: Twist, u: SmashElem, v: SmashElem) -> SmashElem:
    return algebra.product(twist)(u, v)


def phi(algebra: SmashAlgebra, twist: Twist, u: SmashElem) -> SmashElem:
    """The comparison map (Fbar_1 acting on a) (x) Fbar_2 L, linearly extended."""
    return _twist_transport(algebra, twist.F_inv, u)


def phi_inv(algebra: SmashAlgebra, twist: Twist, u: SmashElem) -> SmashElem:
    """Inverse of phi: (F_1 acting on a) (x) F_2 L."""
    return _twist_transport(algebra, twist.F, u)


_transport_caches: dict = {}


def _twist_transport(algebra: SmashAlgebra, two_leg: NCPoly, u: SmashElem) -> SmashElem:
    # the cache entry keeps the keying objects alive so their ids stay unique
    _, cache = _transport_caches.setdefault(
        (id(algebra), id(two_leg)), ((algebra, two_leg), {})
    )
    out: dict = {}
    for key, c in u.terms.items():
        for k2, c2 in _transport_basis(algebra, two_leg, cache, key).items():
            _acc(out, k2, c * c2)
    return algebra.from_terms(out)


def _transport_basis(algebra: SmashAlgebra, two_leg: NCPoly, cache: dict, key) -> dict:
    cached = cache.get(key)
    if cached is not None:
        return cached
    e, w = key
    rs = algebra.rs
    out: dict = {}
    for fword, cf in two_leg.terms.items():
        apart = algebra.rep.act_word(leg_word(fword, 1), e)
        if apart.is_zero():
            continue
        hpart = rs.normalize_word(tuple((0, r) for r in leg_word(fword, 2) + w))
        for e2, c2 in apart.terms.items():
            cc = cf * c2
            for hw, ch in hpart.items():
                _acc(out, (e2, tuple(r for _, r in hw)), cc * ch)
    cache[key] = out
    return out


def canonical_action(
    algebra: SmashAlgebra, u: SmashElem, b: PolyCoord, twist: Twist | None = None
) -> PolyCoord:
    """(a (x) L) acting on the base by a * (L acting on b)."""
    return algebra.product(twist).action_on_base(u, b)


def spanning_words(rs, max_len: int):
    """Sorted generator-rank words of length <= max_len (PBW monomials)."""
    n = len(rs.generators)
    words = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [w + (r,) for w in frontier for r in range(w[-1] if w else 0, n)]
        words.extend(frontier)
    return words


def verify_phi_homomorphism(
    algebra: SmashAlgebra, twist: Twist, degree: int = 2
) -> ResidualReport:
    """phi(u *_F v) = phi(u) * phi(v) over all monomial pairs up to degree.

    Pairs are labelled by the case split of the generator decomposition:
    (i) coordinate-only left factor, (ii) Hopf-only left factor, and the
    general mixed pairs; every left/right basis combination up to the
    requested coordinate degree and word length is exercised.
    """
    alg = algebra
    deformed = alg.product(twist)
    plain = alg.product(None)
    report = ResidualReport("phi-homomorphism")

    monos = monomials_up_to(alg.dim, degree)
    words = spanning_words(alg.rs, degree)
    basis = [(ea, wl) for ea in monos for wl in words]
    phi_of = {key: phi(alg, twist, alg.basis_elem(*key)) for key in basis}

    for ea, wl in basis:
        u = alg.basis_elem(ea, wl)
        pu = phi_of[(ea, wl)]
        if not wl:
            case = "(i)"
        elif sum(ea) == 0:
            case = "(ii)"
        else:
            case = "(gen)"
        for eb, wj in basis:
            v = alg.basis_elem(eb, wj)
            r = phi(alg, twist, deformed(u, v)) - plain(pu, phi_of[(eb, wj)])
            report.record(f"{case} {ea}|{wl} vs {eb}|{wj}", not r.is_zero(), r)
    return report
