"""Bialgebra structure on the enveloping algebra: primitive coproduct,
counit, twists, twisted coproducts and R-matrices.

Every generator is primitive, Delta(X) = X(x)1 + 1(x)X, and the counit kills
every generator, so the coproduct of a PBW word is the sum over all splits of
its letters into two legs.  A twist is an invertible two-leg element F
produced here as a truncated exponential; constructing one verifies that it
is a two-sided inverse pair and that both counit contractions collapse to the
unit.  Identity checks return residual elements rather than booleans: a
nonzero residual pinpoints the failing term and h-order.
"""

from __future__ import annotations

from .ncpoly import COORDINATE, NCPoly, RewriteSystem, _bump, _strip, leg_word
from .scalars import TruncSeries


class InvalidTwistError(ValueError):
    """Raised when a would-be twist fails inversion or normalization."""


class BialgebraPresentation:
    """The Hopf-side alphabet with its primitive coproduct and counit."""

    def __init__(self, rs: RewriteSystem):
        for g in rs.generators:
            if g.sort == COORDINATE:
                raise ValueError(
                    "coordinate generators do not belong to the Hopf alphabet"
                )
        self.rs = rs
        self._split_cache: dict = {}

    @property
    def order(self) -> int:
        return self.rs.order

    # -- coproduct and counit ------------------------------------------

    def word_splits(self, ranks) -> tuple:
        """All two-leg splits of a PBW word with multiplicities.

        Returns ((left_ranks, right_ranks, multiplicity), ...) covering the
        expansion of a product of primitive letters; both halves inherit the
        sorted order, so no renormalization is needed.
        """
        cached = self._split_cache.get(ranks)
        if cached is not None:
            return cached
        counts: dict = {}
        n = len(ranks)
        for mask in range(1 << n):
            left = tuple(ranks[i] for i in range(n) if mask >> i & 1)
            right = tuple(ranks[i] for i in range(n) if not mask >> i & 1)
            counts[(left, right)] = counts.get((left, right), 0) + 1
        out = tuple((l, r, m) for (l, r), m in counts.items())
        self._split_cache[ranks] = out
        return out

    def coproduct(self, p: NCPoly) -> NCPoly:
        """Algebra-map extension of the primitive coproduct, as a two-leg element."""
        return self.coproduct_on_leg(p, 0, (1, 2), 2, {})

    def coproduct_on_leg(self, p: NCPoly, src: int, dests, n_out: int, other_map) -> NCPoly:
        """Apply the primitive coproduct to one leg inside a larger tensor.

        Letters in ``src`` are distributed over the two ``dests`` legs; any
        other leg l is retagged to other_map[l].
        """
        if p.rs is not self.rs:
            raise ValueError("element does not live over this alphabet")
        da, db = dests
        out: dict = {}
        for word, c in p.terms.items():
            src_ranks = tuple(r for l, r in word if l == src)
            rest = tuple((other_map[l], r) for l, r in word if l != src)
            for left, right, mult in self.word_splits(src_ranks):
                letters = rest + tuple((da, r) for r in left) + tuple((db, r) for r in right)
                nw = tuple(sorted(letters, key=lambda t: t[0]))
                _bump(out, nw, c * mult)
        return NCPoly(p.rs, n_out, _strip(out))

    def counit(self, p: NCPoly) -> TruncSeries:
        """Coefficient of the empty word; every generator maps to zero."""
        if p.rs is not self.rs:
            raise ValueError("element does not live over this alphabet")
        if p.nlegs != 1:
            raise ValueError("counit expects a single-leg element")
        return p.coefficient(())

    def counit_on_leg(self, p: NCPoly, leg: int) -> NCPoly:
        """Contract one tensor leg with the counit.

        Only terms with no letter in that leg survive; remaining legs are
        renumbered to close the gap (a two-leg input yields a single-leg
        output).
        """
        n_out = p.nlegs - 1
        out: dict = {}
        for word, c in p.terms.items():
            if any(l == leg for l, _ in word):
                continue
            if n_out == 1:
                nw = tuple((0, r) for _, r in word)
            else:
                nw = tuple((l - 1 if l > leg else l, r) for l, r in word)
            _bump(out, nw, c)
        return NCPoly(p.rs, n_out, _strip(out))


class Twist:
    """A validated invertible two-leg element with unital counit contractions."""

    def __init__(self, bialg: BialgebraPresentation, F: NCPoly, F_inv: NCPoly):
        self.bialg = bialg
        self.F = F
        self.F_inv = F_inv
        self._twisted_split_cache: dict = {}
        one2 = NCPoly.one(bialg.rs, 2)
        if F * F_inv != one2 or F_inv * F != one2:
            raise InvalidTwistError("twist inverse fails at the truncation order")
        one1 = NCPoly.one(bialg.rs, 1)
        for elem, tag in ((F, "twist"), (F_inv, "inverse twist")):
            if bialg.counit_on_leg(elem, 1) != one1 or bialg.counit_on_leg(elem, 2) != one1:
                raise InvalidTwistError(f"{tag} fails the counit normalization")

    def is_trivial(self) -> bool:
        return self.F == NCPoly.one(self.bialg.rs, 2)

    def swap(self) -> NCPoly:
        return self.F.swap_legs()


def twist_from_exponent(bialg: BialgebraPresentation, t: NCPoly) -> Twist:
    """Build the twist exp(t) with inverse exp(-t).

    ``t`` must be a two-leg element with no h^0 part so both exponentials
    terminate at the truncation order.
    """
    if t.nlegs != 2:
        raise ValueError("twist exponent must be a two-leg element")
    if not t.has_no_constant_order():
        raise ValueError("twist exponent has a nonzero h^0 component")
    return Twist(bialg, t.exp_truncated(), (-t).exp_truncated())


def trivial_twist(bialg: BialgebraPresentation) -> Twist:
    return twist_from_exponent(bialg, NCPoly.zero(bialg.rs, 2))


def check_cocycle(bialg: BialgebraPresentation, twist: Twist) -> dict:
    """Residuals of the cocycle identity for the twist and for its inverse.

    Both residuals are three-leg elements; the twist is a normalized cocycle
    iff both are zero at the truncation order.
    """
    F, Fi = twist.F, twist.F_inv
    f12 = F.place_legs((1, 2), 3)
    f23 = F.place_legs((2, 3), 3)
    cop_left = bialg.coproduct_on_leg(F, 1, (1, 2), 3, {2: 3})
    cop_right = bialg.coproduct_on_leg(F, 2, (2, 3), 3, {1: 1})
    direct = f12 * cop_left - f23 * cop_right

    fi12 = Fi.place_legs((1, 2), 3)
    fi23 = Fi.place_legs((2, 3), 3)
    icop_left = bialg.coproduct_on_leg(Fi, 1, (1, 2), 3, {2: 3})
    icop_right = bialg.coproduct_on_leg(Fi, 2, (2, 3), 3, {1: 1})
    inverse = icop_left * fi12 - icop_right * fi23

    return {"cocycle": direct, "inverse-cocycle": inverse}


class CoproductMap:
    """Primitive coproduct or its conjugation by a twist, leg-aware.

    Used wherever a construction is parameterized by "which coproduct":
    ``twist=None`` gives the primitive one, otherwise F Delta(.) F^{-1}.
    """

    def __init__(self, bialg: BialgebraPresentation, twist: Twist | None = None):
        self.bialg = bialg
        self.twist = twist
        self._word_cache: dict = {}

    def __call__(self, p: NCPoly) -> NCPoly:
        prim = self.bialg.coproduct(p)
        if self.twist is None:
            return prim
        return self.twist.F * prim * self.twist.F_inv

    def opposite(self, p: NCPoly) -> NCPoly:
        return self(p).swap_legs()

    def on_leg(self, p: NCPoly, src: int, dests, n_out: int, other_map) -> NCPoly:
        prim = self.bialg.coproduct_on_leg(p, src, dests, n_out, other_map)
        if self.twist is None:
            return prim
        f = self.twist.F.place_legs(dests, n_out)
        fi = self.twist.F_inv.place_legs(dests, n_out)
        return f * prim * fi

    def word_splits(self, ranks) -> tuple:
        """Two-leg Sweedler data of a PBW word: ((left, right, coeff), ...)."""
        if self.twist is None:
            order = self.bialg.order
            return tuple(
                (l, r, TruncSeries.const(m, order))
                for l, r, m in self.bialg.word_splits(ranks)
            )
        cached = self._word_cache.get(ranks)
        if cached is not None:
            return cached
        poly = self(_word_poly(self.bialg.rs, ranks))
        out = tuple(
            (leg_word(w, 1), leg_word(w, 2), c) for w, c in poly.terms.items()
        )
        self._word_cache[ranks] = out
        return out


def _word_poly(rs: RewriteSystem, ranks) -> NCPoly:
    word = tuple((0, r) for r in ranks)
    return NCPoly(rs, 1, {word: TruncSeries.one(rs.order)})


def twisted_coproduct(bialg: BialgebraPresentation, twist: Twist, p: NCPoly) -> NCPoly:
    return CoproductMap(bialg, twist)(p)


def r_matrix_from_twist(bialg: BialgebraPresentation, twist: Twist) -> NCPoly:
    """R = F_21 F^{-1}, the triangular R-matrix generated by the twist."""
    return twist.swap() * twist.F_inv


def inverse_r_matrix(twist: Twist) -> NCPoly:
    """(F_21 F^{-1})^{-1} = F (F^{-1})_21, exact at the truncation order."""
    return twist.F * twist.F_inv.swap_legs()


def inv_unipotent(p: NCPoly) -> NCPoly:
    """Inverse of an element whose h^0 part is the unit (geometric series)."""
    rs, nlegs = p.rs, p.nlegs
    u = NCPoly.one(rs, nlegs) - p
    if not u.has_no_constant_order():
        raise ValueError("element is not unipotent in h")
    acc = NCPoly.one(rs, nlegs)
    term = acc
    for _ in range(rs.order):
        term = term * u
        if term.is_zero():
            break
        acc = acc + term
    return acc


def check_quasitriangular(
    bialg: BialgebraPresentation, R: NCPoly, delta: CoproductMap
) -> dict:
    """Residuals of the defining R-matrix identities against a coproduct.

    Covers the intertwining relation on every generator, both coproduct
    hexagons, the two counit contractions, and the quantum Yang-Baxter
    equation.  All residuals vanish iff (delta, R) is quasi-triangular at
    the truncation order.
    """
    rs = bialg.rs
    out = {}
    for g in rs.generators:
        x = NCPoly.gen(rs, g.name)
        out[f"intertwine:{g.name}"] = R * delta(x) - delta.opposite(x) * R
    r13 = R.place_legs((1, 3), 3)
    r23 = R.place_legs((2, 3), 3)
    r12 = R.place_legs((1, 2), 3)
    out["hexagon-left"] = delta.on_leg(R, 1, (1, 2), 3, {2: 3}) - r13 * r23
    out["hexagon-right"] = delta.on_leg(R, 2, (2, 3), 3, {1: 1}) - r13 * r12
    one1 = NCPoly.one(rs, 1)
    out["counit-left"] = bialg.counit_on_leg(R, 1) - one1
    out["counit-right"] = bialg.counit_on_leg(R, 2) - one1
    out["yang-baxter"] = r12 * r13 * r23 - r23 * r13 * r12
    return out


def classical_r_extract(R: NCPoly):
    """First-order part r of R = 1(x)1 + h r + ... and its CYBE residual.

    Fails unless the h^0 part of R is exactly the unit.  The residual is the
    classical Yang-Baxter bracket [r12, r13] + [r12, r23] + [r13, r23]
    assembled from leg embeddings.
    """
    if R.h_coefficient(0) != NCPoly.one(R.rs, 2):
        raise ValueError("constant-order part of R is not the unit")
    r = R.h_coefficient(1)
    r12 = r.place_legs((1, 2), 3)
    r13 = r.place_legs((1, 3), 3)
    r23 = r.place_legs((2, 3), 3)
    cybe = (
        r12.commutator(r13) + r12.commutator(r23) + r13.commutator(r23)
    )
    return r, cybe
