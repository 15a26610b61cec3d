"""Bialgebroid structures on the smash carrier and their twist deformations.

Two constructions live here.  The first equips a smash product with source,
target, coproduct and counit whenever the coordinate algebra is braided
commutative for a given R-matrix.  The second deforms an existing bialgebroid
by a twistor, a two-leg invertible element of the tensor square over the base:
the total multiplication is unchanged, while the base product, source, target
and coproduct pick up twist factors through the anchor action.  The harness at
the bottom verifies that twisting the smash bialgebroid and building the
bialgebroid of the twisted smash product give the same structure up to the
comparison map phi.

Equality in the tensor square over the base is decided by a canonical form:
every right factor is reduced to a pure Hopf element by moving coordinates
through the target map, after which equality is a finite coefficient
comparison.
"""

from __future__ import annotations

from .hopf import CoproductMap, InvalidTwistError, Twist, inv_unipotent, \
    r_matrix_from_twist
from .modalg import PolyCoord, coaction, monomials_up_to, \
    check_braided_commutativity
from .ncpoly import NCPoly, leg_word
from .reporting import ResidualReport
from .scalars import TruncSeries
from .smash import SmashAlgebra, SmashElem, SmashProduct, phi, spanning_words
from .smash import verify_phi_homomorphism


class BrokenAnchorError(ValueError):
    """The two counit expressions for the anchor action disagree."""


class Bialgebroid:
    """A total algebra on the smash carrier together with its base data.

    ``base`` multiplies coordinate polynomials, ``total`` multiplies carrier
    elements, ``source``/``target`` embed the base, ``counit`` projects back.
    ``right_split_term`` writes a carrier basis element as a combination of
    source multiples of pure elements; it drives the canonical form of the
    tensor square.
    """

    def __init__(self, name, smash: SmashAlgebra, base, total: SmashProduct,
                 source, target, counit, right_split_term=None,
                 hdelta: CoproductMap | None = None, rmatrix: NCPoly | None = None,
                 coproduct=None):
        self.name = name
        self.smash = smash
        self.base = base
        self.total = total
        self.source = source
        self.target = target
        self.counit = counit
        self.hdelta = hdelta
        self.rmatrix = rmatrix
        self._coproduct = coproduct
        self._right_split = right_split_term or self._trivial_split
        self._zero_exp = (0,) * smash.dim
        self._pure_cache: dict = {}
        self._split_cache: dict = {}

    # -- canonical-form machinery -----------------------------------------

    def _trivial_split(self, exp, word):
        a = PolyCoord.monomial(self.smash.dim, self.smash.order, exp)
        return ((a, word, TruncSeries.one(self.smash.order)),)

    def right_split(self, exp, word):
        key = (exp, word)
        cached = self._split_cache.get(key)
        if cached is None:
            cached = tuple(self._right_split(exp, word))
            self._split_cache[key] = cached
        return cached

    def pure(self, word) -> SmashElem:
        """1 (x) word as a carrier element."""
        elem = self._pure_cache.get(word)
        if elem is None:
            elem = self.smash.basis_elem(self._zero_exp, word)
            self._pure_cache[word] = elem
        return elem

    def tensor_from_pairs(self, pairs) -> "TensorOverA":
        """Canonicalize a raw sum of left/right carrier pairs.

        Every right factor is split as sum s(a_i) (1 (x) J_i) and the a_i are
        moved left through the target map, so canonical right factors carry
        no coordinates.
        """
        out: dict = {}
        for item in pairs:
            l, r = item[0], item[1]
            c = item[2] if len(item) > 2 else None
            for (er, wr), cr in r.terms.items():
                base_c = cr if c is None else c * cr
                if not any(er):
                    for (el, wl), cl in l.terms.items():
                        _acc(out, (el, wl, wr), base_c * cl)
                    continue
                for apoly, wj, cs in self.right_split(er, wr):
                    moved = self.total(self.target(apoly), l)
                    for (el, wl), cl in moved.terms.items():
                        _acc(out, (el, wl, wj), base_c * cs * cl)
        return TensorOverA(self, _strip(out))

    def tensor_from_triples(self, triples) -> "Tensor3OverA":
        """Canonical form in the threefold tensor over the base."""
        staged = []
        for item in triples:
            l, m, r = item[0], item[1], item[2]
            c = item[3] if len(item) > 3 else None
            for (er, wr), cr in r.terms.items():
                base_c = cr if c is None else c * cr
                if not any(er):
                    staged.append((l, m, wr, base_c))
                    continue
                for apoly, wj, cs in self.right_split(er, wr):
                    staged.append((l, self.total(self.target(apoly), m), wj, base_c * cs))
        out: dict = {}
        for l, m, wr, c in staged:
            for (em, wm), cm in m.terms.items():
                if not any(em):
                    for (el, wl), cl in l.terms.items():
                        _acc(out, (el, wl, wm, wr), c * cm * cl)
                    continue
                for apoly, wj, cs in self.right_split(em, wm):
                    moved = self.total(self.target(apoly), l)
                    for (el, wl), cl in moved.terms.items():
                        _acc(out, (el, wl, wj, wr), c * cm * cs * cl)
        return Tensor3OverA(self, _strip(out))

    def tensor_unit(self) -> "TensorOverA":
        one = TruncSeries.one(self.smash.order)
        return TensorOverA(self, {(self._zero_exp, (), ()): one})

    def tensor3_unit(self) -> "Tensor3OverA":
        one = TruncSeries.one(self.smash.order)
        return Tensor3OverA(self, {(self._zero_exp, (), (), ()): one})

    # -- structure maps ----------------------------------------------------

    def coproduct(self, m: SmashElem) -> "TensorOverA":
        if self._coproduct is not None:
            return self._coproduct(m)
        out: dict = {}
        for (e, w), c in m.terms.items():
            for left, right, cd in self.hdelta.word_splits(w):
                _acc(out, (e, left, right), c * cd)
        return TensorOverA(self, _strip(out))

    def anchor(self, m: SmashElem, a: PolyCoord) -> PolyCoord:
        """The action of the total algebra on the base via the counit."""
        return self.counit(self.total(m, self.source(a)))

    def unit(self) -> SmashElem:
        return self.smash.one()


def anchor_action(bd: Bialgebroid, m: SmashElem, a: PolyCoord) -> PolyCoord:
    """Anchor with the consistency assertion: both counit expressions agree."""
    via_source = bd.counit(bd.total(m, bd.source(a)))
    via_target = bd.counit(bd.total(m, bd.target(a)))
    if via_source != via_target:
        raise BrokenAnchorError(
            f"anchor mismatch on {m!r}: {via_source!r} vs {via_target!r}"
        )
    return via_source


class TensorOverA:
    """Canonical-form element of the tensor square of the total algebra over
    the base: {(left exponent, left word, pure right word): coefficient}."""

    __slots__ = ("bd", "terms")

    def __init__(self, bd: Bialgebroid, terms: dict):
        self.bd = bd
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, TensorOverA):
            raise TypeError(f"expected TensorOverA, got {type(other).__name__}")
        if self.bd is not other.bd:
            raise ValueError("tensors over different bialgebroids")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorOverA(self.bd, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return TensorOverA(self.bd, out)

    def __neg__(self):
        return TensorOverA(self.bd, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "TensorOverA":
        out = {}
        for k, v in self.terms.items():
            s = v * c
            if not s.is_zero():
                out[k] = s
        return TensorOverA(self.bd, out)

    def mul(self, other: "TensorOverA") -> "TensorOverA":
        """Component-wise product, recanonicalized.

        Only meaningful on elements that pass the invariance check; callers
        are expected to use it on coproduct images and twistors.
        """
        self._check(other)
        bd = self.bd
        pairs = []
        for (e1, w1, r1), c1 in self.terms.items():
            l1 = bd.smash.basis_elem(e1, w1)
            p1 = bd.pure(r1)
            for (e2, w2, r2), c2 in other.terms.items():
                l = bd.total(l1, bd.smash.basis_elem(e2, w2))
                r = bd.total(p1, bd.pure(r2))
                pairs.append((l, r, c1 * c2))
        return bd.tensor_from_pairs(pairs)

    def flip(self) -> "TensorOverA":
        """The opposite tensor: swap legs and recanonicalize."""
        bd = self.bd
        pairs = []
        for (e, wl, wr), c in self.terms.items():
            pairs.append((bd.pure(wr), bd.smash.basis_elem(e, wl), c))
        return bd.tensor_from_pairs(pairs)

    def counit_left(self) -> SmashElem:
        """Contract the left leg with the counit: sum s(eps(l)) r."""
        bd = self.bd
        out = bd.smash.zero()
        for (e, wl, wr), c in self.terms.items():
            if wl:
                continue
            a = PolyCoord.monomial(bd.smash.dim, bd.smash.order, e)
            out = out + bd.total(bd.source(a), bd.pure(wr)).scale(c)
        return out

    def counit_right(self) -> SmashElem:
        """Contract the right leg with the counit: sum t(eps(r)) l."""
        bd = self.bd
        out = bd.smash.zero()
        for (e, wl, wr), c in self.terms.items():
            if wr:
                continue
            out = out + bd.smash.basis_elem(e, wl).scale(c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorOverA):
            return NotImplemented
        return self.bd is other.bd and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        names = [g.name for g in self.bd.smash.rs.generators]
        parts = []
        for e, wl, wr in sorted(self.terms):
            c = self.terms[(e, wl, wr)]
            mono = " ".join(
                f"x{k}" if p == 1 else f"x{k}^{p}" for k, p in enumerate(e) if p
            ) or "1"
            left = " ".join(names[r] for r in wl) or "1"
            right = " ".join(names[r] for r in wr) or "1"
            parts.append(f"({c})*{mono}#{left} (x)A 1#{right}")
        return " + ".join(parts)


class Tensor3OverA:
    """Canonical threefold tensor: middle and right factors are pure."""

    __slots__ = ("bd", "terms")

    def __init__(self, bd: Bialgebroid, terms: dict):
        self.bd = bd
        self.terms = terms

    def _check(self, other):
        if self.bd is not other.bd:
            raise ValueError("tensors over different bialgebroids")

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, -c)
        return Tensor3OverA(self.bd, out)

    def mul(self, other: "Tensor3OverA") -> "Tensor3OverA":
        self._check(other)
        bd = self.bd
        triples = []
        for (e1, w1, m1, r1), c1 in self.terms.items():
            l1 = bd.smash.basis_elem(e1, w1)
            for (e2, w2, m2, r2), c2 in other.terms.items():
                l = bd.total(l1, bd.smash.basis_elem(e2, w2))
                m = bd.total(bd.pure(m1), bd.pure(m2))
                r = bd.total(bd.pure(r1), bd.pure(r2))
                triples.append((l, m, r, c1 * c2))
        return bd.tensor_from_triples(triples)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Tensor3OverA):
            return NotImplemented
        return self.bd is other.bd and self.terms == other.terms


def _two_leg_to_tensor3(bd: Bialgebroid, p: NCPoly, legs) -> Tensor3OverA:
    """Shift a two-leg Hopf element into two slots of the threefold tensor."""
    out: dict = {}
    zero_exp = bd._zero_exp
    slots = {legs[0]: 1, legs[1]: 2}
    for word, c in p.terms.items():
        words = [(), (), ()]
        for pos, src in slots.items():
            words[pos - 1] = leg_word(word, src)
        _acc(out, (zero_exp, words[0], words[1], words[2]), c)
    return Tensor3OverA(bd, _strip(out))


def delta_left(bd: Bialgebroid, T: TensorOverA) -> Tensor3OverA:
    """(coproduct (x) id) on a canonical tensor."""
    out: dict = {}
    for (e, wl, wr), c in T.terms.items():
        inner = bd.coproduct(bd.smash.basis_elem(e, wl))
        for (e2, w2, r2), c2 in inner.terms.items():
            _acc(out, (e2, w2, r2, wr), c * c2)
    return Tensor3OverA(bd, _strip(out))


def delta_right(bd: Bialgebroid, T: TensorOverA) -> Tensor3OverA:
    """(id (x) coproduct) on a canonical tensor."""
    triples = []
    for (e, wl, wr), c in T.terms.items():
        left = bd.smash.basis_elem(e, wl)
        inner = bd.coproduct(bd.pure(wr))
        for (e2, w2, r2), c2 in inner.terms.items():
            triples.append((left, bd.smash.basis_elem(e2, w2), bd.pure(r2), c * c2))
    return bd.tensor_from_triples(triples)


def tensor_over_A_normalize(raw, bd: Bialgebroid) -> TensorOverA:
    """Canonical form of a raw list of (left, right) carrier pairs."""
    return bd.tensor_from_pairs(raw)


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


def _strip(d):
    return {k: v for k, v in d.items() if not v.is_zero()}


# -- the smash-product bialgebroid --------------------------------------


def bm_bialgebroid(smash: SmashAlgebra, rmatrix: NCPoly | None = None,
                   check_degree: int = 2) -> Bialgebroid:
    """Bialgebroid on the undeformed smash product.

    ``rmatrix`` defaults to the unit, the triangular structure of the
    cocommutative case.  Construction is refused when the base fails braided
    commutativity for the given R-matrix.
    """
    if rmatrix is None:
        rmatrix = NCPoly.one(smash.rs, 2)
    total = smash.product(None)
    return _bm_build("smash-bialgebroid", smash, total, rmatrix,
                     total.delta, check_degree)


def bm_bialgebroid_twisted(smash: SmashAlgebra, twist: Twist,
                           check_degree: int = 2) -> Bialgebroid:
    """Bialgebroid on the twist-deformed smash product.

    The R-matrix is the twisted one generated by the twist, the base product
    is the star product, and the Sweedler legs come from the twisted
    coproduct.
    """
    rmatrix = r_matrix_from_twist(smash.bialg, twist)
    total = smash.product(twist)
    return _bm_build("twisted-smash-bialgebroid", smash, total, rmatrix,
                     total.delta, check_degree)


def _bm_build(name, smash, total, rmatrix, hdelta, check_degree):
    star = total.star

    if check_degree:
        braided = check_braided_commutativity(star, rmatrix, check_degree)
        if not braided.ok():
            label, res = braided.witness()
            raise ValueError(
                f"base is not braided commutative for the given R-matrix "
                f"({label}: {res!r}); construction refused"
            )

    def source(a: PolyCoord) -> SmashElem:
        return smash.coord_elem(a)

    trivial_r = rmatrix == NCPoly.one(smash.rs, 2)

    def target(a: PolyCoord) -> SmashElem:
        if trivial_r:
            return smash.coord_elem(a)
        return coaction(smash, rmatrix, a)

    def counit(m: SmashElem) -> PolyCoord:
        out = {}
        for (e, w), c in m.terms.items():
            if not w:
                out[e] = c
        return PolyCoord(smash.dim, smash.order, out)

    return Bialgebroid(name, smash, star, total, source, target, counit,
                       hdelta=hdelta, rmatrix=rmatrix)


# -- shifting Hopf data into the bialgebroid ------------------------------


class ShiftedTwist:
    """A Hopf twist transported to the tensor square over the base."""

    def __init__(self, bd: Bialgebroid, forward: TensorOverA, inverse: TensorOverA,
                 hopf_twist: Twist | None = None):
        self.bd = bd
        self.forward = forward
        self.inverse = inverse
        self.hopf_twist = hopf_twist


def shift_two_leg(bd: Bialgebroid, p: NCPoly) -> TensorOverA:
    """(1 (x) p_1) (x)_A (1 (x) p_2) for a two-leg Hopf element."""
    out: dict = {}
    zero_exp = bd._zero_exp
    for word, c in p.terms.items():
        _acc(out, (zero_exp, leg_word(word, 1), leg_word(word, 2)), c)
    return TensorOverA(bd, _strip(out))


def shift_twist(bd: Bialgebroid, twist: Twist, validate: bool = True) -> ShiftedTwist:
    """Transport a twist to the bialgebroid level and re-verify its laws."""
    forward = shift_two_leg(bd, twist.F)
    inverse = shift_two_leg(bd, twist.F_inv)
    shifted = ShiftedTwist(bd, forward, inverse, twist)
    if validate:
        report = shifted_twist_residuals(bd, shifted)
        for name, rep in report.items():
            if not rep.ok():
                raise InvalidTwistError(f"shifted twist fails {name}")
    return shifted


def shifted_twist_residuals(bd: Bialgebroid, shifted: ShiftedTwist) -> dict:
    """Inverse, cocycle and normalization laws at the bialgebroid level."""
    F, Fi = shifted.forward, shifted.inverse
    unit2 = bd.tensor_unit()
    inv = ResidualReport("shifted-inverse")
    r1 = F.mul(Fi) - unit2
    inv.record("F Finv", not r1.is_zero(), r1)
    r2 = Fi.mul(F) - unit2
    inv.record("Finv F", not r2.is_zero(), r2)

    coc = ResidualReport("shifted-cocycle")
    f12 = _tensor3_embed_12(bd, F)
    f23 = _tensor3_embed_23(bd, F)
    lhs = f12.mul(delta_left(bd, F))
    rhs = f23.mul(delta_right(bd, F))
    res = lhs - rhs
    coc.record("cocycle", not res.is_zero(), res)
    fi12 = _tensor3_embed_12(bd, Fi)
    fi23 = _tensor3_embed_23(bd, Fi)
    ires = delta_left(bd, Fi).mul(fi12) - delta_right(bd, Fi).mul(fi23)
    coc.record("inverse-cocycle", not ires.is_zero(), ires)

    nor = ResidualReport("shifted-normalization")
    unit = bd.unit()
    for label, elem in (("twist", F), ("inverse", Fi)):
        le = elem.counit_left() - unit
        nor.record(f"{label} left counit", not le.is_zero(), le)
        re = elem.counit_right() - unit
        nor.record(f"{label} right counit", not re.is_zero(), re)

    return {"inverse": inv, "cocycle": coc, "normalization": nor}


def _tensor3_embed_12(bd: Bialgebroid, T: TensorOverA) -> Tensor3OverA:
    out = {}
    for (e, wl, wr), c in T.terms.items():
        _acc(out, (e, wl, wr, ()), c)
    return Tensor3OverA(bd, _strip(out))


def _tensor3_embed_23(bd: Bialgebroid, T: TensorOverA) -> Tensor3OverA:
    triples = []
    for (e, wl, wr), c in T.terms.items():
        triples.append((bd.unit(), bd.smash.basis_elem(e, wl), bd.pure(wr), c))
    return bd.tensor_from_triples(triples)


def shift_rmatrix(bd: Bialgebroid, R: NCPoly) -> TensorOverA:
    """(1 (x) R_1) (x)_A (1 (x) R_2)."""
    return shift_two_leg(bd, R)


def check_qt_shifted(bd: Bialgebroid, R: NCPoly, degree: int = 2) -> dict:
    """The shifted R-matrix keeps its coproduct and counit laws but loses the
    intertwining property; report both, with a witness for the loss.

    Returns reports for the preserved identities, the computed/closed-form
    cross-check of both intertwining expressions, and either a witness basis
    element where they differ or None when no witness exists up to the sweep
    degree.
    """
    smash = bd.smash
    Rt = shift_rmatrix(bd, R)
    Rt_inv = shift_two_leg(bd, inv_unipotent(R))

    preserved = ResidualReport("shifted-qt-preserved")
    r13 = _two_leg_to_tensor3(bd, R, (1, 3))
    r23 = _two_leg_to_tensor3(bd, R, (2, 3))
    r12 = _two_leg_to_tensor3(bd, R, (1, 2))
    res = delta_left(bd, Rt) - r13.mul(r23)
    preserved.record("hexagon-left", not res.is_zero(), res)
    res = delta_right(bd, Rt) - r13.mul(r12)
    preserved.record("hexagon-right", not res.is_zero(), res)
    unit = bd.unit()
    res = Rt.counit_left() - unit
    preserved.record("counit-left", not res.is_zero(), res)
    res = Rt.counit_right() - unit
    preserved.record("counit-right", not res.is_zero(), res)

    closed = ResidualReport("shifted-qt-closed-forms")
    witness = None
    for elem in smash.spanning(degree):
        label = repr(elem)
        lhs = Rt.mul(bd.coproduct(elem)).mul(Rt_inv)
        rhs = bd.coproduct(elem).flip()
        if bd.hdelta is not None:
            lc = _qt2_closed_lhs(bd, R, elem)
            rc = _qt2_closed_rhs(bd, R, elem)
            dl = lhs - lc
            closed.record(f"lhs {label}", not dl.is_zero(), dl)
            dr = rhs - rc
            closed.record(f"rhs {label}", not dr.is_zero(), dr)
        diff = lhs - rhs
        if witness is None and not diff.is_zero():
            witness = (label, diff)
    return {"preserved": preserved, "closed_forms": closed, "witness": witness}


def _qt2_closed_lhs(bd: Bialgebroid, R: NCPoly, m: SmashElem) -> TensorOverA:
    """((R_1 on a) (x) L_(2)) (x)_A (1 (x) R_2 L_(1)) summed over terms."""
    smash = bd.smash
    out: dict = {}
    for (e, w), c in m.terms.items():
        for w1, w2, cd in bd.hdelta.word_splits(w):
            for rword, cr in R.terms.items():
                apoly = smash.rep.act_word(leg_word(rword, 1), e)
                if apoly.is_zero():
                    continue
                hier = smash.rs.normalize_word(
                    tuple((0, r) for r in leg_word(rword, 2) + w1)
                )
                coeff = c * cd * cr
                for (e2, c2) in apoly.terms.items():
                    for hw, ch in hier.items():
                        _acc(out, (e2, w2, tuple(r for _, r in hw)), coeff * c2 * ch)
    return TensorOverA(bd, _strip(out))


def _qt2_closed_rhs(bd: Bialgebroid, R: NCPoly, m: SmashElem) -> TensorOverA:
    """((R_2 on a) (x) R_1 L_(2)) (x)_A (1 (x) L_(1))."""
    smash = bd.smash
    out: dict = {}
    for (e, w), c in m.terms.items():
        for w1, w2, cd in bd.hdelta.word_splits(w):
            for rword, cr in R.terms.items():
                apoly = smash.rep.act_word(leg_word(rword, 2), e)
                if apoly.is_zero():
                    continue
                hier = smash.rs.normalize_word(
                    tuple((0, r) for r in leg_word(rword, 1) + w2)
                )
                coeff = c * cd * cr
                for (e2, c2) in apoly.terms.items():
                    for hw, ch in hier.items():
                        _acc(out, (e2, tuple(r for _, r in hw), w1), coeff * c2 * ch)
    return TensorOverA(bd, _strip(out))


# -- twisting a bialgebroid ----------------------------------------------


def xu_twist(bd: Bialgebroid, shifted: ShiftedTwist) -> Bialgebroid:
    """Deform a bialgebroid by a twistor.

    The total multiplication is untouched; the base product, source, target
    and coproduct are conjugated through the anchor action and the twistor
    factors, and the counit is unchanged.
    """
    if shifted.bd is not bd:
        raise ValueError("twistor was shifted into a different bialgebroid")
    Ft, Fi = shifted.forward, shifted.inverse
    smash = bd.smash

    anchor_cache: dict = {}

    def anchor_mono(e, wl, exp) -> PolyCoord:
        key = (e, wl, exp)
        cached = anchor_cache.get(key)
        if cached is None:
            cached = bd.anchor(
                smash.basis_elem(e, wl),
                PolyCoord.monomial(smash.dim, smash.order, exp),
            )
            anchor_cache[key] = cached
        return cached

    def anchor_poly(e, wl, a: PolyCoord) -> PolyCoord:
        out = PolyCoord.zero(smash.dim, smash.order)
        for exp, c in a.terms.items():
            out = out + anchor_mono(e, wl, exp).scale(c)
        return out

    zero_exp = (0,) * smash.dim

    def base(a: PolyCoord, b: PolyCoord) -> PolyCoord:
        out = PolyCoord.zero(smash.dim, smash.order)
        for (e, wl, wr), c in Fi.terms.items():
            la = anchor_poly(e, wl, a)
            if la.is_zero():
                continue
            rb = anchor_poly(zero_exp, wr, b)
            if rb.is_zero():
                continue
            out = out + bd.base(la, rb).scale(c)
        return out

    def source(a: PolyCoord) -> SmashElem:
        out = smash.zero()
        for (e, wl, wr), c in Fi.terms.items():
            la = anchor_poly(e, wl, a)
            if la.is_zero():
                continue
            out = out + bd.total(bd.source(la), bd.pure(wr)).scale(c)
        return out

    def target(a: PolyCoord) -> SmashElem:
        out = smash.zero()
        for (e, wl, wr), c in Fi.terms.items():
            ra = anchor_poly(zero_exp, wr, a)
            if ra.is_zero():
                continue
            out = out + bd.total(bd.target(ra), smash.basis_elem(e, wl)).scale(c)
        return out

    new_bd = Bialgebroid(
        f"{bd.name}-twisted", smash, base, bd.total, source, target, bd.counit,
        right_split_term=None, hdelta=None, rmatrix=None, coproduct=None,
    )

    def right_split(exp, word):
        items = []
        tail = bd.pure(word)
        for (e, wl, wr), c in Ft.terms.items():
            apoly = anchor_mono(e, wl, exp)
            if apoly.is_zero():
                continue
            relem = bd.total(bd.pure(wr), tail)
            for (er2, wr2), cr2 in relem.terms.items():
                if any(er2):
                    raise ValueError("twistor right leg is not pure")
                items.append((apoly, wr2, c * cr2))
        return items

    def coproduct(m: SmashElem) -> TensorOverA:
        inner = bd.coproduct(m).mul(Fi)
        pairs = []
        for (e, wl, wr), c in inner.terms.items():
            l0 = smash.basis_elem(e, wl)
            r0 = bd.pure(wr)
            for (ef, flw, frw), cf in Ft.terms.items():
                pairs.append((
                    bd.total(smash.basis_elem(ef, flw), l0),
                    bd.total(bd.pure(frw), r0),
                    c * cf,
                ))
        return new_bd.tensor_from_pairs(pairs)

    new_bd._right_split = right_split
    new_bd._coproduct = coproduct
    return new_bd


# -- axiom suite ----------------------------------------------------------


def check_bialgebroid_axioms(bd: Bialgebroid, degree: int = 2, seed: int = 20259,
                             pair_samples: int = 20) -> dict:
    """Full residual sweep of the bialgebroid laws.

    Source/target algebra laws, coassociativity over the base tensor,
    invariance of coproduct images, multiplicativity of the coproduct on
    representative pairs, and the three counit laws, all over spanning
    elements up to the given degree.
    """
    import random

    smash = bd.smash
    order = smash.order
    monos = [
        PolyCoord.monomial(smash.dim, order, e)
        for e in monomials_up_to(smash.dim, degree)
    ]
    span = smash.spanning(degree)

    maps = ResidualReport("source-target-laws")
    for a in monos:
        for b in monos:
            res = bd.total(bd.source(a), bd.source(b)) - bd.source(bd.base(a, b))
            maps.record(f"s hom {a!r},{b!r}", not res.is_zero(), res)
            res = bd.total(bd.target(b), bd.target(a)) - bd.target(bd.base(a, b))
            maps.record(f"t antihom {a!r},{b!r}", not res.is_zero(), res)
            res = bd.total(bd.source(a), bd.target(b)) - bd.total(
                bd.target(b), bd.source(a)
            )
            maps.record(f"s/t commute {a!r},{b!r}", not res.is_zero(), res)

    coassoc = ResidualReport("coassociativity")
    for m in span:
        T = bd.coproduct(m)
        res = delta_left(bd, T) - delta_right(bd, T)
        coassoc.record(repr(m), not res.is_zero(), res)

    takeuchi = ResidualReport("takeuchi-invariance")
    coord_gens = [
        PolyCoord.coord(smash.dim, order, mu) for mu in range(smash.dim)
    ]
    for m in span:
        T = bd.coproduct(m)
        for mu, a in enumerate(coord_gens):
            ta, sa = bd.target(a), bd.source(a)
            left_pairs = []
            right_pairs = []
            for (e, wl, wr), c in T.terms.items():
                l = smash.basis_elem(e, wl)
                r = bd.pure(wr)
                left_pairs.append((bd.total(l, ta), r, c))
                right_pairs.append((l, bd.total(r, sa), c))
            res = bd.tensor_from_pairs(left_pairs) - bd.tensor_from_pairs(right_pairs)
            takeuchi.record(f"{m!r} against x{mu}", not res.is_zero(), res)

    rng = random.Random(seed)
    pairs = [(u, v) for u in span[: smash.dim + 1] for v in span[: smash.dim + 1]]
    pool = [(u, v) for u in span for v in span]
    for _ in range(min(pair_samples, len(pool))):
        pairs.append(pool[rng.randrange(len(pool))])

    multiplicative = ResidualReport("coproduct-multiplicative")
    counit_product = ResidualReport("counit-product-law")
    for u, v in pairs:
        uv = bd.total(u, v)
        res = bd.coproduct(uv) - bd.coproduct(u).mul(bd.coproduct(v))
        multiplicative.record(f"{u!r} * {v!r}", not res.is_zero(), res)
        eps_uv = bd.counit(uv)
        res_s = eps_uv - bd.counit(bd.total(u, bd.source(bd.counit(v))))
        counit_product.record(f"s-form {u!r},{v!r}", not res_s.is_zero(), res_s)
        res_t = eps_uv - bd.counit(bd.total(u, bd.target(bd.counit(v))))
        counit_product.record(f"t-form {u!r},{v!r}", not res_t.is_zero(), res_t)

    counit_laws = ResidualReport("counit-coproduct-law")
    one_a = PolyCoord.one(smash.dim, order)
    res = bd.counit(bd.unit()) - one_a
    counit_laws.record("counit of unit", not res.is_zero(), res)
    for m in span:
        T = bd.coproduct(m)
        left = smash.zero()
        right = smash.zero()
        for (e, wl, wr), c in T.terms.items():
            l = smash.basis_elem(e, wl)
            r = bd.pure(wr)
            left = left + bd.total(bd.source(bd.counit(l)), r).scale(c)
            right = right + bd.total(bd.target(bd.counit(r)), l).scale(c)
        res = left - m
        counit_laws.record(f"s(eps(m1))m2 on {m!r}", not res.is_zero(), res)
        res = right - m
        counit_laws.record(f"t(eps(m2))m1 on {m!r}", not res.is_zero(), res)

    return {
        "maps": maps,
        "coassociativity": coassoc,
        "takeuchi": takeuchi,
        "multiplicative": multiplicative,
        "counit-product": counit_product,
        "counit-coproduct": counit_laws,
    }


# -- the main equivalence harness ------------------------------------------


def verify_theorem(smash: SmashAlgebra, twist: Twist, degree: int = 2,
                   check_degree: int = 2) -> dict:
    """Compare the twisted-smash bialgebroid with the twistor-deformed one.

    Builds both sides, then checks that the base products agree, that phi is
    an isomorphism of total algebras, that it intertwines source, target and
    counit, and that the coproducts correspond under phi (x) phi, first on
    the two generator families and then on general spanning monomials.
    """
    lhs = bm_bialgebroid_twisted(smash, twist, check_degree=check_degree)
    bd0 = bm_bialgebroid(smash, check_degree=check_degree)
    shifted = shift_twist(bd0, twist)
    rhs = xu_twist(bd0, shifted)

    order = smash.order
    monos = [
        PolyCoord.monomial(smash.dim, order, e)
        for e in monomials_up_to(smash.dim, degree)
    ]

    base_rep = ResidualReport("base-products")
    for a in monos:
        for b in monos:
            res = lhs.base(a, b) - rhs.base(a, b)
            base_rep.record(f"{a!r} * {b!r}", not res.is_zero(), res)

    total_rep = verify_phi_homomorphism(smash, twist, degree)

    st_rep = ResidualReport("source-target-maps")
    for a in monos:
        res = phi(smash, twist, lhs.source(a)) - rhs.source(a)
        st_rep.record(f"source {a!r}", not res.is_zero(), res)
        res = phi(smash, twist, lhs.target(a)) - rhs.target(a)
        st_rep.record(f"target {a!r}", not res.is_zero(), res)

    span = smash.spanning(degree)
    counit_rep = ResidualReport("counit-intertwined")
    for u in span:
        res = rhs.counit(phi(smash, twist, u)) - lhs.counit(u)
        counit_rep.record(repr(u), not res.is_zero(), res)

    def transported(u: SmashElem) -> TensorOverA:
        T = lhs.coproduct(u)
        pairs = []
        for (e, wl, wr), c in T.terms.items():
            pairs.append((
                phi(smash, twist, smash.basis_elem(e, wl)),
                phi(smash, twist, lhs.pure(wr)),
                c,
            ))
        return rhs.tensor_from_pairs(pairs)

    cases_rep = ResidualReport("coproduct-generator-cases")
    for w in spanning_words(smash.rs, degree):
        if not w:
            continue
        u = smash.basis_elem((0,) * smash.dim, w)
        res = rhs.coproduct(phi(smash, twist, u)) - transported(u)
        cases_rep.record(f"Hopf generator {u!r}", not res.is_zero(), res)
    for e in monomials_up_to(smash.dim, degree):
        u = smash.basis_elem(e, ())
        res = rhs.coproduct(phi(smash, twist, u)) - transported(u)
        cases_rep.record(f"coordinate {u!r}", not res.is_zero(), res)

    general_rep = ResidualReport("coproduct-general")
    for u in span:
        res = rhs.coproduct(phi(smash, twist, u)) - transported(u)
        general_rep.record(repr(u), not res.is_zero(), res)

    return {
        "base-products": base_rep,
        "total-products": total_rep,
        "source-target-maps": st_rep,
        "counit": counit_rep,
        "coproduct-cases": cases_rep,
        "coproduct-general": general_rep,
        "_lhs": lhs,
        "_rhs": rhs,
    }
