"""Coproducts, counits, twists, R-matrices."""

import random

import pytest

from smashtwist.hopf import (
    CoproductMap,
    InvalidTwistError,
    Twist,
    check_cocycle,
    check_quasitriangular,
    classical_r_extract,
    inv_unipotent,
    r_matrix_from_twist,
    trivial_twist,
    twist_from_exponent,
    twisted_coproduct,
)
from smashtwist.ncpoly import NCPoly
from smashtwist.registry import materialize, preset, twist_exponent
from smashtwist.scalars import GaussRational, TruncSeries


@pytest.fixture(scope="module")
def igl2():
    return materialize("igl2-abelian", order=3)


@pytest.fixture(scope="module")
def pw():
    return materialize("pw-jordanian", order=3)


def test_coproduct_examples(igl2):
    b = igl2.bialg
    rs = b.rs
    assert b.coproduct(NCPoly.one(rs)) == NCPoly.one(rs, 2)
    p0 = NCPoly.gen(rs, "P0")
    primitive = (
        NCPoly.gen(rs, "P0", leg=1, nlegs=2) + NCPoly.gen(rs, "P0", leg=2, nlegs=2)
    )
    assert b.coproduct(p0) == primitive
    # algebra map: coproduct of P0^2 expands binomially
    sq = b.coproduct(p0 * p0)
    want = primitive * primitive
    assert sq == want
    left = NCPoly.gen(rs, "P0", leg=1, nlegs=2)
    right = NCPoly.gen(rs, "P0", leg=2, nlegs=2)
    explicit = left * left + (left * right).scale(2) + right * right
    assert sq == explicit


def test_counit_examples(igl2):
    b = igl2.bialg
    rs = b.rs
    assert b.counit(NCPoly.one(rs)) == TruncSeries.one(rs.order)
    assert b.counit(NCPoly.from_word(rs, ["P0", "L11"])).is_zero()
    mixed = NCPoly.scalar(rs, 3) + NCPoly.gen(rs, "P0").scale(TruncSeries.h_power(1, rs.order))
    assert b.counit(mixed) == TruncSeries.const(3, rs.order)


def test_alphabet_mismatch_rejected(igl2, pw):
    foreign = NCPoly.gen(pw.bialg.rs, "P0")
    with pytest.raises(ValueError, match="alphabet"):
        igl2.bialg.coproduct(foreign)
    with pytest.raises(ValueError, match="alphabet"):
        igl2.bialg.counit(foreign)


def test_coassociativity_and_counit_laws(igl2):
    b = igl2.bialg
    rs = b.rs
    rng = random.Random(8)
    names = [g.name for g in rs.generators]
    samples = [NCPoly.gen(rs, n) for n in names]
    for _ in range(6):
        samples.append(
            NCPoly.from_word(rs, [rng.choice(names) for _ in range(rng.randint(2, 3))])
        )
    for p in samples:
        cop = b.coproduct(p)
        lhs = b.coproduct_on_leg(cop, 1, (1, 2), 3, {2: 3})
        rhs = b.coproduct_on_leg(cop, 2, (2, 3), 3, {1: 1})
        assert lhs == rhs
        assert b.counit_on_leg(cop, 1) == p
        assert b.counit_on_leg(cop, 2) == p


def test_coproduct_multiplicative(igl2):
    b = igl2.bialg
    rs = b.rs
    rng = random.Random(21)
    names = [g.name for g in rs.generators]
    for _ in range(8):
        p = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        q = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        assert b.coproduct(p * q) == b.coproduct(p) * b.coproduct(q)


def test_twist_construction(igl2):
    b = igl2.bialg
    rs = b.rs
    tw = trivial_twist(b)
    assert tw.F == NCPoly.one(rs, 2)
    assert tw.is_trivial()
    with pytest.raises(ValueError, match="h\\^0"):
        twist_from_exponent(b, NCPoly.gen(rs, "P0", leg=1, nlegs=2))
    # an exponent violating the counit normalization is rejected
    bad = NCPoly.gen(rs, "P0", leg=2, nlegs=2).scale(TruncSeries.h_power(1, rs.order))
    with pytest.raises(InvalidTwistError):
        twist_from_exponent(b, bad)


def test_twist_inverse_two_sided(igl2, pw):
    for prob in (igl2, pw):
        one2 = NCPoly.one(prob.bialg.rs, 2)
        assert prob.twist.F * prob.twist.F_inv == one2
        assert prob.twist.F_inv * prob.twist.F == one2


def test_cocycle_residuals_zero(igl2, pw):
    for prob in (igl2, pw):
        res = check_cocycle(prob.bialg, prob.twist)
        assert res["cocycle"].is_zero()
        assert res["inverse-cocycle"].is_zero()
    res = check_cocycle(igl2.bialg, trivial_twist(igl2.bialg))
    assert res["cocycle"].is_zero() and res["inverse-cocycle"].is_zero()


def test_cocycle_negative_control(igl2):
    # a non-cocycle invertible element: exponent with non-commuting legs
    b = igl2.bialg
    rs = b.rs
    t = (
        NCPoly.gen(rs, "L01", leg=1, nlegs=2) * NCPoly.gen(rs, "L10", leg=2, nlegs=2)
    ).scale(TruncSeries.h_power(1, rs.order))
    tw = Twist(b, t.exp_truncated(), (-t).exp_truncated())
    res = check_cocycle(b, tw)
    assert not res["cocycle"].is_zero()


def test_twisted_coproduct_examples(igl2):
    b, tw = igl2.bialg, igl2.twist
    rs = b.rs
    triv = trivial_twist(b)
    p = NCPoly.from_word(rs, ["L01", "P1"])
    assert twisted_coproduct(b, triv, p) == b.coproduct(p)
    assert twisted_coproduct(b, tw, NCPoly.one(rs)) == NCPoly.one(rs, 2)
    # P0 commutes with both twist legs, so its coproduct is unchanged
    p0 = NCPoly.gen(rs, "P0")
    assert twisted_coproduct(b, tw, p0) == b.coproduct(p0)


def test_twisted_coproduct_p1_closed_form(igl2):
    # conjugating 1(x)P1 by exp(i h P0 (x) L11) dresses it with exp(i h P0):
    # Delta_F(P1) = P1(x)1 + sum_k (i h)^k/k! P0^k (x) P1
    b, tw = igl2.bialg, igl2.twist
    rs = b.rs
    got = twisted_coproduct(b, tw, NCPoly.gen(rs, "P1"))
    want = NCPoly.gen(rs, "P1", leg=1, nlegs=2)
    coeff = GaussRational(1)
    for k in range(rs.order + 1):
        word = NCPoly.from_word(rs, ["P0"] * k, nlegs=2, leg=1)
        tail = NCPoly.gen(rs, "P1", leg=2, nlegs=2)
        want = want + (word * tail).scale(TruncSeries.h_power(k, rs.order, coeff))
        coeff = coeff * GaussRational(0, 1) / GaussRational(k + 1)
    assert got == want


def test_twisted_coproduct_laws(igl2):
    b, tw = igl2.bialg, igl2.twist
    rs = b.rs
    delta = CoproductMap(b, tw)
    rng = random.Random(31)
    names = [g.name for g in rs.generators]
    samples = [NCPoly.gen(rs, n) for n in names[:3]]
    samples.append(NCPoly.from_word(rs, ["L11", "P0"]))
    for p in samples:
        cop = delta(p)
        # coassociativity via the cocycle identity
        assert delta.on_leg(cop, 1, (1, 2), 3, {2: 3}) == delta.on_leg(cop, 2, (2, 3), 3, {1: 1})
        # counit laws via the normalization
        assert b.counit_on_leg(cop, 1) == p
        assert b.counit_on_leg(cop, 2) == p
    for _ in range(5):
        p = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        q = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        assert delta(p * q) == delta(p) * delta(q)


def test_r_matrix_examples(igl2):
    b, tw = igl2.bialg, igl2.twist
    rs = b.rs
    assert r_matrix_from_twist(b, trivial_twist(b)) == NCPoly.one(rs, 2)
    R = r_matrix_from_twist(b, tw)
    # triangularity: R R_21 = 1
    assert R * R.swap_legs() == NCPoly.one(rs, 2)
    # abelian exponent t gives R = exp(t_21 - t) = exp(-2t + 2t_21)/..: verify directly
    t = twist_exponent(preset("igl2-abelian"), rs)
    want = (t.swap_legs() - t).exp_truncated()
    assert R == want


def test_r_matrix_antisymmetric_exponent_pattern():
    # for an exponent with t_21 = -t the R-matrix collapses to exp(2 t_21)
    prob = materialize("heisenberg", order=4)
    rs = prob.bialg.rs
    t = twist_exponent(preset("heisenberg"), rs)
    assert t.swap_legs() == -t
    R = r_matrix_from_twist(prob.bialg, prob.twist)
    assert R == t.swap_legs().scale(2).exp_truncated()


def test_classical_r_extract(igl2):
    b, tw = igl2.bialg, igl2.twist
    rs = b.rs
    r0, cybe0 = classical_r_extract(NCPoly.one(rs, 2))
    assert r0.is_zero() and cybe0.is_zero()
    R = r_matrix_from_twist(b, tw)
    r, cybe = classical_r_extract(R)
    # frozen from expanding F_21 F^{-1} to first order
    i = GaussRational(0, 1)
    want = (
        NCPoly.gen(rs, "L11", leg=1, nlegs=2) * NCPoly.gen(rs, "P0", leg=2, nlegs=2)
    ).scale(i) - (
        NCPoly.gen(rs, "P0", leg=1, nlegs=2) * NCPoly.gen(rs, "L11", leg=2, nlegs=2)
    ).scale(i)
    assert r == want
    assert cybe.is_zero()
    with pytest.raises(ValueError):
        classical_r_extract(NCPoly.gen(rs, "P0", leg=1, nlegs=2))


def test_classical_r_cybe_for_presets(igl2, pw):
    for prob in (igl2, pw):
        R = r_matrix_from_twist(prob.bialg, prob.twist)
        _, cybe = classical_r_extract(R)
        assert cybe.is_zero()


def test_quasitriangular_cocommutative(igl2):
    b = igl2.bialg
    res = check_quasitriangular(b, NCPoly.one(b.rs, 2), CoproductMap(b, None))
    assert all(v.is_zero() for v in res.values())


def test_quasitriangular_twisted(igl2, pw):
    for prob in (igl2, pw):
        b, tw = prob.bialg, prob.twist
        R = r_matrix_from_twist(b, tw)
        res = check_quasitriangular(b, R, CoproductMap(b, tw))
        assert all(v.is_zero() for v in res.values())


def test_quasitriangular_negative_control(igl2):
    # 1(x)1 + h X(x)Y is not an R-matrix: the hexagons fail at order h^2
    b = igl2.bialg
    rs = b.rs
    R = NCPoly.one(rs, 2) + (
        NCPoly.gen(rs, "L01", leg=1, nlegs=2) * NCPoly.gen(rs, "L10", leg=2, nlegs=2)
    ).scale(TruncSeries.h_power(1, rs.order))
    res = check_quasitriangular(b, R, CoproductMap(b, None))
    assert not res["hexagon-left"].is_zero()


def test_inv_unipotent(igl2):
    rs = igl2.bialg.rs
    R = r_matrix_from_twist(igl2.bialg, igl2.twist)
    assert inv_unipotent(R) * R == NCPoly.one(rs, 2)
    with pytest.raises(ValueError):
        inv_unipotent(NCPoly.gen(rs, "P0", leg=1, nlegs=2))
