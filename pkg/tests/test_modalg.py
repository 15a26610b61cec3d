"""The coordinate module algebra: actions, star products, braided laws."""

import random

import pytest

from smashtwist.hopf import r_matrix_from_twist, trivial_twist
from smashtwist.modalg import (
    PolyCoord,
    RepData,
    StarProduct,
    act,
    check_braided_commutativity,
    check_module_algebra,
    coaction,
    monomials_up_to,
    star_commutator_table,
)
from smashtwist.ncpoly import NCPoly
from smashtwist.registry import materialize, preset
from smashtwist.scalars import GaussRational, TruncSeries


@pytest.fixture(scope="module")
def igl2():
    return materialize("igl2-abelian", order=3)


@pytest.fixture(scope="module")
def pw():
    return materialize("pw-jordanian", order=3)


def coords(prob):
    dim, order = prob.rep.dim, prob.rep.rs.order
    return [PolyCoord.coord(dim, order, mu) for mu in range(dim)]


def test_action_on_generators(igl2):
    rep = igl2.rep
    rs = rep.rs
    x0, x1 = coords(igl2)
    one = PolyCoord.one(2, rs.order)
    # momenta differentiate their own coordinate
    assert act(rep, NCPoly.gen(rs, "P0"), x0) == one
    assert act(rep, NCPoly.gen(rs, "P0"), x1).is_zero()
    # symmetry: L^mu_nu sends x^mu to -x^nu and kills the others
    assert act(rep, NCPoly.gen(rs, "L01"), x0) == -x1
    assert act(rep, NCPoly.gen(rs, "L01"), x1).is_zero()
    assert act(rep, NCPoly.gen(rs, "L11"), x1) == -x1


def test_action_leibniz(igl2):
    rep = igl2.rep
    rs = rep.rs
    x0, x1 = coords(igl2)
    assert act(rep, NCPoly.gen(rs, "P0"), x0 * x1) == x1
    # scalar part acts by scaling
    mixed = NCPoly.scalar(rs, 3) + NCPoly.gen(rs, "P0").scale(TruncSeries.h_power(1, rs.order))
    got = act(rep, mixed, x0)
    want = x0.scale(3) + PolyCoord.one(2, rs.order).scale(TruncSeries.h_power(1, rs.order))
    assert got == want
    assert act(rep, NCPoly.one(rs), x0 * x0) == x0 * x0


def test_action_is_representation(igl2):
    rep = igl2.rep
    rs = rep.rs
    rng = random.Random(9)
    names = [g.name for g in rs.generators]
    monos = monomials_up_to(2, 3)
    for _ in range(25):
        p = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        q = NCPoly.from_word(rs, [rng.choice(names) for _ in range(2)])
        a = PolyCoord.monomial(2, rs.order, rng.choice(monos))
        assert act(rep, p * q, a) == act(rep, p, act(rep, q, a))


def test_degree_bookkeeping(igl2):
    rep = igl2.rep
    rs = rep.rs
    for exp in monomials_up_to(2, 3):
        mono = PolyCoord.monomial(2, rs.order, exp)
        for name, shift in (("P0", -1), ("P1", -1), ("L01", 0), ("L11", 0)):
            out = act(rep, NCPoly.gen(rs, name), mono)
            for e in out.terms:
                assert sum(e) == sum(exp) + shift


def test_representation_validation_catches_corruption(igl2):
    pre = preset("igl2-abelian")
    bad = dict(pre.matrices)
    bad["L01"] = ((0, 1), (1, 0))  # not the matrix of L01 in this bracket table
    with pytest.raises(ValueError, match="representation"):
        RepData(igl2.rep.rs, bad, pre.momenta)
    rep = RepData(igl2.rep.rs, bad, pre.momenta, validate=False)
    assert not rep.representation_residuals().ok()


def test_module_algebra_residuals(igl2):
    report = check_module_algebra(igl2.rep, degree=2)
    assert report.ok()
    assert report.checked > 0


def test_module_algebra_negative_control(igl2):
    # a corrupted matrix keeps the letterwise Leibniz law but breaks the
    # compatibility of the action with the rewriting relations
    pre = preset("igl2-abelian")
    bad = dict(pre.matrices)
    bad["L01"] = ((0, 1), (1, 0))
    rep = RepData(igl2.rep.rs, bad, pre.momenta, validate=False)
    report = check_module_algebra(rep, degree=2)
    assert not report.ok()
    label, _ = report.witness()
    assert "relations" in label


def test_star_trivial_is_commutative_product(igl2):
    star = StarProduct(igl2.rep, trivial_twist(igl2.bialg))
    x0, x1 = coords(igl2)
    assert star(x0, x1) == x0 * x1
    assert star.twist is None


def test_star_kappa_relations(igl2):
    star = StarProduct(igl2.rep, igl2.twist)
    x0, x1 = coords(igl2)
    ih = TruncSeries.h_power(1, igl2.order, GaussRational(0, 1))
    assert star(x0, x1) - star(x1, x0) == x1.scale(ih)
    assert star(x1, x1) == x1 * x1


def test_star_table(igl2, pw):
    triv_table = star_commutator_table(StarProduct(igl2.rep, trivial_twist(igl2.bialg)))
    assert all(entry.is_zero() for row in triv_table for entry in row)
    for prob in (igl2, pw):
        table = star_commutator_table(StarProduct(prob.rep, prob.twist))
        ih = TruncSeries.h_power(1, prob.order, GaussRational(0, 1))
        x1 = PolyCoord.coord(prob.rep.dim, prob.order, 1)
        assert table[0][1] == x1.scale(ih)
        assert table[1][1].is_zero()
        assert table[1][0] == -table[0][1]


def test_star_unit_and_associativity(igl2, pw):
    for prob in (igl2, pw):
        star = StarProduct(prob.rep, prob.twist)
        one = PolyCoord.one(prob.rep.dim, prob.order)
        monos = [
            PolyCoord.monomial(prob.rep.dim, prob.order, e)
            for e in monomials_up_to(prob.rep.dim, 2)
        ]
        for a in monos:
            assert star(one, a) == a
            assert star(a, one) == a
        rng = random.Random(13)
        for _ in range(20):
            a, b, c = (rng.choice(monos) for _ in range(3))
            assert star(star(a, b), c) == star(a, star(b, c))


def test_braided_commutativity(igl2, pw):
    for prob in (igl2, pw):
        star = StarProduct(prob.rep, prob.twist)
        R = r_matrix_from_twist(prob.bialg, prob.twist)
        assert check_braided_commutativity(star, R, degree=2).ok()
    # plain product with trivial R is plainly commutative
    star0 = StarProduct(igl2.rep, None)
    assert check_braided_commutativity(star0, NCPoly.one(igl2.bialg.rs, 2), 2).ok()


def test_braided_commutativity_negative_control(igl2):
    # the deformed product with the WRONG R-matrix fails at order h
    star = StarProduct(igl2.rep, igl2.twist)
    report = check_braided_commutativity(star, NCPoly.one(igl2.bialg.rs, 2), degree=2)
    assert not report.ok()
    _, res = report.witness()
    assert min(c.lowest_order() for c in res.terms.values()) == 1


def test_coaction(igl2):
    alg = igl2.smash
    rs = igl2.bialg.rs
    x0 = PolyCoord.coord(2, rs.order, 0)
    # trivial R: delta(a) = a (x) 1
    got = coaction(alg, NCPoly.one(rs, 2), x0)
    assert got == alg.coord_elem(x0)
    R = r_matrix_from_twist(igl2.bialg, igl2.twist)
    mixed = coaction(alg, R, x0)
    # leading term a (x) 1 plus h-corrections with nontrivial Hopf factors
    assert mixed.terms[((1, 0), ())] == TruncSeries.one(rs.order)
    assert any(w for (_, w) in mixed.terms)
    # counit collapse: contracting the Hopf leg returns the input
    collapsed = PolyCoord(2, rs.order, {
        e: c for (e, w), c in mixed.terms.items() if not w
    })
    assert collapsed == x0
