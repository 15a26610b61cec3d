"""Shipped presets and their validation."""

import pytest

from smashtwist.modalg import PolyCoord, StarProduct, star_commutator_table
from smashtwist.registry import (
    ExamplePreset,
    InvalidPresetError,
    PRESET_NAMES,
    materialize,
    preset,
    preset_to_config,
    validate,
)
from smashtwist.scalars import GaussRational, TruncSeries


def test_all_presets_validate():
    for name in PRESET_NAMES:
        report = validate(name)
        assert all(rep.ok() for rep in report.values()), name


def test_unknown_preset():
    with pytest.raises(KeyError, match="unknown preset"):
        preset("su5-mystery")


def test_trivial_preset_is_trivial():
    prob = materialize("trivial")
    assert prob.twist.is_trivial()
    table = star_commutator_table(StarProduct(prob.rep, prob.twist))
    assert all(entry.is_zero() for row in table for entry in row)


def test_igl2_table_reproduces_deformed_coordinates():
    prob = materialize("igl2-abelian", order=3)
    table = star_commutator_table(StarProduct(prob.rep, prob.twist))
    ih = TruncSeries.h_power(1, 3, GaussRational(0, 1))
    x1 = PolyCoord.coord(2, 3, 1)
    assert table[0][1] == x1.scale(ih)
    assert table[1][0] == -x1.scale(ih)
    assert table[0][0].is_zero() and table[1][1].is_zero()


def test_jordanian_matches_abelian_at_first_order():
    a = materialize("igl2-abelian", order=3)
    j = materialize("pw-jordanian", order=3)
    ta = star_commutator_table(StarProduct(a.rep, a.twist))
    tj = star_commutator_table(StarProduct(j.rep, j.twist))
    for mu in range(2):
        for nu in range(2):
            ca = {e: c.coefficient(1) for e, c in ta[mu][nu].terms.items()}
            cj = {e: c.coefficient(1) for e, c in tj[mu][nu].terms.items()}
            assert ca == cj


def test_perturbed_preset_fails_with_witness():
    pre = preset("igl2-abelian")
    bad_brackets = dict(pre.brackets)
    bad_brackets[("L00", "L01")] = ((1, "L01"), (1, "P1"))
    bad = ExamplePreset(
        name="bad", description="", order=2, degree=2,
        generators=pre.generators, brackets=bad_brackets,
        matrices=pre.matrices, momenta=pre.momenta, exponent=pre.exponent,
    )
    with pytest.raises(InvalidPresetError, match="jacobi"):
        validate(bad)


def test_perturbed_matrix_fails():
    pre = preset("igl2-abelian")
    bad_m = dict(pre.matrices)
    bad_m["L00"] = ((0, 1), (0, 0))
    bad = ExamplePreset(
        name="bad", description="", order=2, degree=2,
        generators=pre.generators, brackets=pre.brackets,
        matrices=bad_m, momenta=pre.momenta, exponent=pre.exponent,
    )
    with pytest.raises(InvalidPresetError, match="representation"):
        validate(bad)


def test_igl4_spatial_trace_twist():
    prob = materialize("igl4-abelian", order=2)
    table = star_commutator_table(StarProduct(prob.rep, prob.twist))
    ih = TruncSeries.h_power(1, 2, GaussRational(0, 1))
    for k in range(1, 4):
        xk = PolyCoord.coord(4, 2, k)
        assert table[0][k] == xk.scale(ih)
    for j in range(1, 4):
        for k in range(1, 4):
            assert table[j][k].is_zero()


def test_preset_export_round_trip():
    from smashtwist.cli import config_to_preset, validate_config

    for name in ("igl2-abelian", "pw-jordanian", "heisenberg"):
        cfg = preset_to_config(name)
        assert validate_config(cfg) == []
        back = config_to_preset(cfg)
        orig = materialize(name)
        redo = materialize(back)
        # fresh context, so compare the coefficient data
        assert redo.twist.F.terms == orig.twist.F.terms
        assert redo.bialg.rs.names() == orig.bialg.rs.names()
