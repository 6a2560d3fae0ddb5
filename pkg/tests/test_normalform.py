from fractions import Fraction

import numpy as np
import pytest

from lgallee.algebra import QuadraticNumber
from lgallee.model import Params
from lgallee.normalform import (CODIM_HIGH, codimension, cusp_locus, cusp_report_chain, cusp_report_closed, eta0,
                                nilpotent_point, rho1, unfolding_chain, unfolding_jacobian)
from lgallee.verify import cbar_matches, random_locus_point, random_translated_pair

F = Fraction


def test_eta0_at_three_halves():
    assert eta0(F(3, 2)) == F(89, 361)


def test_cusp_locus_values():
    locus = cusp_locus(F(3, 2), F(89, 361))
    assert (locus.alpha0, locus.beta0, locus.delta0) == (F(49, 361), F(12250, 130321), F(63, 722))
    assert locus.in_admissible_region
    assert cusp_locus(F(3, 2)) == locus


def test_cusp_locus_equilibrium_is_on_the_predator_isocline():
    locus = cusp_locus(F(3, 2), F(1, 10))
    x, y = locus.equilibrium
    assert x > 0 and y == x + locus.eta


@pytest.mark.parametrize("gamma, eta", [(F(0), F(1, 10)), (F(2), F(1, 2)), (F(2), F(-1, 10))])
def test_cusp_locus_rejects_invalid_input(gamma, eta):
    with pytest.raises(ValueError):
        cusp_locus(gamma, eta)


def test_nilpotent_point_requires_positive_varsigma():
    with pytest.raises(ValueError):
        nilpotent_point(F(1, 2), F(1), F(1, 2))


def test_codimension_rules():
    assert codimension(F(0), F(1)) == CODIM_HIGH
    assert codimension(F(-1), F(2)) == 2
    assert codimension(F(-1), F(0), QuadraticNumber(0, 1, 2)) == 3
    assert codimension(F(-1), F(0), QuadraticNumber(0), QuadraticNumber(0, -3, 2)) == 4
    assert codimension(F(-1), F(0), QuadraticNumber(0), QuadraticNumber(0)) == CODIM_HIGH
    with pytest.raises(ValueError):
        codimension(F(-1), F(0))


@pytest.mark.parametrize("params, codim", [
    (cusp_locus(F(3, 2), F(89, 361)).params, 4),
    (cusp_locus(F(3, 2), F(1, 10)).params, 3),
    (nilpotent_point(F(1, 10), F(1), F(1, 10)), 2),
])
def test_codimension_ladder(params, codim):
    assert cusp_report_closed(params).codim == codim
    assert cusp_report_chain(params).codim == codim


def test_organizing_center_has_vanishing_m():
    p = cusp_locus(F(3, 2)).params
    report = cusp_report_closed(p)
    assert report.d11 == 0 and report.d20 < 0
    assert report.M == 0 and report.N != 0
    assert report.rho1 == rho1(F(3, 2), F(89, 361)) == 0


@pytest.mark.parametrize("params", [
    cusp_locus(F(3, 2), F(89, 361)).params,
    cusp_locus(F(3, 2), F(1, 10)).params,
    nilpotent_point(F(1, 10), F(1), F(1, 10)),
])
def test_chain_agrees_with_closed_forms(params):
    closed, chain = cusp_report_closed(params), cusp_report_chain(params)
    assert (closed.d20, closed.d11) == (chain.d20, chain.d11)
    assert (closed.M, closed.N) == (chain.M, chain.N)


def test_chain_agrees_on_random_locus_points():
    rng = np.random.default_rng(7)
    for _ in range(3):
        p = random_locus_point(rng).params
        closed, chain = cusp_report_closed(p), cusp_report_chain(p)
        assert (closed.d20, closed.d11, closed.M, closed.N) == (chain.d20, chain.d11, chain.M, chain.N)


def test_cusp_reports_need_a_nilpotent_point():
    coextinction = Params(F(1, 2), F(1), F(1), F(1, 2), F(1, 10))
    with pytest.raises(ValueError, match="nilpotent"):
        cusp_report_closed(coextinction)
    with pytest.raises(ValueError, match="exact"):
        cusp_report_chain(Params(0.5, 1.0, 1.0, 0.5, 0.1))


def test_report_dict_carries_floats_for_m_and_n():
    d = cusp_report_closed(cusp_locus(F(3, 2), F(1, 10)).params).to_dict()
    assert d["codim"] == 3 and d["source"] == "closed"
    assert isinstance(d["M_float"], float) and d["M_float"] != 0


def test_uv_closed_forms_match_the_transformation():
    rng = np.random.default_rng(11)
    for _ in range(4):
        assert cbar_matches(*random_translated_pair(rng))


def test_unfolding_chain_vanishes_at_the_organizing_center():
    chi = unfolding_chain(cusp_locus(F(3, 2)), (0, 0, 0, 0))
    assert len(chi) == 4
    assert all(abs(c) < 1e-15 for c in chi)


def test_unfolding_chain_moves_off_the_organizing_center():
    chi = unfolding_chain(cusp_locus(F(3, 2)), (1e-3, 0, 0, 0))
    assert max(abs(c) for c in chi) > 1e-12


@pytest.mark.slow
def test_unfolding_is_transversal_at_the_organizing_center():
    report = unfolding_jacobian(F(3, 2))
    assert report.jacobian.shape == (4, 4)
    assert report.nonzero
    assert report.to_dict()["gamma"] == "3/2"
