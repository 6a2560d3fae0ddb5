from fractions import Fraction

import pytest

from lgallee.model import (DimensionalParams, Params, State, dimensional_vector_field, jacobian, nondimensionalize,
                           rescaled_jacobian, rescaled_vector_field, taylor_expansion, to_nondimensional_state,
                           trace_det, vector_field)

F = Fraction

COEXTINCTION = Params(alpha=F(1, 2), beta=F(1), gamma=F(1), delta=F(1, 2), eta=F(1, 10))


def test_from_mapping_exact_and_float():
    p = Params.from_mapping({"alpha": "1/2", "beta": "1", "gamma": "1", "delta": "1/2", "eta": "1/10"})
    assert p == COEXTINCTION
    assert p.is_exact
    q = Params.from_mapping({"alpha": "0.5", "beta": 1, "gamma": 1, "delta": 0.5, "eta": 0.1}, exact=False)
    assert not q.is_exact
    assert q.as_floats() == pytest.approx((0.5, 1.0, 1.0, 0.5, 0.1))


def test_from_mapping_rejects_bad_input():
    with pytest.raises(ValueError, match="missing"):
        Params.from_mapping({"alpha": "1/2"})
    with pytest.raises(ValueError):
        Params.from_mapping({"alpha": "0.5", "beta": "1", "gamma": "1", "delta": "1/2", "eta": "1/10"})


@pytest.mark.parametrize("name", ["alpha", "beta", "gamma", "delta", "eta"])
def test_parameters_must_be_positive(name):
    with pytest.raises(ValueError, match=name):
        COEXTINCTION.replace(**{name: F(0)})


def test_as_dict_prints_rationals():
    assert COEXTINCTION.as_dict() == {"alpha": "1/2", "beta": "1", "gamma": "1", "delta": "1/2", "eta": "1/10"}


def test_nondimensionalization_matches_dimensional_field():
    dp = DimensionalParams(r=F(2), K=F(10), A=F(1), B=F(3), p=F(1, 5), h=F(1, 2), n=F(4), d=F(1))
    p = nondimensionalize(dp)
    assert p.as_tuple() == (F(3, 10), F(1, 10), F(1, 8), F(1, 4), F(1, 10))

    N, P = F(4), F(3)
    dN, dP = dimensional_vector_field(dp, (N, P))
    dx, dy = vector_field(p, to_nondimensional_state(dp, (N, P)))
    assert dN == dp.r * dp.K * dx
    assert dP == dp.r * dp.K * dp.h / dp.n * dy


def test_dimensional_params_must_be_positive():
    with pytest.raises(ValueError):
        DimensionalParams(r=1, K=10, A=1, B=3, p=1, h=1, n=-1, d=1)


def test_axes_are_invariant():
    assert vector_field(COEXTINCTION, (F(0), F(3, 7))).x == 0
    assert vector_field(COEXTINCTION, (F(2, 3), F(0))).y == 0


def test_trivial_boundary_points_are_stationary():
    assert vector_field(COEXTINCTION, (F(0), F(0))) == State(0, 0)
    assert vector_field(COEXTINCTION, (F(0), COEXTINCTION.eta)) == State(0, 0)


def test_rescaled_field_is_the_time_rescaled_field():
    s = State(F(3, 10), F(7, 5))
    dx, dy = vector_field(COEXTINCTION, s)
    rx, ry = rescaled_vector_field(COEXTINCTION, s)
    factor = (s.x + COEXTINCTION.alpha) * (s.x + COEXTINCTION.eta)
    assert rx == factor * dx and ry == factor * dy


def test_pole_is_reported():
    p = COEXTINCTION.replace(alpha=F(1, 2))
    with pytest.raises(ValueError, match="pole"):
        vector_field(p, (F(-1, 2), F(1)))


def test_jacobian_agrees_with_taylor_linear_part():
    s = State(F(1, 3), F(2, 5))
    J = jacobian(COEXTINCTION, s)
    f, g = taylor_expansion(COEXTINCTION, s, max_degree=2)
    assert f.constant_term() == vector_field(COEXTINCTION, s).x
    assert (f.coeff(1, 0), f.coeff(0, 1)) == J[0]
    assert (g.coeff(1, 0), g.coeff(0, 1)) == J[1]


def test_rescaled_jacobian_agrees_with_rescaled_expansion():
    s = State(F(1, 4), F(3, 5))
    J = rescaled_jacobian(COEXTINCTION, s)
    f, g = taylor_expansion(COEXTINCTION, s, max_degree=2, rescaled=True)
    assert (f.coeff(1, 0), f.coeff(0, 1)) == J[0]
    assert (g.coeff(1, 0), g.coeff(0, 1)) == J[1]


def test_trace_det():
    assert trace_det(((1, 2), (3, 4))) == (5, -2)
