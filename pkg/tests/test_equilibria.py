from fractions import Fraction

import numpy as np
import pytest

from lgallee.algebra import QuadraticNumber
from lgallee.equilibria import (ATTRACTING, CENTER_CANDIDATE, NILPOTENT_CANDIDATE, NON_ISOLATED, SADDLE,
                                SADDLE_NODE, STABLE_FOCUS, STABLE_NODE, UNSTABLE_FOCUS, UNSTABLE_NODE,
                                all_equilibria, boundary_equilibria, classify, kernel_vector, positive_equilibria,
                                saddle_node_coefficient)
from lgallee.model import Params, State, jacobian, vector_field

F = Fraction

COEXTINCTION = Params(alpha=F(1, 2), beta=F(1), gamma=F(1), delta=F(1, 2), eta=F(1, 10))
HOPF_SAMPLE = Params(alpha=F(8, 25), beta=F(169, 500), gamma=F(1, 2), delta=F(1, 20), eta=F(1, 10))


@pytest.mark.parametrize("trace, det, kind", [
    (0, -1, SADDLE),
    (-1, 1, STABLE_FOCUS),
    (1, 1, UNSTABLE_FOCUS),
    (-3, 1, STABLE_NODE),
    (3, 1, UNSTABLE_NODE),
    (1, 0, SADDLE_NODE),
    (0, 1, CENTER_CANDIDATE),
    (0, 0, NILPOTENT_CANDIDATE),
])
def test_classify(trace, det, kind):
    assert classify(F(trace), F(det)) == kind


def test_classify_zero_jacobian():
    assert classify(F(0), F(0), jacobian_zero=True) == NON_ISOLATED


def test_figure_one_configuration():
    eqs = all_equilibria(COEXTINCTION)
    assert [e.label for e in eqs] == ["E0", "E1"]
    e0, e1 = eqs
    assert e0.kind == SADDLE
    assert e1.kind == STABLE_NODE
    assert e1.location == State(0, F(1, 10))
    assert e1.is_attracting and e1.is_hyperbolic


def test_boundary_equilibria_on_prey_axis():
    # Delta1 = 121/100 - 4/5 > 0 and both roots of x^2 - 9x/10 + 1/10 are positive
    p = COEXTINCTION.replace(beta=F(1, 5), alpha=F(1, 10))
    labels = [e.label for e in boundary_equilibria(p)]
    assert labels == ["E0", "E1", "E2", "E3"]
    for e in boundary_equilibria(p)[2:]:
        assert e.location.y == 0 and e.location.x > 0
        assert vector_field(p, e.location) == State(0, 0)


def test_tangent_boundary_point_is_a_saddle_node():
    p = Params(alpha=F(1, 3), beta=F(4, 9), gamma=F(1), delta=F(1, 2), eta=F(1, 10))
    e4 = [e for e in boundary_equilibria(p) if e.label == "E4"]
    assert len(e4) == 1
    e4 = e4[0]
    assert e4.location == State(F(1, 3), 0)
    assert e4.kind == SADDLE_NODE
    # -(1 - alpha) / (delta (1 + alpha))
    assert e4.center_manifold_coeff == F(-1)
    assert e4.sector == "repelling"
    assert e4.parabolic_direction == State(-1, 0)


def test_positive_saddle_node_coefficient():
    p = Params(alpha=F(1, 10), beta=F(121, 800), gamma=F(1), delta=F(1, 2), eta=F(1, 10))
    (e,) = positive_equilibria(p)
    assert e.label == "E*"
    assert e.location == State(F(7, 40), F(11, 40))
    assert e.kind == SADDLE_NODE
    assert e.sector == ATTRACTING
    # positive coefficient: the parabolic sector lies along +(1, 1)
    assert e.parabolic_direction == State(1, 1)
    assert e.to_dict()["parabolic_direction"] == ["1", "1"]
    x, t = e.location.x, e.trace
    assert e.center_manifold_coeff == p.delta * (1 + p.gamma) * x / ((x + p.alpha) * t * t)
    assert saddle_node_coefficient(p, e) == F(11200, 1859)


def test_saddle_node_coefficient_rejects_hyperbolic_points():
    e1 = boundary_equilibria(COEXTINCTION)[1]
    with pytest.raises(ValueError):
        saddle_node_coefficient(COEXTINCTION, e1)


def test_hopf_sample_has_a_weak_focus_and_a_saddle():
    e1, e2 = positive_equilibria(HOPF_SAMPLE)
    assert (e1.label, e2.label) == ("E1*", "E2*")
    assert e1.kind == SADDLE
    assert float(e1.location.x) == pytest.approx(0.11333333, abs=1e-6)
    assert e2.location == State(F(1, 5), F(3, 10))
    assert e2.kind == CENTER_CANDIDATE
    assert e2.trace == 0 and e2.det == F(1, 400)


def test_positive_equilibria_are_stationary():
    for e in positive_equilibria(HOPF_SAMPLE):
        dx, dy = vector_field(HOPF_SAMPLE, e.location)
        assert dx == 0 and dy == 0


def test_float_parameters_follow_the_numeric_path():
    p = Params(alpha=0.32, beta=0.338, gamma=0.5, delta=0.05, eta=0.1)
    xs = sorted(e.location_floats()[0] for e in positive_equilibria(p))
    assert xs == pytest.approx([0.1133333333, 0.2], abs=1e-8)


def test_report_dict_is_json_ready():
    d = boundary_equilibria(COEXTINCTION)[1].to_dict()
    assert d["label"] == "E1" and d["y"] == "1/10" and d["kind"] == STABLE_NODE
    assert set(d) >= {"x", "trace", "det", "delta1", "delta2"}


def test_positive_equilibria_satisfy_vieta():
    # (1 + gamma) x^2 + (gamma (alpha + eta) + alpha - 1) x + alpha (gamma eta - 1) + beta = 2x^2 - 7x/10 + 1/25
    p = Params(alpha=F(1, 10), beta=F(13, 100), gamma=F(1), delta=F(1, 2), eta=F(1, 10))
    e1, e2 = positive_equilibria(p)
    x1, x2 = e1.location.x, e2.location.x
    assert isinstance(x1, QuadraticNumber) and x1 < x2
    assert x1 + x2 == F(7, 20)
    assert x1 * x2 == F(1, 50)
    for e in (e1, e2):
        assert e.location.y == e.location.x + p.eta


def eigen_kind(trace, det):
    lam = np.linalg.eigvals(np.array([[0.0, 1.0], [-det, trace]]))
    if abs(lam[0].imag) > 1e-12:
        return STABLE_FOCUS if lam[0].real < 0 else UNSTABLE_FOCUS
    re = sorted(lam.real)
    if re[0] < 0 < re[1]:
        return SADDLE
    return STABLE_NODE if re[1] < 0 else UNSTABLE_NODE


def test_classification_matches_numeric_eigenvalues():
    rng = np.random.default_rng(2026)
    checked = 0
    while checked < 200:
        trace, det = rng.uniform(-2.0, 2.0, size=2)
        if abs(trace * trace - 4 * det) < 1e-6 or abs(det) < 1e-6:
            continue
        assert classify(trace, det, exact=False) == eigen_kind(trace, det), (trace, det)
        checked += 1


def test_kernel_vector():
    p = Params(alpha=F(1, 10), beta=F(121, 800), gamma=F(1), delta=F(1, 2), eta=F(1, 10))
    J = jacobian(p, State(F(7, 40), F(11, 40)))
    v = kernel_vector(J)
    assert v == (1, 1)
    assert all(row[0] * v[0] + row[1] * v[1] == 0 for row in J)
