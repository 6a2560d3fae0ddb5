"""----------------------------------------------------------------------
PyLGA: Leslie-Gower predator-prey model with an additive Allee effect

Parameter containers, the nondimensional vector field, its time-rescaled
polynomial form, the Jacobian and local Taylor expansions.

    dx/dt = x(1 - x) - gamma*x*y - beta*x/(x + alpha)
    dy/dt = delta*y*(1 - y/(x + eta))

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra import Series2, format_rational, is_exact, parse_rational

logger = logging.getLogger(__name__)

PARAMETER_NAMES = ("alpha", "beta", "gamma", "delta", "eta")


class State(NamedTuple):
    x: object  # prey density (nondimensional)
    y: object  # predator density (nondimensional)


@dataclass(frozen=True)
class DimensionalParams:
    """Dimensional rates: prey growth r, capacity K, Allee terms A and B,
    predation p, predator growth h, conversion n and alternative food d"""

    r: object
    K: object
    A: object
    B: object
    p: object
    h: object
    n: object
    d: object

    def __post_init__(self):
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not value > 0:
                raise ValueError("dimensional parameter %s must be positive, got %s" % (field.name, value))


@dataclass(frozen=True)
class Params:
    """Nondimensional parameters (alpha, beta, gamma, delta, eta), all positive

    Exact (Fraction) values drive the symbolic pipelines; float or mpmath
    values are accepted for simulation and the perturbed unfolding.

    Examples
    --------
    >>> p = Params.from_mapping({"alpha": "1/2", "beta": "1", "gamma": "1", "delta": "1/2", "eta": "1/10"})
    >>> p.is_exact
    True
    """

    alpha: object
    beta: object
    gamma: object
    delta: object
    eta: object

    def __post_init__(self):
        for name in PARAMETER_NAMES:
            value = getattr(self, name)
            if not value > 0:
                raise ValueError("parameter %s must be positive, got %s" % (name, format_rational(value)))

    @classmethod
    def from_mapping(cls, mapping, exact=True):
        missing = [name for name in PARAMETER_NAMES if name not in mapping]
        if missing:
            raise ValueError("missing parameter(s): %s" % ", ".join(missing))
        return cls(**{name: parse_rational(mapping[name], allow_float=not exact) for name in PARAMETER_NAMES})

    @property
    def is_exact(self):
        return is_exact(*self.as_tuple())

    def as_tuple(self):
        return tuple(getattr(self, name) for name in PARAMETER_NAMES)

    def as_floats(self):
        return tuple(float(v) for v in self.as_tuple())

    def as_dict(self):
        return {name: format_rational(getattr(self, name)) for name in PARAMETER_NAMES}

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


def nondimensionalize(dp):
    """Map dimensional rates onto (alpha, beta, gamma, delta, eta)"""

    return Params(
        alpha=dp.B / dp.K,
        beta=dp.A / dp.K,
        gamma=dp.K * dp.p * dp.h / (dp.r * dp.n),
        delta=dp.h / dp.r,
        eta=dp.d / dp.K,
    )


def dimensional_vector_field(dp, state):
    """Right-hand side of the dimensional model at (N, P)"""

    N, P = state
    dN = dp.r * N * (1 - N / dp.K - dp.A / (N + dp.B)) - dp.p * N * P
    dP = P * (dp.h - dp.n * P / (N + dp.d))
    return State(dN, dP)


def to_nondimensional_state(dp, state):
    """(N, P) -> (x, y) with N = K x and P = (K h / n) y"""

    N, P = state
    return State(N / dp.K, P * dp.n / (dp.K * dp.h))


def to_nondimensional_time(dp, t):
    return dp.r * t


# ==================================================================================================================================================================================
# Nondimensional system and its polynomial rescaling


def _check_poles(p, s):
    if s.x + p.alpha == 0:
        raise ValueError("vector field has a pole at x = -alpha")
    if s.x + p.eta == 0:
        raise ValueError("vector field has a pole at x = -eta")


def vector_field(p, s):
    """Exact right-hand side of the nondimensional model"""

    s = State(*s)
    _check_poles(p, s)
    x, y = s
    dx = x * (1 - x) - p.gamma * x * y - p.beta * x / (x + p.alpha)
    dy = p.delta * y * (1 - y / (x + p.eta))
    return State(dx, dy)


def rescaled_vector_field(p, s):
    """Polynomial field obtained by multiplying through by (x + alpha)(x + eta)"""

    x, y = s
    dx = x * (x + p.eta) * ((1 - x) * (x + p.alpha) - p.gamma * y * (x + p.alpha) - p.beta)
    dy = p.delta * y * (x + p.alpha) * (x + p.eta - y)
    return State(dx, dy)


def jacobian(p, s):
    """Analytic Jacobian of the nondimensional model, rows ((fx_x, fx_y), (fy_x, fy_y))"""

    s = State(*s)
    _check_poles(p, s)
    x, y = s
    a = x + p.alpha
    e = x + p.eta
    return (
        (1 - 2 * x - p.gamma * y - p.alpha * p.beta / (a * a), -p.gamma * x),
        (p.delta * y * y / (e * e), p.delta * (1 - 2 * y / e)),
    )


def rescaled_jacobian(p, s):
    """Analytic Jacobian of the polynomial field"""

    x, y = s
    a = x + p.alpha
    e = x + p.eta
    inner = (1 - x) * a - p.gamma * y * a - p.beta
    inner_x = (1 - x) - a - p.gamma * y
    return (
        (e * inner + x * inner + x * e * inner_x, -p.gamma * x * e * a),
        (p.delta * y * (e - y + a), p.delta * a * (e - 2 * y)),
    )


def trace_det(matrix):
    (a, b), (c, d) = matrix
    return a + d, a * d - b * c


def taylor_expansion(p, point, max_degree=5, rescaled=False):
    """Expansion of the field in local coordinates X = x - x0, Y = y - y0

    Returns the pair of Series2 (f, g) truncated at max_degree. Coefficients
    follow the parameter type: exact for Fractions, numeric for mpmath values.
    """

    x0, y0 = point
    X = Series2.x(max_degree)
    Y = Series2.y(max_degree)
    x = X + x0
    y = Y + y0

    if rescaled:
        f = x * (x + p.eta) * ((1 - x) * (x + p.alpha) - p.gamma * y * (x + p.alpha) - p.beta)
        g = p.delta * y * (x + p.alpha) * (x + p.eta - y)
        return f, g

    _check_poles(p, State(x0, y0))
    inv_a = (x + p.alpha).inverse()
    inv_e = (x + p.eta).inverse()
    f = x * (1 - x) - p.gamma * x * y - p.beta * x * inv_a
    g = p.delta * y - p.delta * y * y * inv_e
    return f, g
