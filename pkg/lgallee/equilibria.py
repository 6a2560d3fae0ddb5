"""----------------------------------------------------------------------
PyLGA: equilibria of the Leslie-Gower Allee model

Enumerates the boundary equilibria E0..E4 and the positive equilibria
on the predator isocline y = x + eta, classifies each one from the exact
sign of trace, determinant and trace^2 - 4 det, and reduces saddle-nodes
to their one-dimensional center-manifold coefficient.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .algebra import QuadraticNumber, Series2, format_rational, time_rescale, vf_transform
from .model import PARAMETER_NAMES, State, jacobian, taylor_expansion, trace_det

logger = logging.getLogger(__name__)

SADDLE = "Saddle"
STABLE_NODE = "StableNode"
UNSTABLE_NODE = "UnstableNode"
STABLE_FOCUS = "StableFocus"
UNSTABLE_FOCUS = "UnstableFocus"
STABLE_NODE_OR_FOCUS = "StableNodeOrFocus"
UNSTABLE_NODE_OR_FOCUS = "UnstableNodeOrFocus"
CENTER_CANDIDATE = "CenterCandidate"
SADDLE_NODE = "SaddleNode"
NILPOTENT_CANDIDATE = "NilpotentCandidate"
NON_ISOLATED = "NonIsolatedOrError"

ATTRACTING = "attracting"
REPELLING = "repelling"

FLOAT_DPS = 40  # working precision for irrational or float parameters
DECISION_BAND = mpmath.mpf("1e-20")


@dataclass(frozen=True)
class EquilibriumReport:
    label: str
    location: State
    kind: str
    trace: object
    det: object
    delta1: object
    delta2: object
    center_manifold_coeff: Optional[object] = None
    sector: Optional[str] = None  # from the sign of the nonzero eigenvalue, i.e. the trace
    parabolic_direction: Optional[State] = None  # kernel vector pointing into the parabolic sector

    @property
    def is_hyperbolic(self):
        return self.kind in (SADDLE, STABLE_NODE, UNSTABLE_NODE, STABLE_FOCUS, UNSTABLE_FOCUS,
                             STABLE_NODE_OR_FOCUS, UNSTABLE_NODE_OR_FOCUS)

    @property
    def is_attracting(self):
        return self.kind in (STABLE_NODE, STABLE_FOCUS, STABLE_NODE_OR_FOCUS)

    def location_floats(self):
        return tuple(float(c) for c in self.location)

    def to_dict(self):
        out = {
            "label": self.label,
            "x": _fmt(self.location.x),
            "y": _fmt(self.location.y),
            "kind": self.kind if self.sector is None else "%s{%s}" % (self.kind, self.sector),
            "trace": _fmt(self.trace),
            "det": _fmt(self.det),
            "delta1": _fmt(self.delta1),
            "delta2": _fmt(self.delta2),
        }
        if self.center_manifold_coeff is not None:
            out["center_manifold_coeff"] = _fmt(self.center_manifold_coeff)
        if self.parabolic_direction is not None:
            out["parabolic_direction"] = [_fmt(c) for c in self.parabolic_direction]
        return out


def _fmt(value):
    if isinstance(value, QuadraticNumber):
        return str(value)
    return format_rational(value)


def delta1(p):
    return (1 + p.alpha) ** 2 - 4 * p.beta


def delta2(p):
    return (p.gamma * (p.alpha + p.eta) + p.alpha - 1) ** 2 \
        - 4 * (1 + p.gamma) * (p.alpha * (p.gamma * p.eta - 1) + p.beta)


def _numeric(p):
    """Params cast to mpmath numbers for the non-exact path"""
    return p.replace(**{name: mpmath.mpf(getattr(p, name)) for name in PARAMETER_NAMES})


def classify(trace, det, exact=True, jacobian_zero=False):
    """Kind tag from trace and determinant of the linearization"""

    if det < 0:
        return SADDLE
    if det == 0 or (not exact and abs(det) < DECISION_BAND):
        if trace != 0 and (exact or abs(trace) >= DECISION_BAND):
            return SADDLE_NODE
        return NON_ISOLATED if jacobian_zero else NILPOTENT_CANDIDATE
    if trace == 0 or (not exact and abs(trace) < DECISION_BAND):
        return CENTER_CANDIDATE

    stable = trace < 0
    disc = trace * trace - 4 * det
    if not exact and abs(disc) < DECISION_BAND:
        return STABLE_NODE_OR_FOCUS if stable else UNSTABLE_NODE_OR_FOCUS
    if disc >= 0:
        return STABLE_NODE if stable else UNSTABLE_NODE
    return STABLE_FOCUS if stable else UNSTABLE_FOCUS


def _report(p, label, location, exact):
    J = jacobian(p, location)
    trace, det = trace_det(J)
    zero = all(c == 0 for row in J for c in row)
    kind = classify(trace, det, exact=exact, jacobian_zero=zero)
    coeff = direction = None
    report = EquilibriumReport(label, location, kind, trace, det, delta1(p), delta2(p))
    if kind == SADDLE_NODE:
        if exact and all(isinstance(c, Fraction) or isinstance(c, int) for c in location):
            coeff = saddle_node_coefficient(p, report)
            if coeff != 0:
                v0 = kernel_vector(J)
                direction = State(v0[0], v0[1]) if coeff > 0 else State(-v0[0], -v0[1])
        # the node-like sectors attract or repel with the hyperbolic direction
        sector = REPELLING if trace > 0 else ATTRACTING
        report = EquilibriumReport(label, location, kind, trace, det, delta1(p), delta2(p), coeff, sector,
                                   direction)
    logger.debug("%s at (%s, %s): %s", label, _fmt(location.x), _fmt(location.y), report.kind)
    return report


def _quadratic_roots(a, b, c, exact):
    """Real roots of a x^2 + b x + c, ascending; QuadraticNumber when irrational"""

    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    if exact:
        if disc == 0:
            return [Fraction(-b) / (2 * a)]
        lo = QuadraticNumber(Fraction(-b) / (2 * a), Fraction(-1) / (2 * a), disc)
        hi = QuadraticNumber(Fraction(-b) / (2 * a), Fraction(1) / (2 * a), disc)
        roots = sorted([lo, hi])
        return [r.rational if r.is_rational else r for r in roots]
    if disc == 0:
        return [-b / (2 * a)]
    root = mpmath.sqrt(disc)
    return sorted([(-b - root) / (2 * a), (-b + root) / (2 * a)])


def boundary_equilibria(p):
    """E0 and E1 always; E2 and E3 when Delta1 > 0; E4 when Delta1 = 0, all with x >= 0"""

    exact = p.is_exact
    q = p if exact else _numeric(p)
    zero = Fraction(0) if exact else mpmath.mpf(0)

    out = [_report(q, "E0", State(zero, zero), exact),
           _report(q, "E1", State(zero, q.eta), exact)]

    d1 = delta1(q)
    # prey isocline on y = 0: x^2 - (1 - alpha) x + beta - alpha = 0
    roots = _quadratic_roots(1, -(1 - q.alpha), q.beta - q.alpha, exact)
    if d1 > 0:
        for label, x in zip(("E2", "E3"), roots):
            if x > 0:
                out.append(_report(q, label, State(x, zero), exact))
    elif d1 == 0 and q.alpha < 1:
        out.append(_report(q, "E4", State((1 - q.alpha) / 2, zero), exact))
    return out


def positive_equilibria(p):
    """Roots of (1+gamma) x^2 + (gamma(alpha+eta) + alpha - 1) x + alpha(gamma eta - 1) + beta = 0 with x > 0"""

    exact = p.is_exact
    q = p if exact else _numeric(p)

    a = 1 + q.gamma
    b = q.gamma * (q.alpha + q.eta) + q.alpha - 1
    c = q.alpha * (q.gamma * q.eta - 1) + q.beta
    roots = [x for x in _quadratic_roots(a, b, c, exact) if x > 0]

    if len(roots) == 1:
        labels = ("E*",)
    else:
        labels = ("E1*", "E2*")
    return [_report(q, label, State(x, x + q.eta), exact) for label, x in zip(labels, roots)]


def all_equilibria(p):
    return boundary_equilibria(p) + positive_equilibria(p)


def kernel_vector(J):
    """Kernel vector of a singular 2x2 matrix, first nonzero component 1"""
    (a, b), (c, d) = J
    v0 = (-b, a) if (a, b) != (0, 0) else (-d, c)
    lead = v0[0] if v0[0] != 0 else v0[1]
    return v0[0] / lead, v0[1] / lead


def saddle_node_coefficient(p, e):
    """Quadratic coefficient of the flow restricted to the center manifold

    The linear part is brought to diag(0, trace) with the kernel vector
    normalized to first nonzero component 1, time is rescaled by 1/trace,
    and the x^2 coefficient of the first component is returned. Its sign is
    the side of the kernel vector on which the parabolic sector lies.
    """

    J = jacobian(p, e.location)
    trace, det = trace_det(J)
    if det != 0:
        raise ValueError("equilibrium %s is not degenerate (det = %s)" % (e.label, _fmt(det)))
    if trace == 0:
        raise ValueError("equilibrium %s is nilpotent; use the cusp normal form" % e.label)

    (a, b), (c, d) = J
    v0 = kernel_vector(J)
    v1 = (b, trace - a) if (b, trace - a) != (0, 0) else (trace - d, c)

    f, g = taylor_expansion(p, e.location, max_degree=3)
    u, w = Series2.x(3), Series2.y(3)
    f, g = vf_transform(f, g, u * v0[0] + w * v1[0], u * v0[1] + w * v1[1])
    f, g = time_rescale(f, g, 1 / trace)

    if f.coeff(1, 0) != 0 or g.coeff(0, 1) != 1:
        raise ValueError("center-manifold reduction failed at %s" % e.label)
    return f.coeff(2, 0)
