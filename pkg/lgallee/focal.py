"""----------------------------------------------------------------------
PyLGA: Hopf locus and focal values at the weak focus E2*

Parametrizes the Hopf locus by the equilibrium abscissa z, builds the
polynomial (time-rescaled) field at E2* = (z, z + eta) and computes the
focal values with a formal first integral. Also provides the eta
polynomials of the focal numerators and their Sylvester resultants.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .algebra import (QuadraticNumber, Series2, UniPoly, divided_differences, format_rational, is_exact, is_inexact,
                      resultant, solve_linear)
from .model import Params, State, taylor_expansion

logger = logging.getLogger(__name__)

MAX_ORDER = 5

# positive integer factors of the focal-value denominators, orders 1..5
DENOMINATOR_FACTORS = (4, 96, 9216, 4423680, 25480396800)

# relative resultant magnitude below which a resultant counts as vanishing
RESULTANT_FLOOR = 1e-8


@dataclass(frozen=True)
class HopfPoint:
    """Parameters with a center-type linearization at E2* = (z, z + eta)"""

    z: object
    delta: object
    gamma: object
    eta: object
    alpha0: object
    beta0: object
    d: object

    @property
    def q(self):
        return 1 - self.z - self.z * self.gamma - self.gamma * self.eta

    @property
    def params(self):
        return Params(self.alpha0, self.beta0, self.gamma, self.delta, self.eta)

    @property
    def equilibrium(self):
        return State(self.z, self.z + self.eta)

    def to_dict(self):
        return {name: format_rational(getattr(self, name))
                for name in ("z", "delta", "gamma", "eta", "alpha0", "beta0", "d")}


def hopf_alpha(z, delta, gamma, eta):
    return z * (1 - 2 * z - z * gamma - delta - gamma * eta) / (z + delta)


def hopf_beta(z, delta, gamma, eta):
    return z * (1 - z - z * gamma - gamma * eta) ** 2 / (z + delta)


def hopf_det(z, delta, gamma, eta):
    q = 1 - z - z * gamma - gamma * eta
    return z ** 2 * delta * (z * gamma - delta) * (z + eta) ** 2 * q ** 2 / (z + delta) ** 2


def omega_star_violation(z, delta, gamma, eta):
    """Name of the first violated inequality of the Hopf region, or None"""

    if not 0 < z:
        return "0 < z"
    if not z < Fraction(1, 2):
        return "z < 1/2"
    if not eta > 0:
        return "eta > 0"
    if not 0 < delta:
        return "0 < delta"
    if not delta < z * (1 - 2 * z) / (2 * z + eta):
        return "delta < z(1-2z)/(2z+eta)"
    if not delta / z < gamma:
        return "delta/z < gamma"
    if not gamma < (1 - 2 * z - delta) / (z + eta):
        return "gamma < (1-2z-delta)/(z+eta)"
    return None


def hopf_point(z, delta, gamma, eta):
    """Hopf parameters alpha0, beta0 and Det J(E2*) for a point of the Hopf region"""

    violated = omega_star_violation(z, delta, gamma, eta)
    if violated is not None:
        raise ValueError("(z, delta, gamma, eta) outside the Hopf region: %s fails" % violated)
    return HopfPoint(z, delta, gamma, eta,
                     hopf_alpha(z, delta, gamma, eta),
                     hopf_beta(z, delta, gamma, eta),
                     hopf_det(z, delta, gamma, eta))


@dataclass(frozen=True)
class HopfRecovery:
    point: HopfPoint
    beta_mismatch: object  # beta - beta0(z)


def recover_z(p):
    """Hopf points compatible with (alpha, gamma, delta, eta) of p

    Inverts alpha0(z) = alpha, i.e. (2 + gamma) z^2 + (alpha + gamma eta + delta - 1) z + alpha delta = 0,
    and keeps roots inside the Hopf region. Rational roots stay exact, irrational ones
    become QuadraticNumber values.
    """

    a = 2 + p.gamma
    b = p.alpha + p.gamma * p.eta + p.delta - 1
    c = p.alpha * p.delta
    disc = b * b - 4 * a * c
    if disc < 0:
        return []

    if p.is_exact:
        roots = [QuadraticNumber(-b / (2 * a), s / (2 * a), disc) for s in (Fraction(-1), Fraction(1))]
        roots = [r.rational if r.is_rational else r for r in roots]
    else:
        root = mpmath.sqrt(disc)
        roots = [(-b - root) / (2 * a), (-b + root) / (2 * a)]

    out = []
    for z in roots:
        if omega_star_violation(z, p.delta, p.gamma, p.eta) is not None:
            continue
        h = hopf_point(z, p.delta, p.gamma, p.eta)
        mismatch = p.beta - h.beta0
        if mismatch != 0:
            logger.warning("beta = %s differs from the Hopf value beta0(z) = %s by %s; using beta0",
                           format_rational(p.beta), _fmt(h.beta0), _fmt(mismatch))
        out.append(HopfRecovery(h, mismatch))
    return out


def _fmt(v):
    return str(v) if isinstance(v, QuadraticNumber) else format_rational(v)


# ==================================================================================================================================================================================
# Formal first integral


def hopf_field(z, delta, gamma, eta, max_degree):
    """Polynomial field at E2* in local coordinates, built without positivity checks on alpha0, beta0"""

    alpha = hopf_alpha(z, delta, gamma, eta)
    beta = hopf_beta(z, delta, gamma, eta)
    X, Y = Series2.x(max_degree), Series2.y(max_degree)
    x = X + z
    y = Y + (z + eta)
    f = x * (x + eta) * ((1 - x) * (x + alpha) - gamma * y * (x + alpha) - beta)
    g = delta * y * (x + alpha) * (x + eta - y)
    return f, g


def lyapunov_quantities(f, g, order):
    """Obstructions V_1..V_order of a formal first integral F = H2 + H3 + ...

    H2 = X^2 - (2a/c) XY - (b/c) Y^2 for the linear part ((a, b), (c, -a)).
    At each degree k the equation L(H_k) + R_k = V_m H2^(m+1) (k = 2m + 2) or
    = 0 (k odd) is solved, fixing the X^k coefficient of H_k to zero at even k.
    """

    a, b = f.coeff(1, 0), f.coeff(0, 1)
    c, d = g.coeff(1, 0), g.coeff(0, 1)
    trace = a + d
    if is_inexact(trace) and abs(trace) < mpmath.mpf(10) ** (-(mpmath.mp.dps // 2)):
        trace = 0
    if trace != 0:
        raise ValueError("linear part has nonzero trace")
    if a * d - b * c <= 0:
        raise ValueError("linear part is not of center type (det <= 0)")

    n = 2 * order + 2
    if f.max_degree < n:
        raise ValueError("series cutoff %d too low for order %d" % (f.max_degree, order))
    f_nl = f - f.truncate(1)
    g_nl = g - g.truncate(1)

    H2 = Series2({(2, 0): Fraction(1), (1, 1): -2 * a / c, (0, 2): -b / c}, n)
    F = H2
    V = []
    for k in range(3, n + 1):
        R = F.diff_x().homogeneous_product(f_nl, k) + F.diff_y().homogeneous_product(g_nl, k)
        even = k % 2 == 0
        size = k + 2 if even else k + 1
        matrix = [[0] * size for _ in range(size)]
        rhs = [0] * size
        for i in range(k + 1):
            # column i is the monomial X^(k-i) Y^i of H_k
            matrix[i][i] += a * (k - i) + d * i
            if i + 1 <= k:
                matrix[i + 1][i] += b * (k - i)
            if i - 1 >= 0:
                matrix[i - 1][i] += c * i
            rhs[i] = -R.coeff(k - i, i)
        if even:
            power = H2 ** (k // 2)
            for i in range(k + 1):
                matrix[i][k + 1] = -power.coeff(k - i, i)
            matrix[k + 1][0] = 1
            rhs[k + 1] = 0
        solution = solve_linear(matrix, rhs)
        F = F + Series2({(k - i, i): solution[i] for i in range(k + 1)}, n)
        if even:
            V.append(solution[k + 1])
    return V


def focal_numerators(z, delta, gamma, eta, max_order=4):
    """Focal numerators L11..Lkk, exact for exact inputs

    Lkk = N_k V_k (z+delta) z^(2k-2) (z+eta)^(2k-2) q^(2k-1) delta^(k-1) (z gamma - delta)^(3k-1) / gamma,
    the focal value multiplied by its positive denominator.
    """

    if not 1 <= max_order <= MAX_ORDER:
        raise ValueError("focal order %d unsupported (1..%d)" % (max_order, MAX_ORDER))
    f, g = hopf_field(z, delta, gamma, eta, 2 * max_order + 2)
    V = lyapunov_quantities(f, g, max_order)
    q = 1 - z - z * gamma - gamma * eta
    s = z * gamma - delta
    out = []
    for k, v in enumerate(V, start=1):
        out.append(DENOMINATOR_FACTORS[k - 1] * v * (z + delta) * z ** (2 * k - 2) * (z + eta) ** (2 * k - 2)
                   * q ** (2 * k - 1) * delta ** (k - 1) * s ** (3 * k - 1) / gamma)
    return V, out


def closed_form_l11(z, delta, gamma, eta):
    """Closed-form first focal numerator in (z, delta, gamma, eta)"""

    g, d, e = gamma, delta, eta
    return ((4 * g ** 2 + 7 * g + 2) * z ** 5
            + (g ** 3 * d + 10 * g ** 2 * d + 6 * g ** 2 * e + 5 * g * e + 15 * g * d - 4 * g + 2 * d + 2 * e) * z ** 4
            + (2 * g ** 3 * d * e + 14 * g ** 2 * d * e + 2 * g ** 2 * e ** 2 + 3 * g ** 2 * d ** 2 + 5 * g * d ** 2
               - 2 * g ** 2 * d - 9 * g * d * e + 4 * d * e - 2 * g * e - 4 * d ** 2 - 10 * g * d + 3 * d) * z ** 3
            + (g ** 3 * d * e ** 2 + 4 * g ** 2 * d * e ** 2 - g * d * e ** 2 + 4 * g ** 2 * d ** 2 * e + g * d ** 2 * e
               + d ** 2 * e - 2 * g ** 2 * d * e - 4 * g * d * e + d * e - 4 * d ** 3 - 2 * g * d ** 2 + 8 * d ** 2
               + g * d) * z ** 2
            + (g ** 2 * d ** 2 * e ** 2 - 2 * g * d ** 2 * e ** 2 - g * d ** 3 * e - 2 * d ** 3 * e + 2 * d ** 2 * e
               - d ** 4 + 3 * d ** 3 - d ** 2) * z
            - d ** 3 * e * (d + g * e - 1))


@dataclass(frozen=True)
class FocalReport:
    hopf: HopfPoint
    V: list
    Lnum: list
    L: list
    order: Optional[int]
    closed_form_l11: object = None
    exact: bool = True

    def to_dict(self):
        return {
            "hopf": self.hopf.to_dict(),
            "order": self.order,
            "exact": self.exact,
            "L": [mpmath.nstr(v, 17) for v in self.L],
            "Lnum": [_fmt(v) if self.exact else mpmath.nstr(v, 17) for v in self.Lnum],
            "closed_form_l11": None if self.closed_form_l11 is None else _fmt(self.closed_form_l11),
        }


def _to_mpf(v, dps):
    if isinstance(v, QuadraticNumber):
        return v.to_mpf(dps)
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def focal_values(h, max_order=4, exact=True, dps=50):
    """Focal values L_1..L_max_order and their numerators at a Hopf point"""

    if not 1 <= max_order <= MAX_ORDER:
        raise ValueError("focal order %d unsupported (1..%d)" % (max_order, MAX_ORDER))
    with mpmath.workdps(dps):
        values = (h.z, h.delta, h.gamma, h.eta)
        if not exact:
            values = tuple(_to_mpf(v, dps) for v in values)
        z, delta, gamma, eta = values
        V, Lnum = focal_numerators(z, delta, gamma, eta, max_order)

        zf, df, gf, ef = (_to_mpf(v, dps) for v in values)
        s2 = (zf * gf - df) / df
        omega = mpmath.sqrt(_to_mpf(h.d, dps))
        L = [s2 ** k * _to_mpf(v, dps) / omega for k, v in enumerate(V, start=1)]

        order = None
        for k, num in enumerate(Lnum, start=1):
            nonzero = num != 0 if exact else abs(_to_mpf(V[k - 1], dps)) > mpmath.mpf(10) ** (-dps // 2)
            if nonzero:
                order = k
                break

    logger.info("focal values at z=%s: order %s", _fmt(h.z), order)
    return FocalReport(h, V, Lnum, L, order, closed_form_l11(*values), exact)


def first_lyapunov_coefficient(f, g, dps=50):
    """Radial cubic coefficient a of r' = a r^3 for a field with a center-type linear part

    The linear part ((a, b), (c, -a)) is brought to rotation form by X = b u, Y = -a u - omega w,
    after which the classical third-order formula applies. Works in mpmath at dps digits.
    """

    with mpmath.workdps(dps):
        f, g = f.to_mp(), g.to_mp()
        a, b = f.coeff(1, 0), f.coeff(0, 1)
        c, d = g.coeff(1, 0), g.coeff(0, 1)
        scale = max(abs(a), abs(b), abs(c), abs(d))
        if scale == 0 or abs(a + d) > scale * mpmath.mpf(10) ** (-(dps // 2)):
            raise ValueError("linear part has nonzero trace")
        omega2 = a * d - b * c
        if omega2 <= 0:
            raise ValueError("linear part is not of center type (det <= 0)")
        omega = mpmath.sqrt(omega2)
        if b == 0:
            raise ValueError("linear part is diagonal; no rotation to normalize")

        n = f.max_degree
        u, w = Series2.x(n), Series2.y(n)
        F = (f - f.truncate(1)).subst(u * b, u * (-a) - w * omega)
        G = (g - g.truncate(1)).subst(u * b, u * (-a) - w * omega)
        fu = F / b
        gw = (F * a + G * b) / (-b * omega)

        def coeff(s, i, j):
            return s.coeff(i, j) if s.coeff(i, j) != 0 else mpmath.mpf(0)

        f20, f11, f02 = coeff(fu, 2, 0), coeff(fu, 1, 1), coeff(fu, 0, 2)
        g20, g11, g02 = coeff(gw, 2, 0), coeff(gw, 1, 1), coeff(gw, 0, 2)
        cubic = 6 * coeff(fu, 3, 0) + 2 * coeff(fu, 1, 2) + 2 * coeff(gw, 2, 1) + 6 * coeff(gw, 0, 3)
        quadratic = (f11 * (2 * f20 + 2 * f02) - g11 * (2 * g20 + 2 * g02)
                     - 4 * f20 * g20 + 4 * f02 * g02)
        return cubic / 16 + quadratic / (16 * omega)


def hopf_lyapunov_coefficient(h, dps=50):
    """First Lyapunov coefficient at E2* of the original field, independent of the first-integral engine"""

    with mpmath.workdps(dps):
        p = Params(*(_to_mpf(v, dps) for v in h.params.as_tuple()))
        point = State(_to_mpf(h.z, dps), _to_mpf(h.z + h.eta, dps))
        f, g = taylor_expansion(p, point, max_degree=3)
        return first_lyapunov_coefficient(f, g, dps)


# ==================================================================================================================================================================================
# Resultants in eta


def r1_polynomial(z, delta):
    return 2 * z ** 2 + 5 * delta * z + 2 * delta ** 2 - delta


def r2_polynomial(z, delta, gamma):
    return (2 * gamma * z ** 3 + delta * gamma ** 2 * z ** 2 + 4 * delta * gamma * z ** 2 - delta * z ** 2
            + delta ** 2 * gamma * z - 2 * delta ** 2 * z - delta ** 3)


def z_star(delta):
    """Positive root of 2z^2 + 5 delta z + 2 delta^2 - delta in z, for 0 < delta < 1/2"""

    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 2):
        raise ValueError("z* is defined for 0 < delta < 1/2, got %s" % format_rational(delta))
    z = QuadraticNumber(-5 * delta / 4, Fraction(1, 4), delta * (8 + 9 * delta))
    return z.rational if z.is_rational else z


def _polynomial_from_samples(points, values, variable="eta"):
    """Interpolating polynomial if the samples confirm it with two spare points, else None"""

    top = divided_differences(points, values)
    degree = max((i for i, v in enumerate(top) if v != 0), default=-1)
    if degree > len(points) - 3:
        return None
    return UniPoly.interpolate(points[:degree + 1], values[:degree + 1], variable) if degree >= 0 \
        else UniPoly([], variable)


@dataclass(frozen=True)
class EtaPolynomial:
    """Focal numerator as q^e1 (z + eta)^e2 times a polynomial in eta"""

    order: int
    poly: UniPoly
    q_exponent: int
    shift_exponent: int


def focal_eta_polynomials(z, delta, gamma, max_order=2, start_points=8, batch=4, max_points=160):
    """Polynomials in eta carrying the focal numerators L11..Lkk at fixed (z, delta, gamma)

    Numerators are sampled at rational eta and multiplied by the least powers of
    q = 1 - z - z gamma - gamma eta and z + eta that make the samples polynomial.
    """

    def q_of(eta):
        return 1 - z - z * gamma - gamma * eta

    points, samples = [], []
    found = {}
    candidate = itertools.count(1)

    while len(found) < max_order:
        target = start_points if not points else len(points) + batch
        if target > max_points:
            raise ValueError("focal numerators did not settle to polynomials in eta within %d samples" % max_points)
        while len(points) < target:
            eta = Fraction(next(candidate), 61)
            if q_of(eta) == 0 or z + eta == 0:
                continue
            points.append(eta)
            samples.append(focal_numerators(z, delta, gamma, eta, max_order)[1])

        for k in range(1, max_order + 1):
            if k in found:
                continue
            best = None
            span = range(-(2 * k + 2), 2 * k + 3)
            for e1, e2 in itertools.product(span, span):
                values = [s[k - 1] * _power(q_of(eta), e1) * _power(z + eta, e2) for eta, s in zip(points, samples)]
                poly = _polynomial_from_samples(points, values)
                if poly is not None and (best is None or poly.degree() < best.poly.degree()):
                    best = EtaPolynomial(k, poly, e1, e2)
            if best is not None:
                found[k] = best
                logger.debug("L%d%d: degree %d in eta (q^%d (z+eta)^%d)", k, k, best.poly.degree(),
                             best.q_exponent, best.shift_exponent)
    return [found[k] for k in range(1, max_order + 1)]


def _power(v, e):
    return v ** e if e >= 0 else 1 / v ** (-e)


@dataclass(frozen=True)
class ResultantReport:
    z: object
    delta: object
    gamma: object
    polynomials: list = field(compare=False)
    resultants: list = field(compare=False)
    r1: object = None
    r2: object = None

    def to_dict(self):
        return {
            "z": _fmt(self.z), "delta": _fmt(self.delta), "gamma": _fmt(self.gamma),
            "degrees": [p.poly.degree() for p in self.polynomials],
            "exponents": [[p.q_exponent, p.shift_exponent] for p in self.polynomials],
            "resultants": [_fmt(r) for r in self.resultants],
            "R1": _fmt(self.r1), "R2": _fmt(self.r2),
        }


def focal_resultants(z, delta, gamma, max_order=4):
    """Res(L11, Lkk, eta) for k = 2..max_order"""

    if max_order < 2:
        raise ValueError("resultants need at least two focal numerators")
    polys = focal_eta_polynomials(z, delta, gamma, max_order)
    first = polys[0].poly
    if first.is_zero() or any(p.poly.is_zero() for p in polys[1:]):
        raise ValueError("a focal numerator vanishes identically in eta")
    res = [resultant(first, p.poly) for p in polys[1:]]
    return ResultantReport(z, delta, gamma, polys, res, r1_polynomial(z, delta), r2_polynomial(z, delta, gamma))


def coefficient_norm(poly, dps=30):
    with mpmath.workdps(dps):
        return mpmath.sqrt(mpmath.fsum(_to_mpf(c, dps) ** 2 for c in poly.coeffs))


def relative_resultant(f, g, degrees=None, dps=30):
    """|Res(f, g)| over its Hadamard bound ||f||^n ||g||^m, a scale-free magnitude in [0, 1]"""

    m, n = degrees if degrees is not None else (f.degree(), g.degree())
    res = resultant(f, g, degrees)
    with mpmath.workdps(dps):
        bound = coefficient_norm(f, dps) ** n * coefficient_norm(g, dps) ** m
        return res, abs(_to_mpf(res, dps)) / bound


@dataclass(frozen=True)
class DegenerateCenterReport:
    delta: object
    gamma: object
    z: object
    resultants: list
    magnitudes: list
    vanishing: list
    control_z: object = None
    control_resultants: list = field(default_factory=list)
    control_magnitudes: list = field(default_factory=list)
    floor: float = RESULTANT_FLOOR

    @property
    def control_vanishing(self):
        return [r == 0 or m < self.floor for r, m in zip(self.control_resultants, self.control_magnitudes)]

    @property
    def separated(self):
        """All resultants at z* below the floor while no control resultant is"""
        return all(self.vanishing) and not any(self.control_vanishing)

    def to_dict(self):
        return {"delta": _fmt(self.delta), "gamma": _fmt(self.gamma), "z": _fmt(self.z), "floor": self.floor,
                "resultants": [_fmt(r) for r in self.resultants],
                "magnitudes": [mpmath.nstr(m, 6) for m in self.magnitudes],
                "vanishing": self.vanishing,
                "control_z": _fmt(self.control_z),
                "control_magnitudes": [mpmath.nstr(m, 6) for m in self.control_magnitudes],
                "control_vanishing": self.control_vanishing}


def control_abscissa(z):
    """Rational abscissa next to z, off the R1 = 0 locus"""
    return Fraction(float(z)).limit_denominator(100) + Fraction(1, 50)


def degenerate_center_check(delta, gamma, max_order=4, floor=RESULTANT_FLOOR):
    """Resultants Res(L11, Lkk), k = 2..max_order, at z = z*(delta) against an off-locus control

    z* is handled exactly in Q(sqrt(delta(8 + 9 delta))). The eta polynomials are read with the
    degrees they have at the control abscissa, so a leading coefficient that drops out at z* is
    kept as a zero. A resultant counts as vanishing when its magnitude relative to the Hadamard
    bound is below floor.
    """

    delta, gamma = Fraction(delta), Fraction(gamma)
    z = z_star(delta)
    zc = control_abscissa(z)
    polys = focal_eta_polynomials(z, delta, gamma, max_order)
    control = focal_eta_polynomials(zc, delta, gamma, max_order)
    if any(p.poly.is_zero() for p in polys + control):
        raise ValueError("a focal numerator vanishes identically in eta")

    def formal(k):
        return (max(polys[0].poly.degree(), control[0].poly.degree()),
                max(polys[k].poly.degree(), control[k].poly.degree()))

    at_star = [relative_resultant(polys[0].poly, polys[k].poly, formal(k)) for k in range(1, max_order)]
    off = [relative_resultant(control[0].poly, control[k].poly, formal(k)) for k in range(1, max_order)]
    report = DegenerateCenterReport(delta, gamma, z,
                                    [r for r, _ in at_star], [m for _, m in at_star],
                                    [r == 0 or m < floor for r, m in at_star],
                                    zc, [r for r, _ in off], [m for _, m in off], floor)
    logger.info("degenerate center at delta=%s: |Res| = %s, control %s", _fmt(delta),
                [mpmath.nstr(m, 4) for m in report.magnitudes], [mpmath.nstr(m, 4) for m in report.control_magnitudes])
    return report


# ==================================================================================================================================================================================
# Prefactor of the first resultant in z


def resultant_prefactor(delta, gamma, variable="z"):
    """4 delta^2 gamma^4 z^3 (1 - z)^3 (delta + z)^10 (delta - gamma z)^6 R1 R2 as a polynomial in z"""

    z = UniPoly([0, 1], variable)
    out = UniPoly([4 * delta ** 2 * gamma ** 4], variable)
    for factor, power in ((z, 3), (1 - z, 3), (z + delta, 10), (delta - gamma * z, 6)):
        for _ in range(power):
            out = out * factor
    r1 = UniPoly([2 * delta ** 2 - delta, 5 * delta, 2], variable)
    r2 = UniPoly([-delta ** 3, delta ** 2 * gamma - 2 * delta ** 2,
                  delta * gamma ** 2 + 4 * delta * gamma - delta, 2 * gamma], variable)
    return out * r1 * r2


def prefactor_quotient(r, delta, gamma):
    """Exact division of a resultant polynomial r(z) by the prefactor: the quotient g1 and the remainder"""

    quotient, remainder = r.divmod(resultant_prefactor(delta, gamma, r.variable))
    if not remainder.is_zero():
        logger.warning("prefactor does not divide the resultant: remainder of degree %d", remainder.degree())
    return quotient, remainder


def resultant_in_z(delta, gamma, order=2, step=Fraction(1, 97), max_points=240):
    """Res(L11, Lkk) at fixed (delta, gamma) as a polynomial in z, interpolated from exact samples

    Samples start just above z = delta/gamma, where the linear part at E2* turns center-type. The
    eta-polynomial shape (degrees and normalizing exponents) of the first sample is kept as the
    formal shape; abscissas where the shape changes are skipped.
    """

    delta, gamma = Fraction(delta), Fraction(gamma)
    shape = None
    points, values = [], []
    z = delta / gamma + step
    tried = 0
    while True:
        if tried >= max_points:
            raise ValueError("Res(L11, L%d%d) did not settle to a polynomial in z within %d samples"
                             % (order, order, max_points))
        tried += 1
        if z != 1:
            polys = focal_eta_polynomials(z, delta, gamma, order)
            here = tuple((p.poly.degree(), p.q_exponent, p.shift_exponent) for p in (polys[0], polys[-1]))
            if shape is None:
                shape = here
            if here == shape:
                points.append(z)
                values.append(resultant(polys[0].poly, polys[-1].poly))
                if len(points) >= 3:
                    poly = _polynomial_from_samples(points, values, "z")
                    if poly is not None:
                        logger.info("Res(L11, L%d%d) has degree %d in z (%d samples)", order, order,
                                    poly.degree(), len(points))
                        return poly
            else:
                logger.debug("skipping z=%s: eta-polynomial shape %s differs from %s", _fmt(z), here, shape)
        z += step


def is_exact_point(h):
    return is_exact(h.z, h.delta, h.gamma, h.eta)
