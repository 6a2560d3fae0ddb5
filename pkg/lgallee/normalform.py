"""----------------------------------------------------------------------
PyLGA: nilpotent cusp normal forms and the codimension-4 unfolding

Decides the codimension (2, 3 or 4) of a nilpotent positive equilibrium
twice: once from closed-form coefficients and once by running the chain
of near-identity substitutions on exact truncated series. The numeric
unfolding chain carries the four-parameter perturbation through the
same kind of substitutions and estimates the Jacobian of the unfolding
coefficients with respect to the perturbation.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from .algebra import QuadraticNumber, Series2, format_rational, time_rescale, vf_transform
from .equilibria import NILPOTENT_CANDIDATE, positive_equilibria
from .model import Params, taylor_expansion

logger = logging.getLogger(__name__)

CODIM_HIGH = ">4 or invalid"


# ==================================================================================================================================================================================
# Cusp locus


@dataclass(frozen=True)
class CuspLocus:
    """Codimension-3 cusp locus parametrized by (gamma, eta); eta0 marks codimension 4"""

    gamma: Fraction
    eta: Fraction
    alpha0: Fraction
    beta0: Fraction
    delta0: Fraction
    eta0: Fraction

    @property
    def params(self):
        return Params(self.alpha0, self.beta0, self.gamma, self.delta0, self.eta)

    @property
    def in_admissible_region(self):
        """0 < alpha < 1 and gamma < (1 - alpha)/(alpha + eta)"""
        return 0 < self.alpha0 < 1 and self.gamma < (1 - self.alpha0) / (self.alpha0 + self.eta)

    @property
    def equilibrium(self):
        x = (1 - self.alpha0 - self.alpha0 * self.gamma - self.gamma * self.eta) / (2 * (1 + self.gamma))
        return x, x + self.eta


def eta0(gamma):
    gamma = Fraction(gamma)
    return (gamma ** 2 + 8 * gamma + 8) / (4 * gamma ** 3 + 19 * gamma ** 2 + 20 * gamma + 4)


def cusp_locus(gamma, eta=None):
    """alpha0, beta0, delta0 of the codimension-3 locus; eta defaults to the codimension-4 value"""

    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    e0 = eta0(gamma)
    eta = e0 if eta is None else Fraction(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    if gamma * eta >= 1:
        raise ValueError("gamma*eta = %s >= 1: the cusp locus degenerates" % format_rational(gamma * eta))

    g1 = 1 - gamma * eta
    locus = CuspLocus(
        gamma=gamma,
        eta=eta,
        alpha0=(2 + gamma) * g1 / ((1 + gamma) * (2 + 3 * gamma)),
        beta0=4 * (1 + gamma) * g1 ** 2 / (2 + 3 * gamma) ** 2,
        delta0=gamma ** 2 * g1 / (3 * gamma ** 2 + 5 * gamma + 2),
        eta0=e0,
    )
    if not locus.in_admissible_region:
        logger.warning("cusp locus point gamma=%s eta=%s lies outside 0 < gamma < (1-alpha)/(alpha+eta)",
                       format_rational(gamma), format_rational(eta))
    return locus


def nilpotent_point(alpha, gamma, eta):
    """Parameters with a nilpotent positive equilibrium for the given (alpha, gamma, eta)"""

    alpha, gamma, eta = Fraction(alpha), Fraction(gamma), Fraction(eta)
    varsigma = 1 - alpha - alpha * gamma - gamma * eta
    if varsigma <= 0:
        raise ValueError("1 - alpha - alpha*gamma - gamma*eta must be positive, got %s" % format_rational(varsigma))
    beta = (1 + alpha + alpha * gamma - gamma * eta) ** 2 / (4 * (1 + gamma))
    delta = gamma * varsigma / (2 * (1 + gamma))
    return Params(alpha, beta, gamma, delta, eta)


# ==================================================================================================================================================================================
# Cusp reports


@dataclass(frozen=True)
class CuspReport:
    d20: Fraction
    d11: Fraction
    M: Optional[QuadraticNumber]
    N: Optional[QuadraticNumber]
    rho1: Optional[Fraction]
    rho2: Optional[Fraction]
    codim: object
    source: str
    stages: dict = field(default_factory=dict, compare=False)

    def to_dict(self):
        def fmt(v):
            return None if v is None else (str(v) if isinstance(v, QuadraticNumber) else format_rational(v))

        out = {"source": self.source, "codim": self.codim, "d20": fmt(self.d20), "d11": fmt(self.d11),
               "M": fmt(self.M), "N": fmt(self.N), "rho1": fmt(self.rho1), "rho2": fmt(self.rho2)}
        if self.M is not None:
            out["M_float"] = float(self.M)
        if self.N is not None:
            out["N_float"] = float(self.N)
        return out


def codimension(d20, d11, M=None, N=None):
    if d20 == 0:
        return CODIM_HIGH
    if d11 != 0:
        return 2
    if M is None:
        raise ValueError("M is required when d11 = 0")
    if M != 0:
        return 3
    if N is not None and N != 0:
        return 4
    return CODIM_HIGH


def _require_nilpotent(p):
    if not p.is_exact:
        raise ValueError("cusp analysis needs exact rational parameters")
    eqs = [e for e in positive_equilibria(p) if e.kind == NILPOTENT_CANDIDATE]
    if not eqs:
        raise ValueError("parameters do not give a nilpotent positive equilibrium (Delta2 = 0 and trace = 0)")
    if 1 + p.alpha + p.alpha * p.gamma - p.gamma * p.eta == 0:
        raise ValueError("1 + alpha + alpha*gamma - gamma*eta vanishes: closed forms have a pole")
    return eqs[0]


def rho1(gamma, eta):
    return 4 * eta * gamma ** 3 + (19 * eta - 1) * gamma ** 2 + (20 * eta - 8) * gamma + 4 * (eta - 2)


def rho2(gamma, eta):
    g, e = gamma, eta
    return (24 * e ** 2 * g ** 6 + (102 * e ** 2 - 18 * e) * g ** 5 + (71 * e ** 2 - 118 * e + 3) * g ** 4
            - (156 * e ** 2 + 158 * e - 46) * g ** 3 - (248 * e ** 2 - 8 * e - 88) * g ** 2
            - (112 * e ** 2 - 104 * e - 58) * g + 16 * e * (2 - e))


def cusp_report_closed(p):
    """d20, d11 and, on the d11 = 0 locus, M and N from their closed forms"""

    _require_nilpotent(p)
    a, g, e = p.alpha, p.gamma, p.eta
    den = 1 + a + a * g - g * e
    d20 = -g * (1 - a - a * g - g * e) ** 2 / (2 * den)
    d11 = (a * (1 + g) * (2 + 3 * g) - (2 + g) * (1 - g * e)) / den
    if d11 != 0:
        return CuspReport(d20, d11, None, None, None, None, codimension(d20, d11), "closed")

    g1 = 1 - g * e
    radicand = g * g1 / (6 * g ** 2 + 10 * g + 4)
    inner = (2 + g) * (1 + 2 * g) * e + g
    k1 = (1 + g) * (2 + 3 * g) ** 3 / (4 * g ** 2 * g1 ** 3 * inner)
    k2 = (1 + g) * (2 + 3 * g) ** 4 / (32 * g ** 3 * g1 ** 4 * inner ** 2)
    r1, r2 = rho1(g, e), rho2(g, e)
    M = QuadraticNumber(0, -k1 * r1, radicand)
    N = QuadraticNumber(0, -k2 * r2, radicand)
    return CuspReport(d20, d11, M, N, r1, r2, codimension(d20, d11, M, N), "closed")


def homological_substitution(f, g, k):
    """Degree-k substitution x = u + P, y = v + Q bringing (y + f, g) to Takens form at degree k

    After it the degree-k part of the first component vanishes and the second
    keeps only u^k and u^(k-1) v. The free coefficients are fixed by
    p_{1,k-1} = f_{0,k} and p_{0,k} = 0.
    """

    n = f.max_degree
    P = {(1, k - 1): f.coeff(0, k)}
    for j in range(2, k + 1):
        i = k - j
        P[(i + 2, j - 2)] = (g.coeff(i, j) + (i + 1) * f.coeff(i + 1, j - 1)) / Fraction((i + 2) * (i + 1))
    P = Series2(P, n)
    Fk = f.homogeneous(k)
    Q = Series2.y(n) * P.diff_x() - Fk
    return Series2.x(n) + P, Series2.y(n) + Q


def _normalize_degree(f, g, k):
    x_sub, y_sub = homological_substitution(f, g, k)
    return vf_transform(f, g, x_sub, y_sub)


def _solve_x_powers(g, upto=5):
    """Coefficients a_2..a_{upto-1} of X = x + sum a_k x^k killing x^3..x^upto under the time factor X'(x)"""

    n = g.max_degree
    s20 = g.coeff(2, 0)
    if s20 == 0:
        raise ValueError("x-power elimination: vanishing x^2 coefficient")
    G = Series2({(i, 0): g.coeff(i, 0) for i in range(2, n + 1)}, n)
    zero = Series2.zero(n)
    x_sub = Series2.x(n)
    for k in range(2, upto):
        residual = (x_sub.diff_x() * G.subst(x_sub, zero)).coeff(k + 1, 0)
        x_sub = x_sub + Series2.monomial(-residual / ((k + 2) * s20), k, 0, n)
    return x_sub


def _eliminate_x_powers(f, g, upto=5):
    x_sub = _solve_x_powers(g, upto)
    f, g = vf_transform(f, g, x_sub, Series2.y(f.max_degree))
    return time_rescale(f, g, x_sub.diff_x())


def _remove_x2y(f, g):
    """Literal degree-2/3/4 substitution removing the x^2 y term of the Takens form"""

    n = f.max_degree
    m20, m30, m21 = g.coeff(2, 0), g.coeff(3, 0), g.coeff(2, 1)
    if m20 == 0:
        raise ValueError("x^2 y removal: vanishing x^2 coefficient")
    c = m21 / (3 * m20)
    x, y = Series2.x(n), Series2.y(n)
    y1 = x + c * x * y + (5 * m21 ** 2 / (54 * m20)) * x ** 4
    y2 = (y + c * y * y + (m21 / 3) * x ** 3 + c * m30 * x ** 4
          + (10 * m21 ** 2 / (27 * m20)) * x ** 3 * y)
    return vf_transform(f, g, y1, y2)


def _assert_form(f, g, allowed_g, stage):
    """The first component must be y and the second may only carry the allowed monomials"""

    bad_f = {ij: c for ij, c in f.terms.items() if ij != (0, 1)}
    bad_g = {ij: c for ij, c in g.terms.items() if ij not in allowed_g}
    if f.coeff(0, 1) != 1 or bad_f or bad_g:
        raise ValueError("normal-form stage %r left unexpected terms: %s %s" % (stage, bad_f, bad_g))


def cusp_report_chain(p, max_degree=5):
    """d20, d11, M and N by running the substitution chain on exact series"""

    e = _require_nilpotent(p)
    n = max_degree
    x, y = Series2.x(n), Series2.y(n)
    stages = {}

    f, g = taylor_expansion(p, e.location, n)
    k = 1 / p.delta
    f, g = vf_transform(f, g, x + k * y, x)
    if f.coeff(0, 1) != 1 or f.coeff(1, 0) != 0 or g.coeff(1, 0) != 0 or g.coeff(0, 1) != 0:
        raise ValueError("linear stage: Jacobian is not nilpotent in the expected form")
    stages["a02"] = f.coeff(0, 2)
    stages["b02"] = g.coeff(0, 2)

    f, g = _normalize_degree(f, g, 2)
    d20, d11 = g.coeff(2, 0), g.coeff(1, 1)
    stages["d20"], stages["d11"] = d20, d11
    if d20 == 0 or d11 != 0:
        return CuspReport(d20, d11, None, None, None, None, codimension(d20, d11), "chain", stages)

    for degree in range(3, n + 1):
        f, g = _normalize_degree(f, g, degree)
    stages["m"] = g.truncate(n)

    f, g = _remove_x2y(f, g)
    for degree in (4, 5):
        f, g = _normalize_degree(f, g, degree)
    stages["s"] = g

    f, g = _eliminate_x_powers(f, g)
    _assert_form(f.truncate(5), g.truncate(5), {(2, 0), (3, 1), (4, 1)}, "x-power elimination")
    w20, w31, w41 = g.coeff(2, 0), g.coeff(3, 1), g.coeff(4, 1)
    stages["w20"], stages["w31"], stages["w41"] = w20, w31, w41
    if w20 >= 0:
        raise ValueError("final scaling needs w20 < 0, got %s" % format_rational(w20))

    M = QuadraticNumber(0, w31 / w20, -w20)
    N = QuadraticNumber(0, -w41 / w20, -w20)
    r1, r2 = rho1(p.gamma, p.eta), rho2(p.gamma, p.eta)
    return CuspReport(d20, d11, M, N, r1, r2, codimension(d20, d11, M, N), "chain", stages)


# ==================================================================================================================================================================================
# Unfolding of the codimension-4 cusp


@dataclass(frozen=True)
class UnfoldingReport:
    gamma: Fraction
    step: float
    chi0: tuple
    jacobian: np.ndarray = field(compare=False)
    jac_det: float = 0.0
    jac_det_coarse: float = 0.0
    relative_change: float = 0.0
    error_bound: float = 0.0

    @property
    def nonzero(self):
        return abs(self.jac_det) > 1e3 * self.error_bound and self.relative_change <= 0.01

    def to_dict(self):
        return {
            "gamma": format_rational(self.gamma),
            "step": self.step,
            "chi_at_origin": [float(c) for c in self.chi0],
            "jacobian": self.jacobian.tolist(),
            "jac_det": self.jac_det,
            "jac_det_coarse": self.jac_det_coarse,
            "relative_change": self.relative_change,
            "error_bound": self.error_bound,
            "nonzero": self.nonzero,
        }


def cbar_coefficients(a, b):
    """Closed-form coefficients of the (u, v) = (X, dX/dt) system from the translated field

    a and b are the translated first and second components. Returns a dict
    keyed by (i, j) for the coefficient of u^i v^j.
    """

    a00, a10, a01, a11, a20 = a.coeff(0, 0), a.coeff(1, 0), a.coeff(0, 1), a.coeff(1, 1), a.coeff(2, 0)
    b00, b10, b01, b11, b02 = b.coeff(0, 0), b.coeff(1, 0), b.coeff(0, 1), b.coeff(1, 1), b.coeff(0, 2)
    b12, b22, b32 = b.coeff(1, 2), b.coeff(2, 2), b.coeff(3, 2)
    return {
        (0, 0): a01 * b00 - a00 * b01 + a00 ** 2 * b02 / a01,
        (0, 1): a10 + b01 - a00 * (a11 + 2 * b02) / a01,
        (0, 2): (a11 + b02) / a01,
        (1, 0): (a11 * b00 - a10 * b01 + a01 * b10 - a00 * b11 + (a00 / a01) * (2 * a10 * b02 + a00 * b12)
                 - a00 ** 2 * a11 * b02 / a01 ** 2),
        (1, 1): (2 * a20 + b11 - (a10 * (a11 + 2 * b02) + 2 * a00 * b12) / a01
                 + a00 * a11 * (a11 + 2 * b02) / a01 ** 2),
        (1, 2): b12 / a01 - a11 * (a11 + b02) / a01 ** 2,
        (2, 2): b22 / a01 - a11 * b12 / a01 ** 2 + a11 ** 2 * (a11 + b02) / a01 ** 3,
        (3, 2): b32 / a01 - a11 * b22 / a01 ** 2 + a11 ** 2 * b12 / a01 ** 3 - a11 ** 3 * (a11 + b02) / a01 ** 4,
    }


def _mpf(q):
    return mpmath.mpf(q.numerator) / q.denominator


def _real_root(value, k):
    return mpmath.sign(value) * mpmath.root(abs(value), k)


def unfolding_chain(locus, lam, max_degree=6, dps=30, stages=None):
    """chi_1..chi_4 of the unfolding at perturbation lam = (d beta, d alpha, d delta, d eta)"""

    with mpmath.workdps(dps):
        mpf = mpmath.mpf
        lam = [mpf(v) for v in lam]
        p = Params(_mpf(locus.alpha0) + lam[1], _mpf(locus.beta0) + lam[0], _mpf(locus.gamma),
                   _mpf(locus.delta0) + lam[2], _mpf(locus.eta) + lam[3])
        n = max_degree
        x0, y0 = (_mpf(c) for c in locus.equilibrium)
        x, y = Series2.x(n), Series2.y(n)

        # translation to the unperturbed equilibrium
        f, g = taylor_expansion(p, (x0, y0), n)
        if stages is not None:
            stages["translated"] = (f, g)

        # (u, v) = (X, dX/dt); the first component is affine in Y
        A = Series2({(i, 0): f.coeff(i, 0) for i in range(n + 1)}, n)
        B = Series2({(i, 0): f.coeff(i, 1) for i in range(n + 1)}, n)
        f, g = vf_transform(f, g, x, (y - A) * B.inverse(), translation=True)
        if stages is not None:
            stages["uv"] = (f, g)

        # remove u^k v^2 for k = 0..3
        for k in range(4):
            c = g.coeff(k, 2)
            pk = Series2.monomial(c / ((k + 2) * (k + 1)), k + 2, 0, n)
            f, g = vf_transform(f, g, x + pk, y * (1 + pk.diff_x()))

        # x-power elimination on the x^2..x^5 part
        f, g = _eliminate_x_powers(f, g)
        if stages is not None:
            stages["l"] = (f, g)

        # remove x^2 y
        l20, l21 = g.coeff(2, 0), g.coeff(2, 1)
        if l20 == 0:
            raise ValueError("x^2 y removal: vanishing x^2 coefficient")
        kappa = l21 / (3 * l20)
        f, g = vf_transform(f, g, x, y + kappa * y * y)
        f, g = time_rescale(f, g, (1 + kappa * y).inverse())

        # fractional-power scaling to x^2 - x^4 y
        m20, m41 = g.coeff(2, 0), g.coeff(4, 1)
        if m20 == 0 or m41 == 0:
            raise ValueError("scaling undefined: m20 = %s, m41 = %s" % (m20, m41))
        r20, r41 = _real_root(m20, 7), _real_root(m41, 7)
        scale_x = r20 / r41 ** 2
        scale_y = -r20 ** 5 / r41 ** 3
        scale_t = -r41 / r20 ** 4
        coeffs = {ij: (scale_t / scale_y) * c * scale_x ** ij[0] * scale_y ** ij[1] for ij, c in g.terms.items()}
        nn = {ij: coeffs.get(ij, mpf(0)) for ij in ((0, 0), (1, 0), (0, 1), (1, 1), (3, 1), (2, 0), (4, 1))}
        if stages is not None:
            stages["n"] = nn

        # shift u = x + n10/2 removes the linear x term
        n00, n10, n01, n11, n31 = nn[(0, 0)], nn[(1, 0)], nn[(0, 1)], nn[(1, 1)], nn[(3, 1)]
        chi1 = n00 - n10 ** 2 / 4
        chi2 = n01 - n10 ** 4 / 16 - n10 ** 3 * n31 / 8 - n10 * n11 / 2
        chi3 = n11 + n10 ** 3 / 2 + 3 * n10 ** 2 * n31 / 4
        chi4 = 2 * n10 + n31
        return (chi1, chi2, chi3, chi4)


def unfolding_jacobian(gamma, step=1e-3, max_degree=6, dps=30):
    """Central-difference Jacobian of (chi_1..chi_4) with respect to lambda at the organizing center"""

    locus = cusp_locus(gamma)
    chi0 = unfolding_chain(locus, (0, 0, 0, 0), max_degree, dps)
    logger.info("unfolding at gamma=%s: chi(0) = %s", format_rational(locus.gamma), [mpmath.nstr(c, 5) for c in chi0])

    def jac(h):
        out = np.zeros((4, 4))
        for j in range(4):
            plus = [0] * 4
            minus = [0] * 4
            plus[j], minus[j] = h, -h
            cp = unfolding_chain(locus, plus, max_degree, dps)
            cm = unfolding_chain(locus, minus, max_degree, dps)
            for i in range(4):
                out[i, j] = float((cp[i] - cm[i]) / (2 * mpmath.mpf(h)))
        return out

    coarse = jac(step)
    fine = jac(step / 2)
    det_coarse = float(np.linalg.det(coarse))
    det_fine = float(np.linalg.det(fine))
    error = abs(det_fine - det_coarse)
    rel = error / abs(det_fine) if det_fine != 0 else float("inf")
    logger.info("unfolding Jacobian det = %.6g (step %.1e), %.6g (step %.1e)", det_coarse, step, det_fine, step / 2)
    return UnfoldingReport(locus.gamma, step, tuple(chi0), fine, det_fine, det_coarse, rel, error)
