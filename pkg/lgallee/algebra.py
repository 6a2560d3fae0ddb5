"""----------------------------------------------------------------------
PyLGA: exact algebra for the normal-form and focal-value machinery

Rationals, truncated bivariate power series, univariate polynomials and
Sylvester resultants. Every routine is generic over the coefficient type:
Fraction for the exact pipelines, mpmath.mpf for the numeric ones.

Last updated _18 October 2026_ by _PyLGA developers_
----------------------------------------------------------------------"""

from __future__ import annotations

import math
import re
from fractions import Fraction

import mpmath

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text, allow_float=False):
    """Parse "p/q" or "p" into a Fraction; decimals are rejected unless allow_float is set"""

    if isinstance(text, (Fraction, int)) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, float):
        if allow_float:
            return text
        raise ValueError("bare float %r given where an exact rational is required" % text)

    match = _RATIONAL_RE.match(str(text))
    if match is None:
        if allow_float:
            try:
                return float(text)
            except ValueError:
                pass
        raise ValueError("malformed rational %r (expected 'p/q')" % text)

    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError("zero denominator in %r" % text)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value):
    """Render a Fraction as "p/q" (or "p"); other scalars through str"""

    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, (int, QuadraticNumber)):
        return str(value)
    return mpmath.nstr(value, 17) if isinstance(value, mpmath.mpf) else repr(value)


def is_exact(*values):
    return all(isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in values)


def is_inexact(value):
    """True for floating-point scalars, whose zero tests need pivoting rather than exact comparison"""
    return isinstance(value, (float, mpmath.mpf))


def _rational_sqrt(q):
    """Exact square root of a non-negative Fraction, or None if it is not a perfect square"""

    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _sign(value):
    return (value > 0) - (value < 0)


_MP_TYPES = (mpmath.mpf, mpmath.mpc)


def _as_mp(value):
    """Fraction or int as an mpf at the working precision; mpmath does not coerce Fractions"""
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return mpmath.mpf(value.numerator) / value.denominator
    return value


class QuadraticNumber:
    """Exact element a + b*sqrt(r) of a real quadratic field, r >= 0 rational

    Used for equilibria of the quadratic prey isocline, the seventh-root-free
    part of the cusp normal form (M, N) and the Hopf threshold z*. Perfect
    square radicands are folded into the rational part on construction.

    Examples
    --------
    >>> QuadraticNumber(0, 1, Fraction(1, 4)) == Fraction(1, 2)
    True
    >>> (QuadraticNumber(1, 1, 2) * QuadraticNumber(1, -1, 2))
    QuadraticNumber(-1)
    """

    __slots__ = ("_a", "_b", "_r")

    def __init__(self, a=0, b=0, radicand=0):
        a, b, r = Fraction(a), Fraction(b), Fraction(radicand)
        if r < 0:
            raise ValueError("negative radicand %s" % format_rational(r))
        root = _rational_sqrt(r)
        if root is not None:
            a, b, r = a + b * root, Fraction(0), Fraction(0)
        if b == 0:
            r = Fraction(0)
        self._a, self._b, self._r = a, b, r

    @classmethod
    def _raw(cls, a, b, r):
        out = object.__new__(cls)
        if b == 0:
            r = Fraction(0)
        out._a, out._b, out._r = a, b, r
        return out

    @property
    def rational(self):
        return self._a

    @property
    def irrational(self):
        return self._b

    @property
    def radicand(self):
        return self._r

    @property
    def is_rational(self):
        return self._b == 0

    def _lift(self, other):
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber._raw(Fraction(other), Fraction(0), Fraction(0))
        return NotImplemented

    def _common(self, other):
        if self._b == 0 or other._b == 0 or self._r == other._r:
            return self._r if self._b != 0 else other._r
        raise ValueError("quadratic numbers live in different fields: sqrt(%s) vs sqrt(%s)"
                         % (format_rational(self._r), format_rational(other._r)))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        r = self._common(other)
        return QuadraticNumber._raw(self._a + other._a, self._b + other._b, r)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self._a, -self._b, self._r)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        r = self._common(other)
        return QuadraticNumber._raw(self._a * other._a + self._b * other._b * r,
                                    self._a * other._b + self._b * other._a, r)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadraticNumber._raw(self._a, -self._b, self._r)

    def norm(self):
        return self._a * self._a - self._b * self._b * self._r

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        num = self * other.conjugate()
        return QuadraticNumber._raw(num._a / n, num._b / n, num._r)

    def __rtruediv__(self, other):
        return QuadraticNumber(other) / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QuadraticNumber(1)
        for _ in range(k):
            out = out * self
        return out

    def sign(self):
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0 or sa == sb:
            return sa if sa != 0 else sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2 r
        return sa * _sign(self._a * self._a - self._b * self._b * self._r)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        if self._a != other._a:
            return False
        # b1 sqrt(r1) == b2 sqrt(r2)
        return (_sign(self._b) == _sign(other._b)
                and self._b * self._b * self._r == other._b * other._b * other._r)

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b * self._b * self._r, _sign(self._b)))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __bool__(self):
        return self.sign() != 0

    def to_mpf(self, dps=40):
        with mpmath.workdps(dps):
            return (mpmath.mpf(self._a.numerator) / self._a.denominator
                    + mpmath.mpf(self._b.numerator) / self._b.denominator
                    * mpmath.sqrt(mpmath.mpf(self._r.numerator) / self._r.denominator))

    def __float__(self):
        return float(self.to_mpf(30))

    def __repr__(self):
        if self._b == 0:
            return "QuadraticNumber(%s)" % format_rational(self._a)
        return "QuadraticNumber(%s + %s*sqrt(%s))" % (
            format_rational(self._a), format_rational(self._b), format_rational(self._r))

    def __str__(self):
        if self._b == 0:
            return format_rational(self._a)
        head = "" if self._a == 0 else format_rational(self._a) + " + "
        return "%s(%s)*sqrt(%s)" % (head, format_rational(self._b), format_rational(self._r))


# ==================================================================================================================================================================================
# Truncated bivariate power series


class Series2:
    """Truncated power series in two variables, sum c_ij x^i y^j with i+j <= max_degree

    Coefficients may be Fractions (exact pipelines) or mpmath numbers
    (the perturbed unfolding chain). Values are immutable; zero coefficients
    are never stored.

    Examples
    --------
    >>> x, y = Series2.x(), Series2.y()
    >>> (x + y) * (x + y) == x * x + 2 * x * y + y * y
    True
    """

    __slots__ = ("_terms", "_max_degree", "_numeric")

    def __init__(self, terms=None, max_degree=5):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self._max_degree = int(max_degree)
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent (%d, %d)" % (i, j))
            if i + j <= self._max_degree and c != 0:
                clean[(i, j)] = Fraction(c) if type(c) is int else c
        # one mpmath coefficient makes the whole series numeric
        self._numeric = any(isinstance(c, _MP_TYPES) for c in clean.values())
        if self._numeric:
            clean = {ij: _as_mp(c) for ij, c in clean.items()}
        self._terms = clean

    # Construction ----------------------------------------------------------------------------------------------------------------------------------------------------------
    @classmethod
    def zero(cls, max_degree=5):
        return cls({}, max_degree)

    @classmethod
    def constant(cls, c, max_degree=5):
        return cls({(0, 0): c}, max_degree)

    @classmethod
    def monomial(cls, c, i, j, max_degree=5):
        return cls({(i, j): c}, max_degree)

    @classmethod
    def x(cls, max_degree=5):
        return cls({(1, 0): Fraction(1)}, max_degree)

    @classmethod
    def y(cls, max_degree=5):
        return cls({(0, 1): Fraction(1)}, max_degree)

    # Accessors -------------------------------------------------------------------------------------------------------------------------------------------------------------
    @property
    def max_degree(self):
        return self._max_degree

    @property
    def terms(self):
        return dict(self._terms)

    def coeff(self, i, j):
        return self._terms.get((i, j), 0)

    def constant_term(self):
        return self.coeff(0, 0)

    def degree(self):
        """Highest total degree carrying a nonzero coefficient (-1 for the zero series)"""
        return max((i + j for (i, j) in self._terms), default=-1)

    def low_degree(self):
        return min((i + j for (i, j) in self._terms), default=-1)

    def homogeneous(self, k):
        return Series2({ij: c for ij, c in self._terms.items() if sum(ij) == k}, self._max_degree)

    def truncate(self, k):
        return Series2({ij: c for ij, c in self._terms.items() if sum(ij) <= k}, self._max_degree)

    def with_max_degree(self, n):
        return Series2(self._terms, n)

    def map_coefficients(self, fn):
        return Series2({ij: fn(c) for ij, c in self._terms.items()}, self._max_degree)

    def is_zero(self):
        return not self._terms

    @property
    def is_numeric(self):
        """True when the coefficients are mpmath numbers"""
        return self._numeric

    def to_mp(self):
        """Same series with every coefficient converted to mpf"""
        out = Series2(None, self._max_degree)
        out._terms = {ij: _as_mp(c) for ij, c in self._terms.items()}
        out._numeric = bool(out._terms)
        return out

    # Arithmetic ------------------------------------------------------------------------------------------------------------------------------------------------------------
    def _check(self, other):
        if other._max_degree != self._max_degree:
            raise ValueError("series cutoffs differ: %d vs %d" % (self._max_degree, other._max_degree))

    def _align(self, other):
        if self._numeric == other._numeric:
            return self, other
        if self._numeric:
            return self, other.to_mp()
        return self.to_mp(), other

    def _align_scalar(self, c):
        if isinstance(c, _MP_TYPES):
            return (self if self._numeric else self.to_mp()), c
        if self._numeric:
            return self, _as_mp(c)
        return self, c

    def __add__(self, other):
        if not isinstance(other, Series2):
            other = Series2.constant(other, self._max_degree)
        self._check(other)
        self, other = self._align(other)
        out = dict(self._terms)
        for ij, c in other._terms.items():
            out[ij] = out.get(ij, 0) + c
        return Series2(out, self._max_degree)

    __radd__ = __add__

    def __neg__(self):
        return Series2({ij: -c for ij, c in self._terms.items()}, self._max_degree)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series2):
            self, other = self._align_scalar(other)
            return Series2({ij: c * other for ij, c in self._terms.items()}, self._max_degree)
        self._check(other)
        self, other = self._align(other)
        n = self._max_degree
        out = {}
        for (i1, j1), c1 in self._terms.items():
            d1 = i1 + j1
            for (i2, j2), c2 in other._terms.items():
                if d1 + i2 + j2 > n:
                    continue
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Series2(out, n)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, scalar):
        if isinstance(scalar, Series2):
            return self * scalar.inverse()
        self, scalar = self._align_scalar(scalar)
        return Series2({ij: c / scalar for ij, c in self._terms.items()}, self._max_degree)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Series2.constant(Fraction(1), self._max_degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def homogeneous_product(self, other, k):
        """Degree-k part of self*other without forming the full product"""
        self, other = self._align(other)
        out = {}
        for (i1, j1), c1 in self._terms.items():
            d2 = k - i1 - j1
            if d2 < 0:
                continue
            for (i2, j2), c2 in other._terms.items():
                if i2 + j2 != d2:
                    continue
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Series2(out, max(self._max_degree, k))

    def inverse(self):
        """Multiplicative inverse; needs a nonzero constant term"""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        h = self / c0 - 1  # no constant term
        out = Series2.constant(Fraction(1), self._max_degree)
        power = Series2.constant(Fraction(1), self._max_degree)
        for k in range(1, self._max_degree + 1):
            power = -(power * h)
            if power.is_zero():
                break
            out = out + power
        return out / c0

    def diff_x(self):
        return Series2({(i - 1, j): i * c for (i, j), c in self._terms.items() if i > 0}, self._max_degree)

    def diff_y(self):
        return Series2({(i, j - 1): j * c for (i, j), c in self._terms.items() if j > 0}, self._max_degree)

    def subst(self, x_sub, y_sub, translation=False):
        """Composition self(x_sub, y_sub), truncated at the common cutoff"""
        self._check(x_sub)
        self._check(y_sub)
        if not translation and (x_sub.constant_term() != 0 or y_sub.constant_term() != 0):
            raise ValueError("substitution has a constant term; pass translation=True for an affine shift")
        if self._numeric or x_sub._numeric or y_sub._numeric:
            self, x_sub, y_sub = self.to_mp(), x_sub.to_mp(), y_sub.to_mp()

        n = self._max_degree
        max_i = max((i for i, _ in self._terms), default=0)
        max_j = max((j for _, j in self._terms), default=0)
        xp = [Series2.constant(Fraction(1), n)]
        for _ in range(max_i):
            xp.append(xp[-1] * x_sub)
        yp = [Series2.constant(Fraction(1), n)]
        for _ in range(max_j):
            yp.append(yp[-1] * y_sub)

        out = {}
        for (i, j), c in self._terms.items():
            for key, v in (xp[i] * yp[j])._terms.items():
                out[key] = out.get(key, 0) + c * v
        return Series2(out, n)

    def evaluate(self, x, y):
        terms = self._terms
        if self._numeric or isinstance(x, _MP_TYPES) or isinstance(y, _MP_TYPES):
            terms = self.to_mp()._terms
            x, y = _as_mp(x), _as_mp(y)
        return sum((c * x ** i * y ** j for (i, j), c in terms.items()), 0)

    # Comparison and output -------------------------------------------------------------------------------------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Series2):
            return self._max_degree == other._max_degree and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def to_json(self):
        terms = [[i, j, format_rational(c)] for (i, j), c in sorted(self._terms.items())]
        return {"max_degree": self._max_degree, "terms": terms}

    @classmethod
    def from_json(cls, data):
        return cls({(int(i), int(j)): parse_rational(c, allow_float=True) for i, j, c in data["terms"]},
                   int(data["max_degree"]))

    def __repr__(self):
        if not self._terms:
            return "Series2(0, max_degree=%d)" % self._max_degree
        parts = []
        for (i, j), c in sorted(self._terms.items(), key=lambda t: (sum(t[0]), -t[0][0])):
            mono = "*".join(m for m in (("x^%d" % i if i > 1 else "x") if i else "",
                                        ("y^%d" % j if j > 1 else "y") if j else "") if m)
            parts.append("%s%s" % (format_rational(c), "*" + mono if mono else ""))
        return "Series2(%s, max_degree=%d)" % (" + ".join(parts), self._max_degree)


def series_add(a, b):
    return a + b


def series_mul(a, b):
    return a * b


def series_subst(s, x_sub, y_sub, translation=False):
    return s.subst(x_sub, y_sub, translation=translation)


def vf_transform(f, g, x_sub, y_sub, translation=False):
    """Rewrite the planar field (f, g) in the coordinates (X, Y) with x = x_sub(X, Y), y = y_sub(X, Y)

    The new field is (D phi)^-1 (f, g) o phi, truncated at the series cutoff.
    """

    fc = f.subst(x_sub, y_sub, translation=translation)
    gc = g.subst(x_sub, y_sub, translation=translation)

    a, b = x_sub.diff_x(), x_sub.diff_y()
    c, d = y_sub.diff_x(), y_sub.diff_y()
    det = a * d - b * c
    if det.constant_term() == 0:
        raise ValueError("substitution has a singular linear part")
    inv = det.inverse()

    new_f = (d * fc - b * gc) * inv
    new_g = (a * gc - c * fc) * inv
    return new_f, new_g


def time_rescale(f, g, factor):
    """Reparametrize time, dt = factor * dtau: the field is multiplied by factor"""

    if not isinstance(factor, Series2):
        factor = Series2.constant(factor, f.max_degree)
    if factor.constant_term() == 0:
        raise ValueError("time factor with zero constant term is a degenerate time change")
    return f * factor, g * factor


# ==================================================================================================================================================================================
# Univariate polynomials and resultants


def divided_differences(points, values):
    """Top row [v0], [v0, v1], ... of the Newton divided-difference table"""

    table = list(values)
    top = [table[0]]
    n = len(points)
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (points[i + level] - points[i]) for i in range(n - level)]
        top.append(table[0])
    return top


class UniPoly:
    """Dense univariate polynomial, coefficients in ascending degree"""

    __slots__ = ("_coeffs", "_var")

    def __init__(self, coeffs=(), variable="x"):
        cs = [Fraction(c) if type(c) is int else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._var = variable

    @classmethod
    def interpolate(cls, points, values, variable="x"):
        """Newton interpolation through (points[i], values[i]); exact for Fractions"""

        n = len(points)
        if n != len(values) or n == 0:
            raise ValueError("interpolation needs matching, non-empty point and value lists")
        newton = divided_differences(points, values)

        out = cls([newton[-1]], variable)
        for k in range(n - 2, -1, -1):
            out = out * cls([-points[k], 1], variable) + cls([newton[k]], variable)
        return out

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def variable(self):
        return self._var

    def degree(self):
        return len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def leading(self):
        return self._coeffs[-1] if self._coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self._var)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (0,) * (n - len(self._coeffs))
        b = other._coeffs + (0,) * (n - len(other._coeffs))
        return UniPoly([u + v for u, v in zip(a, b)], self._var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self._coeffs], self._var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self._var)
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UniPoly(out, self._var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    __hash__ = None

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self._coeffs)][1:], self._var)

    def divmod(self, other):
        """Polynomial long division over a field"""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        quot = [0] * max(len(rem) - other.degree(), 1)
        lead = other.leading()
        while len(rem) - 1 >= other.degree() and rem:
            shift = len(rem) - 1 - other.degree()
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other._coeffs):
                rem[i + shift] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot, self._var), UniPoly(rem, self._var)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self._coeffs], self._var)

    def __repr__(self):
        return "UniPoly(%s, %r)" % ([format_rational(c) for c in self._coeffs], self._var)


def poly_gcd(f, g):
    """Monic gcd by the Euclidean algorithm (exact coefficients)"""

    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def bareiss_determinant(matrix):
    """Fraction-free Gaussian elimination; exact for integer and Fraction entries"""

    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    exact = not any(is_inexact(c) for row in m for c in row)
    if exact:
        m = [[Fraction(c) if isinstance(c, int) else c for c in row] for row in m]

    sign, prev = 1, 1
    for k in range(n - 1):
        if exact:
            pivot = next((i for i in range(k, n) if m[i][k] != 0), None)
        else:
            pivot = max(range(k, n), key=lambda i: abs(m[i][k]))
            pivot = pivot if m[pivot][k] != 0 else None
        if pivot is None:
            return 0 * m[0][0]
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f, g, degrees=None):
    """Sylvester matrix of f and g, read as polynomials of the formal degrees (m, n) when given"""

    m, n = degrees if degrees is not None else (f.degree(), g.degree())
    if m < f.degree() or n < g.degree():
        raise ValueError("formal degrees (%d, %d) below the actual degrees (%d, %d)" % (m, n, f.degree(), g.degree()))
    size = m + n
    rows = []
    fd = [0] * (m - f.degree()) + list(reversed(f.coeffs))
    gd = [0] * (n - g.degree()) + list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f, g, degrees=None):
    """Sylvester resultant Res(f, g) with respect to the polynomials' variable

    With degrees = (m, n) the polynomials are read with formal degrees m and n,
    which is the specialization of a resultant taken over a coefficient ring: it
    vanishes when both leading coefficients drop out.
    """

    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial is undefined")
    if degrees is not None and tuple(degrees) != (f.degree(), g.degree()):
        return bareiss_determinant(sylvester_matrix(f, g, degrees))
    m, n = f.degree(), g.degree()
    if m == 0 and n == 0:
        raise ValueError("resultant of two constants is undefined")
    if m == 0:
        return f.leading() ** n
    if n == 0:
        return g.leading() ** m
    return bareiss_determinant(sylvester_matrix(f, g))


def solve_linear(matrix, rhs):
    """Gaussian elimination for a square system; exact for Fractions, pivoted for floats"""

    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    exact = not any(is_inexact(c) for row in a for c in row)
    for k in range(n):
        if exact:
            pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        else:
            pivot = max(range(k, n), key=lambda i: abs(a[i][k]))
            pivot = pivot if a[pivot][k] != 0 else None
        if pivot is None:
            raise ZeroDivisionError("singular linear system")
        a[k], a[pivot] = a[pivot], a[k]
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            factor = a[i][k] / a[k][k]
            for j in range(k, n + 1):
                a[i][j] -= factor * a[k][j]
    out = [0] * n
    for i in range(n - 1, -1, -1):
        acc = a[i][n]
        for j in range(i + 1, n):
            acc -= a[i][j] * out[j]
        out[i] = acc / a[i][i]
    return out
