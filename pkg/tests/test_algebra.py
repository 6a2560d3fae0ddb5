from fractions import Fraction

import mpmath
import numpy as np
import pytest

from lgallee.algebra import (QuadraticNumber, Series2, UniPoly, bareiss_determinant, divided_differences,
                             format_rational, parse_rational, poly_gcd, resultant, solve_linear, time_rescale,
                             vf_transform)

F = Fraction


def test_parse_rational_forms():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("-2") == F(-2)
    assert parse_rational(" 5 / 10 ") == F(1, 2)
    assert parse_rational(F(1, 3)) == F(1, 3)


@pytest.mark.parametrize("text", ["0.5", "abc", "1/0", "1//2", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_float_mode():
    assert parse_rational("0.25", allow_float=True) == 0.25
    assert isinstance(parse_rational("0.25", allow_float=True), float)
    with pytest.raises(ValueError):
        parse_rational(0.5)


def test_format_rational():
    assert format_rational(F(3, 4)) == "3/4"
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(QuadraticNumber(0, 1, 2)) == "(1)*sqrt(2)"


def test_quadratic_number_folds_perfect_squares():
    assert QuadraticNumber(0, 1, F(1, 4)) == F(1, 2)
    assert QuadraticNumber(1, 2, 9).is_rational
    assert hash(QuadraticNumber(F(1, 2))) == hash(F(1, 2))


def test_quadratic_number_arithmetic():
    a = QuadraticNumber(1, 1, 2)
    b = QuadraticNumber(1, -1, 2)
    assert a * b == -1
    assert a + b == 2
    assert a / a == 1
    assert (a ** 2) == QuadraticNumber(3, 2, 2)
    assert F(1, 2) * a == QuadraticNumber(F(1, 2), F(1, 2), 2)
    assert 1 / b == QuadraticNumber(-1, -1, 2)


def test_quadratic_number_sign_and_order():
    assert QuadraticNumber(1, -1, 2).sign() == -1
    assert QuadraticNumber(-1, 1, 3).sign() == 1
    assert QuadraticNumber(3, -2, 2) > 0  # 3 > 2 sqrt(2)
    assert QuadraticNumber(0, 1, 2) < F(3, 2)
    assert abs(QuadraticNumber(1, -1, 2)) == QuadraticNumber(-1, 1, 2)
    assert float(QuadraticNumber(1, 1, 2)) == pytest.approx(2.414213562373095)


def test_quadratic_numbers_in_different_fields_do_not_mix():
    with pytest.raises(ValueError):
        QuadraticNumber(0, 1, 2) + QuadraticNumber(0, 1, 3)


def test_series_product_and_truncation():
    x, y = Series2.x(3), Series2.y(3)
    s = (x + y) ** 2
    assert s.coeff(2, 0) == 1 and s.coeff(1, 1) == 2 and s.coeff(0, 2) == 1
    assert (x ** 4).is_zero()
    assert s.degree() == 2 and s.low_degree() == 2


def test_series_inverse():
    x, y = Series2.x(5), Series2.y(5)
    s = 2 + x - 3 * y + x * y
    assert s * s.inverse() == Series2.constant(F(1), 5)
    with pytest.raises(ZeroDivisionError):
        x.inverse()


def test_series_subst_and_derivatives():
    x, y = Series2.x(4), Series2.y(4)
    s = x * x * y + 3 * y
    t = s.subst(x + y, y)
    assert t.coeff(2, 1) == 1 and t.coeff(1, 2) == 2 and t.coeff(0, 3) == 1 and t.coeff(0, 1) == 3
    assert s.diff_x() == 2 * x * y
    assert s.diff_y() == x * x + 3
    with pytest.raises(ValueError):
        s.subst(x + 1, y)


def test_series_json_round_trip():
    x, y = Series2.x(4), Series2.y(4)
    s = F(1, 3) * x * y - F(5, 2) * y ** 3
    assert Series2.from_json(s.to_json()) == s


def test_vf_transform_linear_change():
    # (x', y') = (y, -x) under x = X + Y, y = Y
    n = 3
    X, Y = Series2.x(n), Series2.y(n)
    f, g = Y, -X
    new_f, new_g = vf_transform(f, g, X + Y, Y)
    # y = Y, x = X + Y: dX/dt = x' - y' = y + x = X + 2Y, dY/dt = y' = -x = -X - Y
    assert new_f == X + 2 * Y
    assert new_g == -X - Y


def test_time_rescale_multiplies_the_field():
    x, y = Series2.x(3), Series2.y(3)
    f, g = time_rescale(y, x, 1 + x)
    assert f == y + x * y and g == x + x * x
    with pytest.raises(ValueError):
        time_rescale(y, x, x)


def test_unipoly_interpolation_and_division():
    p = UniPoly([F(2), F(-3), F(1)], "t")  # (t - 1)(t - 2)
    pts = [F(0), F(1), F(3)]
    assert UniPoly.interpolate(pts, [p(v) for v in pts], "t") == p
    q, r = p.divmod(UniPoly([-1, 1], "t"))
    assert q == UniPoly([-2, 1], "t") and r.is_zero()
    assert p.derivative() == UniPoly([-3, 2], "t")


def test_gcd_and_resultant():
    f = UniPoly([2, -3, 1])  # (x - 1)(x - 2)
    g = UniPoly([-3, 2, 1])  # (x - 1)(x + 3)
    assert poly_gcd(f, g) == UniPoly([-1, 1])
    assert resultant(f, g) == 0
    assert resultant(UniPoly([-3, 1]), UniPoly([-5, 1])) == -2  # Res(x - a, x - b) = a - b
    with pytest.raises(ValueError):
        resultant(UniPoly([]), f)


def test_bareiss_and_solve():
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert solve_linear([[F(2), F(1)], [F(1), F(3)]], [F(3), F(5)]) == [F(4, 5), F(7, 5)]
    with pytest.raises(ZeroDivisionError):
        solve_linear([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)])


def random_series(rng, n=4, constant=False):
    terms = {(i, j): F(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
             for i in range(n + 1) for j in range(n + 1 - i) if constant or i + j > 0}
    return Series2(terms, n)


def random_poly(rng, degree):
    coeffs = [F(int(rng.integers(-6, 7))) for _ in range(degree)] + [F(int(rng.integers(1, 5)))]
    return UniPoly(coeffs)


def test_series_ring_axioms():
    rng = np.random.default_rng(5)
    for _ in range(5):
        a, b, c = (random_series(rng, constant=True) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        assert (a - a).is_zero()
        assert a * Series2.constant(F(1), 4) == a


def test_series_substitution_is_functorial():
    rng = np.random.default_rng(6)
    for _ in range(3):
        s, p1, q1, p2, q2 = (random_series(rng) for _ in range(5))
        lhs = s.subst(p1, q1).subst(p2, q2)
        rhs = s.subst(p1.subst(p2, q2), q1.subst(p2, q2))
        assert lhs == rhs
        assert (s * p1).subst(p2, q2) == s.subst(p2, q2) * p1.subst(p2, q2)


def test_series_mixes_fractions_and_mpmath_values():
    eps = mpmath.mpf(10) ** -25
    with mpmath.workdps(30):
        x, y = Series2.x(3), Series2.y(3)
        assert not (x + F(1, 2) * y).is_numeric
        s = F(1, 3) * x + y * mpmath.mpf(2)
        assert s.is_numeric
        t = (s + F(1, 2) * x * y) * F(2, 3)
        assert mpmath.almosteq(t.coeff(1, 0), mpmath.mpf(2) / 9, eps, eps)
        assert mpmath.almosteq(t.coeff(1, 1), mpmath.mpf(1) / 3, eps, eps)
        assert mpmath.almosteq(s.evaluate(F(3), F(1, 4)), mpmath.mpf(3) / 2, eps, eps)
        r = (x * F(1, 3)).subst(x + y * mpmath.mpf(1), y)
        assert r.is_numeric
        assert mpmath.almosteq(r.coeff(0, 1), mpmath.mpf(1) / 3, eps, eps)
        inv = (1 + s).inverse()
        assert mpmath.almosteq(inv.coeff(1, 0), -mpmath.mpf(1) / 3, eps, eps)
        shifted = (x + mpmath.mpf(1) / 4) * F(4)
        assert mpmath.almosteq(shifted.constant_term(), mpmath.mpf(1), eps, eps)


def test_vf_transform_round_trip():
    n = 5
    X, Y = Series2.x(n), Series2.y(n)
    f, g = Y + X * X, -X + X * Y
    # x = X + X^2 is inverted by X = x - x^2 + 2x^3 - 5x^4 + 14x^5
    forward = vf_transform(f, g, X + X * X, Y)
    back = vf_transform(*forward, X - X ** 2 + 2 * X ** 3 - 5 * X ** 4 + 14 * X ** 5, Y)
    assert back == (f, g)


def test_divided_differences():
    # t^2 - 3t + 2 at 0, 1, 3
    assert divided_differences([F(0), F(1), F(3)], [F(2), F(0), F(2)]) == [2, -2, 1]


def test_resultant_of_a_quadratic_and_a_line():
    f, g = UniPoly([-1, 0, 1]), UniPoly([-2, 1])
    assert resultant(f, g) == 3
    assert resultant(g, f) == 3
    # f read as a cubic: one leading zero brings in lc(g) and a sign
    assert resultant(f, g, degrees=(3, 1)) == -3
    assert resultant(UniPoly([1, 1]), UniPoly([2, 1]), degrees=(2, 2)) == 0
    with pytest.raises(ValueError):
        resultant(f, g, degrees=(1, 1))


def test_resultant_antisymmetry_and_multiplicativity():
    rng = np.random.default_rng(7)
    for _ in range(6):
        m, n, k = (int(rng.integers(1, 5)) for _ in range(3))
        f, g, h = random_poly(rng, m), random_poly(rng, n), random_poly(rng, k)
        assert resultant(f, g) == (-1) ** (m * n) * resultant(g, f)
        assert resultant(f * h, g) == resultant(f, g) * resultant(h, g)


def test_resultant_vanishes_exactly_with_a_common_factor():
    rng = np.random.default_rng(8)
    for _ in range(8):
        f, g = random_poly(rng, int(rng.integers(1, 4))), random_poly(rng, int(rng.integers(1, 4)))
        assert (resultant(f, g) == 0) == (poly_gcd(f, g).degree() > 0)
        h = random_poly(rng, int(rng.integers(1, 3)))
        assert poly_gcd(f * h, g * h) == poly_gcd(f, g) * h.monic()
        assert resultant(f * h, g * h) == 0
