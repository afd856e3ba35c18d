from fractions import Fraction
import math
from types import SimpleNamespace

import numpy as np
from numpy.testing import assert_allclose
import pytest
import sympy

from lommel.ratpoly import (
    RationalPoly, approximation_order, from_cereal, pade_order_check, poly_eval,
    poly_derivative, primitive_scale, rational, to_cereal, trig_series,
)

def _from_sympy(expr, var):
    coeffs = sympy.Poly(expr, var).all_coeffs()
    return RationalPoly(Fraction(int(c.p), int(c.q)) for c in reversed(coeffs))

def test_rational_coercion():
    assert rational(5) == Fraction(5)
    assert rational('-3/4') == Fraction(-3, 4)
    assert rational(' 12 ') == Fraction(12)
    assert rational(Fraction(6, 4)) == Fraction(3, 2)
    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(TypeError):
        rational(True)

def test_trailing_zeros_are_dropped():
    p = RationalPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert p.coeffs == (Fraction(1), Fraction(2))

    zero = RationalPoly([0, 0])
    assert zero.is_zero()
    assert zero.degree == -1
    assert zero.leading == 0
    assert zero[3] == 0

def test_arithmetic_matches_sympy():
    z = sympy.Symbol('z')
    p_expr = 1 + 2 * z - sympy.Rational(1, 3) * z ** 3
    q_expr = sympy.Rational(-1, 2) + z ** 2
    p = _from_sympy(p_expr, z)
    q = _from_sympy(q_expr, z)

    assert p + q == _from_sympy(p_expr + q_expr, z)
    assert p - q == _from_sympy(p_expr - q_expr, z)
    assert p * q == _from_sympy(sympy.expand(p_expr * q_expr), z)
    assert q ** 3 == _from_sympy(sympy.expand(q_expr ** 3), z)
    assert p.compose(q) == _from_sympy(sympy.expand(p_expr.subs(z, q_expr)), z)
    assert p.derivative() == _from_sympy(sympy.diff(p_expr, z), z)

def test_scalar_arithmetic():
    p = RationalPoly([2, 4])
    assert p * Fraction(1, 2) == RationalPoly([1, 2])
    assert 3 - p == RationalPoly([1, -4])
    assert p / 4 == RationalPoly(['1/2', 1])
    assert RationalPoly([3]) == 3
    with pytest.raises(ZeroDivisionError):
        p / 0
    with pytest.raises(TypeError):
        p / RationalPoly([1, 1])
    with pytest.raises(ValueError):
        p ** -1

def test_binomial_power():
    p = RationalPoly([1, -1]) ** 5
    assert p.coeffs == tuple(Fraction((-1) ** k * math.comb(5, k)) for k in range(6))

def test_truncate_parity_and_scaling():
    p = RationalPoly([1, 2, 3, 4])
    assert p.truncate(1) == RationalPoly([1, 2])
    assert p.truncate(-1).is_zero()

    assert RationalPoly([1, 0, 3]).parity() == 'even'
    assert RationalPoly([0, 1, 0, 2]).parity() == 'odd'
    assert RationalPoly([1, 1]).parity() is None
    assert RationalPoly().parity() == 'even'

    assert p.scale_variable(2)(3, exact=True) == p(6, exact=True)
    assert RationalPoly.monomial(3, '2/3') == RationalPoly([0, 0, 0, '2/3'])

def test_to_string():
    assert RationalPoly([6, 0, -2]).to_string() == '6 - 2*z^2'
    assert RationalPoly([0, -1]).to_string() == '-z'
    assert RationalPoly(['1/2', 1, 0, 3]).to_string('t') == '1/2 + t + 3*t^3'
    assert str(RationalPoly()) == '0'

def test_poly_eval():
    p = RationalPoly(['1/3', 0, 2])
    assert poly_eval(p, '1/2', exact=True) == Fraction(5, 6)
    assert_allclose(poly_eval(p, 0.5), 5 / 6, rtol=1e-15)
    assert_allclose(p(np.array([0.0, 1.0, 2.0])), [1 / 3, 7 / 3, 25 / 3], rtol=1e-15)
    assert_allclose(p(1j), 1 / 3 - 2, rtol=1e-15)

def test_poly_derivative():
    assert poly_derivative(RationalPoly([1, 0, -3])) == RationalPoly([0, -6])
    assert poly_derivative(RationalPoly([1, 0, -1])) == RationalPoly([0, -2])
    assert poly_derivative(RationalPoly([5])).is_zero()
    assert poly_derivative(RationalPoly(['1/2', '2/3', 0, 4])) == RationalPoly(['2/3', 0, 12])

def test_trig_series():
    assert trig_series('cos', 4).coeffs == (1, 0, Fraction(-1, 2), 0, Fraction(1, 24))
    assert trig_series('sine', 5).coeffs == (0, 1, 0, Fraction(-1, 6), 0, Fraction(1, 120))
    assert trig_series('sin', 0).is_zero()
    with pytest.raises(ValueError):
        trig_series('tangent', 3)
    with pytest.raises(ValueError):
        trig_series('cos', -1)

def test_derivative_is_linear():
    rng = np.random.default_rng(0)
    fraction = lambda: Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 20)))
    poly = lambda: RationalPoly(fraction() for _ in range(int(rng.integers(1, 14))))
    for _ in range(25):
        p, q = poly(), poly()
        a, b = fraction(), fraction()
        assert poly_derivative(p * a + q * b) == poly_derivative(p) * a + poly_derivative(q) * b

@pytest.mark.parametrize('order', range(1, 20))
def test_sine_series_derivative(order):
    assert poly_derivative(trig_series('sin', order)) == trig_series('cos', order - 1)

def _first_even_triple():
    # z^2 + 6 - (6 - 2z^2) cos z - 6z sin z = -z^4/4 + ...
    return SimpleNamespace(A=RationalPoly([6, 0, 1]), B=RationalPoly([6, 0, -2]), C=RationalPoly([0, 6]))

def test_pade_order_check():
    t = _first_even_triple()
    assert pade_order_check(t, 4) == (True, None)
    assert pade_order_check(t, 5) == (False, 4)
    with pytest.raises(ValueError):
        pade_order_check(t, 0)

@pytest.mark.parametrize('factor', [Fraction(-7, 3), 5, Fraction(1, 11)])
def test_pade_order_check_ignores_common_scale(factor):
    t = _first_even_triple()
    scaled = SimpleNamespace(A=t.A * factor, B=t.B * factor, C=t.C * factor)
    for order in range(1, 8):
        assert pade_order_check(scaled, order) == pade_order_check(t, order)

def test_approximation_order():
    assert approximation_order(_first_even_triple()) == 4

    exact = SimpleNamespace(A=RationalPoly(), B=RationalPoly(), C=RationalPoly())
    assert approximation_order(exact) is None

def test_primitive_scale():
    assert primitive_scale([RationalPoly(['1/2', '1/3'])]) == 6
    assert primitive_scale([RationalPoly([4, 6]), RationalPoly([10])]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        primitive_scale([RationalPoly()])

def test_cereal():
    p = RationalPoly(['1/2', 3, '-7/4'])
    assert to_cereal(p) == ['1/2', '3', '-7/4']
    assert from_cereal(to_cereal(p)) == p
    assert from_cereal([1, '2']) == RationalPoly([1, 2])
    with pytest.raises(TypeError):
        from_cereal('12')
