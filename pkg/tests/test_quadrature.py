from fractions import Fraction
import math

import numpy as np
from numpy.testing import assert_allclose
import pytest

from lommel import core, quadrature
from lommel.errors import DomainError, NonConvergence
from lommel.ratpoly import RationalPoly

def _series(mu, nu, z):
    return core.lommel_series(core.validate_params(mu, nu), z).value

def test_gauss_legendre_simple_integrals():
    one = quadrature.gauss_legendre(lambda t: np.ones_like(t), 0.0, 1.0)
    assert_allclose(one.value, 1.0, rtol=1e-15)
    assert_allclose(quadrature.gauss_legendre(lambda t: np.sin(math.pi * t), 0.0, 1.0).value, 2 / math.pi, rtol=1e-12)
    assert_allclose(quadrature.gauss_legendre(np.sin, 0.0, math.pi / 2).value, 1.0, rtol=1e-12)

def test_gauss_legendre_singular_endpoint():
    res = quadrature.gauss_legendre(np.sqrt, 0.0, 1.0, singular_end='a')
    assert_allclose(res.value, 2 / 3, rtol=1e-10)
    res = quadrature.gauss_legendre(lambda t: np.power(1 - t, 0.1), 0.0, 1.0, singular_end='b')
    assert_allclose(res.value, 1 / 1.1, rtol=1e-10)

def test_gauss_legendre_arguments():
    with pytest.raises(ValueError):
        quadrature.gauss_legendre(np.sin, 1.0, 0.0)
    with pytest.raises(ValueError):
        quadrature.gauss_legendre(np.sin, 0.0, 1.0, tol=0.0)
    with pytest.raises(ValueError):
        quadrature.gauss_legendre(np.sin, 0.0, 1.0, singular_end='middle')
    with pytest.raises(NonConvergence):
        quadrature.gauss_legendre(lambda t: np.sin(200 * t), 0.0, 10.0, tol=1e-14, max_level=1)

def test_kernel_boundary_values():
    for mu, nu in [(0.75, 0.2), (1.5, 0.3), (3.0, 0.9)]:
        assert_allclose(quadrature.kernel_f(mu, nu, 0.0), 1.0, rtol=1e-14)
        assert quadrature.kernel_f(mu, nu, 1.0) == 0.0
    with pytest.raises(DomainError):
        quadrature.kernel_f(0.5, 0.2, 0.3)

def test_kernel_closed_forms():
    t = np.linspace(0.0, 0.95, 12)
    mu = 1.7
    assert_allclose(quadrature.kernel_f(mu, 0.5, t), (1 - t) ** (mu - 0.5), rtol=1e-13)
    assert_allclose(
        quadrature.kernel_f(mu, 1.5, t),
        (1 - t) ** (mu - 0.5) * (1 + 2 * t / (2 * mu - 1)),
        rtol=1e-13,
    )
    den = (2 * mu + 1) * (2 * mu - 3)
    assert_allclose(
        quadrature.kernel_f(mu, 2.5, t),
        (1 - t) ** (mu - 0.5) * (1 + 6 * (2 * mu - 1) * t / den + 12 * t * t / den),
        rtol=1e-12,
    )

@pytest.mark.parametrize('mu, nu', [(0.75, 0.2), (1.5, 0.8), (2.6, 0.5), (0.7, 0.2)])
@pytest.mark.parametrize('z', [1.0, 2.0, 4.0])
def test_sine_and_cosine_forms_agree_with_series(mu, nu, z):
    series = _series(mu, nu, z)
    scale = max(1.0, abs(series))
    assert abs(quadrature.lommel_quadrature(mu, nu, z).value - series) < 1e-9 * scale
    assert abs(quadrature.lommel_cos_quadrature(mu, nu, z).value - series) < 1e-8 * scale

@pytest.mark.slow
def test_three_forms_on_random_grid():
    rng = np.random.default_rng(0)
    for _ in range(20):
        mu, nu = rng.uniform(0.6, 3.0), rng.uniform(0.0, 1.0)
        for z in (0.5, 1.0, 2.0, 5.0, 10.0):
            series = _series(mu, nu, z)
            sine = quadrature.lommel_quadrature(mu, nu, z).value
            cosine = quadrature.lommel_cos_quadrature(mu, nu, z).value
            scale = max(1.0, abs(series))
            assert abs(sine - series) < 1e-8 * scale, (mu, nu, z)
            assert abs(cosine - series) < 1e-8 * scale, (mu, nu, z)
            assert abs(sine - cosine) < 1e-8 * max(1.0, abs(cosine)), (mu, nu, z)

def test_quadrature_domain():
    assert quadrature.lommel_quadrature(1.5, 0.3, 0.0).value == 0.0
    assert quadrature.lommel_cos_quadrature(1.5, 0.3, 0.0).value == 0.0
    with pytest.raises(DomainError):
        quadrature.lommel_quadrature(0.4, 0.2, 1.0)
    with pytest.raises(DomainError):
        quadrature.lommel_cos_quadrature(-0.6, 0.2, 1.0)
    with pytest.raises(DomainError):
        quadrature.lommel_quadrature(1.5, 0.3, -1.0)

@pytest.mark.parametrize('mu, nu', [(1.5, 0.3), (2.0, 0.7)])
@pytest.mark.parametrize('t', [0.2, 0.5, 0.8])
def test_kernel_differential_recurrence(mu, nu, t):
    assert quadrature.kernel_recurrence_residual(mu, nu, t) < 1e-5

def test_polynomial_kernel_low_orders():
    assert quadrature.polynomial_kernel(Fraction(1, 2), 0) == RationalPoly([1])
    assert quadrature.polynomial_kernel(Fraction(3, 2), 1) == RationalPoly([1, 1])
    # 1 + 2t/(2 mu - 1) at mu = 7/2
    assert quadrature.polynomial_kernel('7/2', 1) == RationalPoly([1, Fraction(1, 3)])
    with pytest.raises(ValueError):
        quadrature.polynomial_kernel(1, -1)

def test_polynomial_kernel_matches_hypergeometric_kernel():
    t = np.linspace(0.0, 0.9, 10)
    for mu, n in [(1.75, 2), (2.25, 3), (0.8, 4)]:
        K = quadrature.polynomial_kernel(mu, n)
        assert K.degree == n
        assert_allclose(
            (1 - t) ** (mu - 0.5) * K(t),
            quadrature.kernel_f(mu, n + 0.5, t),
            rtol=1e-11,
        )

@pytest.mark.parametrize('mu, n', [('3/2', 1), ('5/2', 2), ('3/2', 3), ('9/4', 3)])
def test_kernel_prefactor_is_the_value_at_one(mu, n):
    # the unnormalized sum is 1 at t = 1, so the prefactor is K(1)
    assert quadrature.kernel_prefactor(mu, n) == quadrature.polynomial_kernel(mu, n)(1, exact=True)

def test_kernel_prefactor_values():
    assert quadrature.kernel_prefactor(Fraction(3, 2), 1) == 2
    assert quadrature.kernel_prefactor(Fraction(5, 2), 2) == 4

@pytest.mark.parametrize('z', [0.5, 2.0, 5.0])
def test_polynomial_kernel_quadrature(z):
    assert_allclose(
        quadrature.polynomial_kernel_quadrature(0.5, 0, z).value,
        (1 - math.cos(z)) / math.sqrt(z),
        rtol=1e-11,
    )
    for mu, n in [(1.25, 1), (0.3, 2)]:
        series = _series(mu, n + 0.5, z)
        assert abs(quadrature.polynomial_kernel_quadrature(mu, n, z).value - series) < 1e-9 * max(1.0, abs(series))

def test_struve_family_kernel():
    mu = Fraction(3, 2)
    assert quadrature.struve_family_kernel(mu, 0) == RationalPoly([1])
    assert quadrature.struve_family_kernel(mu, 1) == RationalPoly([1, 0, -2 * (mu + 1)])
    assert quadrature.struve_family_kernel(mu, 2) == RationalPoly(
        [1, 0, -4 * (mu + 2), 0, Fraction(4, 3) * (mu + 2) * (mu + 3)]
    )
    assert quadrature.struve_family_kernel(mu, 4).parity() == 'even'

@pytest.mark.parametrize('mu', [Fraction(0), Fraction(1, 2), Fraction(3, 2), Fraction(7, 3)])
@pytest.mark.parametrize('n', range(6))
def test_struve_family_kernel_first_moment(mu, n):
    # integral_0^1 t (1-t^2)^(mu-1/2) t^(2j) dt = 1/2 B(j+1, mu+1/2), exactly
    a = mu + Fraction(1, 2)
    even = quadrature.struve_family_kernel(mu, n).coeffs[::2]
    moment = Fraction(0)
    for j, c in enumerate(even):
        beta = Fraction(math.factorial(j))
        for i in range(j + 1):
            beta /= a + i
        moment += c * beta / 2
    assert moment == 1 / ((mu + 1) ** 2 - (mu + 2 * n) ** 2)

@pytest.mark.parametrize('mu', [0.5, 1.25])
@pytest.mark.parametrize('n', [0, 1, 2])
@pytest.mark.parametrize('z', [1.0, 3.0])
def test_struve_family_quadrature(mu, n, z):
    series = _series(mu, mu + 2 * n, z)
    assert abs(quadrature.struve_family_quadrature(mu, n, z).value - series) < 1e-9 * max(1.0, abs(series))

@pytest.mark.parametrize('nu', [0.1, 0.5, 0.9])
@pytest.mark.parametrize('z', [1.0, 5.0, 9.0])
def test_angular_form_of_s0(nu, z):
    series = _series(0.0, nu, z)
    assert abs(quadrature.lommel_s0_quadrature(nu, z).value - series) < 1e-10 * max(1.0, abs(series))

def test_kernel_spec():
    with pytest.raises(DomainError):
        quadrature.KernelSpec('hyp2f1_weight', 0.3, 0.2)
    with pytest.raises(TypeError):
        quadrature.KernelSpec('polynomial_weight', 1.5, 1.5)
    with pytest.raises(ValueError):
        quadrature.KernelSpec('exponential', 1.5, 1.5)

    t = np.linspace(0.0, 0.9, 7)
    spec = quadrature.KernelSpec('polynomial_weight', 1.5, 1.5, quadrature.polynomial_kernel(1.5, 1))
    assert_allclose(quadrature.evaluate_kernel(spec, t), quadrature.kernel_f(1.5, 1.5, t), rtol=1e-12)
    spec = quadrature.KernelSpec('hyp2f1_weight', 1.5, 0.3)
    assert_allclose(quadrature.evaluate_kernel(spec, t), quadrature.kernel_f(1.5, 0.3, t))

def test_mixed_function_endpoints():
    mu, nu, z = 0.25, 0.5, 2.3
    assert_allclose(quadrature.mixed_function(mu, nu, math.pi / 2, z), z ** -mu * _series(mu, nu, z), rtol=1e-13)
    assert_allclose(
        quadrature.mixed_function(mu, nu, 0.0, z),
        z ** -mu * core.a_coeff(mu, nu) * _series(mu - 1, nu, z),
        rtol=1e-13,
    )
    with pytest.raises(DomainError):
        quadrature.mixed_function(mu, nu, 0.0, 0.0)

def test_count_sign_changes():
    assert quadrature.count_sign_changes(math.sin, 0.5, 10.0) == 3
    assert quadrature.count_sign_changes(math.cos, 0.1, 1.5) == 0
