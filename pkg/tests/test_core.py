import math

import numpy as np
from numpy.testing import assert_allclose
import pytest
import scipy.special

from lommel import core
from lommel.errors import DomainError, ExcludedCase, NonConvergence, PoleError

def test_excluded_cases():
    with pytest.raises(ExcludedCase) as info:
        core.validate_params(0, 1)
    assert info.value.k == 0

    with pytest.raises(ExcludedCase) as info:
        core.validate_params(1, 4)
    assert info.value.k == 1

    with pytest.raises(ExcludedCase):
        core.validate_params(1, -2)

    with pytest.raises(ValueError):
        core.validate_params(math.inf, 0.5)

    p = core.validate_params(0.5, 0.5)
    assert (p.mu, p.nu) == (0.5, 0.5)

@pytest.mark.parametrize('z', [0.5, 1.0, math.pi, 6.0])
def test_series_half_integer_closed_form(z):
    # s_{1/2,1/2}(z) = (1 - cos z) / sqrt(z)
    p = core.validate_params(0.5, 0.5)
    assert_allclose(core.lommel_series(p, z).value, (1 - math.cos(z)) / math.sqrt(z), rtol=1e-11)

def test_series_at_origin_and_domain():
    p = core.validate_params(1.5, 0.2)
    res = core.lommel_series(p, 0.0)
    assert res.value == 0.0 and res.est_error == 0.0
    with pytest.raises(DomainError):
        core.lommel_series(p, -1.0)

def test_series_runs_out_of_terms():
    p = core.validate_params(0.5, 0.5)
    with pytest.raises(NonConvergence):
        core.lommel_series(p, 50.0, max_terms=5)

@pytest.mark.parametrize('nu', [0.5, 1.0, 2.3])
@pytest.mark.parametrize('z', [0.5, 2.0, 7.0])
def test_struve_against_scipy(nu, z):
    assert_allclose(core.struve_h(nu, z), scipy.special.struve(nu, z), rtol=1e-9)

@pytest.mark.parametrize('mu, nu', [(0.3, 0.1), (1.5, 0.7), (2.2, 1.6), (-0.4, 0.3)])
@pytest.mark.parametrize('z', [0.3, 2.0, 6.5])
def test_hyp1f2_form_agrees_with_series(mu, nu, z):
    p = core.validate_params(mu, nu)
    series = core.lommel_series(p, z).value
    assert_allclose(core.lommel_hyp1f2(p, z).value, series, rtol=1e-11, atol=1e-13)

@pytest.mark.parametrize('mu, nu', [(1.3, 0.4), (0.2, 0.9), (2.5, 1.5)])
@pytest.mark.parametrize('z', [0.5, 2.0, 5.0])
def test_bessel_equation_residual(mu, nu, z):
    p = core.validate_params(mu, nu)
    assert core.lommel_ode_residual(p, z) < 1e-10 * max(1.0, z ** (mu + 1))

def test_recurrence_in_mu():
    p = core.validate_params(0.7, 0.3)
    for z in (0.4, 1.9, 4.2):
        lower = core.lommel_series(p, z).value
        upper = core.lommel_series(core.validate_params(2.7, 0.3), z).value
        assert_allclose(core.recurrence_step(p, z, lower), upper, rtol=1e-11, atol=1e-13)

@pytest.mark.parametrize('z', [0.7, 2.5])
def test_recurrence_in_nu(z):
    expected = core.lommel_series(core.validate_params(2, 0.3), z).value
    assert_allclose(core.nu_recurrence(2, 0.3, z), expected, rtol=1e-10)

def test_recurrence_in_nu_arguments():
    assert core.nu_recurrence(2, 0.3, 0.0) == 0.0
    with pytest.raises(DomainError):
        core.nu_recurrence(2, 0.0, 1.0)
    with pytest.raises(ValueError):
        core.nu_recurrence(0, 0.3, 1.0)

def test_derivative_ladder():
    p = core.validate_params(2.2, 0.7)
    z = 1.8
    _, ds, _ = core.lommel_series_derivatives(p, z)
    down, up = core.derivative_ladder(p, z)
    assert_allclose([down, up], [ds, ds], rtol=1e-10)
    with pytest.raises(DomainError):
        core.derivative_ladder(p, 0.0)

def test_a_coeff():
    assert_allclose(core.a_coeff(2, 0), math.pi / 2, rtol=1e-13)
    assert_allclose(core.a_coeff(1, 0), 2 / math.pi, rtol=1e-13)
    # nu = 1/2 collapses the Gamma ratio to mu - 1/2
    for mu in (0.9, 1.5, 4.0):
        assert_allclose(core.a_coeff(mu, 0.5), mu - 0.5, rtol=1e-13)
    with pytest.raises(PoleError):
        core.a_coeff(1.5, 1.5)

def test_eval_result_validation():
    with pytest.raises(ValueError):
        core.EvalResult(1.0, -1.0, 1)
    with pytest.raises(ValueError):
        core.EvalResult(1.0, 0.0, 0)
    assert np.isfinite(core.EvalResult(1.0, 0.0, 3).value)
