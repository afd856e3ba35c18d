###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from dataclasses import dataclass
import math
import typing as tp

import numpy as np
import scipy.special

from lommel.errors import DomainError, ExcludedCase, NonConvergence, PoleError
from lommel.hypergeometric import hyp_pfq

__doc__ = """
Reference evaluation of the Lommel function s_{mu,nu}(z) from its defining
power series, together with parameter validation, the coefficient a_{mu,nu}
and the recurrences in mu and nu.

Only the nonnegative real axis is supported, with ``z**(mu+1)`` taken on the
real positive branch.
"""

# absolute tolerance on the defining equalities of the excluded cases
EXCLUSION_TOL = 1e-12

SERIES_MAX_TERMS = 10000
# below machine epsilon, so the default is "sum until the terms stop mattering"
SERIES_TOL = 1e-17

@dataclass(frozen=True)
class LommelParams:
    mu: float
    nu: float
    # mu + nu or mu - nu is an odd negative integer
    a_coeff_excluded: bool = False

@dataclass(frozen=True)
class EvalResult:
    value: float
    est_error: float
    terms_or_nodes: int

    def __post_init__(self):
        if not self.est_error >= 0:
            raise ValueError(f'negative error estimate {self.est_error}')
        if self.terms_or_nodes < 1:
            raise ValueError(f'bad term count {self.terms_or_nodes}')

def _is_odd_negative_integer(x):
    r = round(x)
    return r < 0 and r % 2 == 1 and abs(x - r) < EXCLUSION_TOL

def validate_params(mu: float, nu: float) -> LommelParams:
    """
    Check that the defining series of s_{mu,nu} exists.

    :raises ExcludedCase: ``nu**2 == (mu + 2*k + 1)**2`` (to ``EXCLUSION_TOL``)
    for some ``k >= 0``.
    """
    mu, nu = float(mu), float(nu)
    if not (math.isfinite(mu) and math.isfinite(nu)):
        raise ValueError(f'parameters must be finite (mu = {mu!r}, nu = {nu!r})')

    kmax = math.ceil(abs(nu) + abs(mu)) + 2
    for k in range(kmax + 1):
        if abs(nu ** 2 - (mu + 2 * k + 1) ** 2) < EXCLUSION_TOL:
            raise ExcludedCase(k, mu, nu)

    excluded = _is_odd_negative_integer(mu + nu) or _is_odd_negative_integer(mu - nu)
    return LommelParams(mu, nu, a_coeff_excluded=excluded)

def _check_z(z):
    z = float(z)
    if not z >= 0:
        raise DomainError(f'z must be on the nonnegative real axis, got {z!r}')
    return z

def _value_at_origin(p: LommelParams):
    if p.mu + 1 > 0:
        return 0.0
    if p.mu + 1 == 0:
        return 1.0 / ((p.mu + 1) ** 2 - p.nu ** 2)
    raise PoleError(f'z^(mu+1) is singular at z = 0 for mu = {p.mu}')

def lommel_series(p: LommelParams, z: float, tol: float = SERIES_TOL, max_terms: int = SERIES_MAX_TERMS) -> EvalResult:
    """
    s_{mu,nu}(z) from the defining series

        z^(mu+1) / ((mu+1)^2 - nu^2) * sum_j prod_{i=1..j} -z^2 / ((mu+2i+1)^2 - nu^2)

    Terms are added until the next one is smaller than ``tol`` relative to the
    partial sum.  ``est_error`` is the magnitude of the first omitted term.

    :raises NonConvergence: ``max_terms`` reached.
    """
    z = _check_z(z)
    if z == 0:
        return EvalResult(_value_at_origin(p), 0.0, 1)

    mu, nu = p.mu, p.nu
    lead = z ** (mu + 1) / ((mu + 1) ** 2 - nu ** 2)
    z2 = z * z
    term = total = peak = 1.0
    for j in range(1, max_terms):
        term *= -z2 / ((mu + 2 * j + 1) ** 2 - nu ** 2)
        if abs(term) < tol * abs(total) or abs(term) < tol * 1e-3 * peak:
            return EvalResult(lead * total, abs(lead * term), j)
        total += term
        peak = max(peak, abs(term))

    raise NonConvergence(f'Lommel series did not converge in {max_terms} terms at z = {z}')

def lommel_series_derivatives(p: LommelParams, z: float, tol: float = SERIES_TOL) -> tp.Tuple[float, float, float]:
    """
    ``(s, s', s'')`` at ``z > 0`` by term-wise differentiation of the series.
    """
    z = _check_z(z)
    if z == 0:
        raise DomainError('derivatives are only computed for z > 0')

    mu, nu = p.mu, p.nu
    term = z ** (mu + 1) / ((mu + 1) ** 2 - nu ** 2)
    s = term
    ds = term * (mu + 1)
    d2s = term * (mu + 1) * mu
    peak = abs(term)
    for j in range(1, SERIES_MAX_TERMS):
        term *= -z * z / ((mu + 2 * j + 1) ** 2 - nu ** 2)
        e = mu + 1 + 2 * j
        s += term
        ds += term * e
        d2s += term * e * (e - 1)
        peak = max(peak, abs(term))
        size = abs(term) * e * e
        if size < tol * max(abs(s), abs(ds), abs(d2s)) or size < tol * 1e-3 * peak:
            return s, ds / z, d2s / (z * z)

    raise NonConvergence(f'differentiated series did not converge at z = {z}')

def lommel_ode_residual(p: LommelParams, z: float) -> float:
    """
    ``|z^2 s'' + z s' + (z^2 - nu^2) s - z^(mu+1)|``, the residual of the
    inhomogeneous Bessel equation.
    """
    s, ds, d2s = lommel_series_derivatives(p, z)
    return abs(z * z * d2s + z * ds + (z * z - p.nu ** 2) * s - z ** (p.mu + 1))

def lommel_hyp1f2(p: LommelParams, z: float, tol: float = SERIES_TOL) -> EvalResult:
    """
    s_{mu,nu}(z) through its 1F2 form

        z^(mu+1) / ((mu+1)^2 - nu^2) * 1F2(1; (mu-nu+3)/2, (mu+nu+3)/2; -z^2/4)
    """
    z = _check_z(z)
    if z == 0:
        return EvalResult(_value_at_origin(p), 0.0, 1)

    mu, nu = p.mu, p.nu
    lead = z ** (mu + 1) / ((mu + 1) ** 2 - nu ** 2)
    total = hyp_pfq([1.0], [(mu - nu + 3) / 2, (mu + nu + 3) / 2], -z * z / 4, tol=tol, max_terms=SERIES_MAX_TERMS)
    return EvalResult(lead * float(total), abs(lead) * np.finfo(float).eps * abs(float(total)), 1)

def a_coeff(mu: float, nu: float) -> float:
    """
    a_{mu,nu} = 2 Gamma((mu+1+nu)/2) Gamma((mu+1-nu)/2) / (Gamma((mu+nu)/2) Gamma((mu-nu)/2))

    :raises PoleError: any of the four Gamma arguments is a nonpositive integer.
    """
    mu, nu = float(mu), float(nu)
    upper = [(mu + 1 + nu) / 2, (mu + 1 - nu) / 2]
    lower = [(mu + nu) / 2, (mu - nu) / 2]
    for x in upper + lower:
        r = round(x)
        if r <= 0 and abs(x - r) < EXCLUSION_TOL:
            raise PoleError(f'Gamma pole at argument {x} in a_coeff(mu = {mu}, nu = {nu})')

    # logs keep the ratio finite where the individual Gammas overflow
    log = sum(scipy.special.gammaln(x) for x in upper) - sum(scipy.special.gammaln(x) for x in lower)
    sign = np.prod([scipy.special.gammasgn(x) for x in upper + lower])
    return float(2 * sign * np.exp(log))

def recurrence_step(p: LommelParams, z: float, s_mu: float) -> float:
    """ s_{mu+2,nu}(z) = z^(mu+1) - ((mu+1)^2 - nu^2) s_{mu,nu}(z) """
    z = _check_z(z)
    return z ** (p.mu + 1) - ((p.mu + 1) ** 2 - p.nu ** 2) * s_mu

def nu_recurrence(n_target: int, nu: float, z: float, tol: float = SERIES_TOL) -> float:
    """
    s_{n,nu}(z) for integer ``n >= 1`` from the recurrence in nu,

        (2 nu / z) s_{n+1,nu} = (n + nu) s_{n,nu-1} - (n - nu) s_{n,nu+1}

    with both right-hand members summed from their series.
    """
    if int(n_target) != n_target or n_target < 1:
        raise ValueError(f'n_target must be an integer >= 1, not {n_target!r}')
    nu = float(nu)
    if abs(nu) < EXCLUSION_TOL:
        raise DomainError('the recurrence in nu divides by nu; nu = 0 is not allowed')
    z = _check_z(z)
    if z == 0:
        return 0.0

    n = int(n_target) - 1
    lower = lommel_series(validate_params(n, nu - 1), z, tol=tol).value
    upper = lommel_series(validate_params(n, nu + 1), z, tol=tol).value
    return z / (2 * nu) * ((n + nu) * lower - (n - nu) * upper)

def derivative_ladder(p: LommelParams, z: float) -> tp.Tuple[float, float]:
    """
    s'_{mu,nu}(z) by the two lowering relations

        s' = (mu + nu - 1) s_{mu-1,nu-1} - (nu/z) s
        s' = (mu - nu - 1) s_{mu-1,nu+1} + (nu/z) s

    Returns both values; they agree with each other and with the
    differentiated series.
    """
    z = _check_z(z)
    if z == 0:
        raise DomainError('the lowering relations divide by z')
    mu, nu = p.mu, p.nu
    s = lommel_series(p, z).value
    down = lommel_series(validate_params(mu - 1, nu - 1), z).value
    up = lommel_series(validate_params(mu - 1, nu + 1), z).value
    return (
        (mu + nu - 1) * down - nu / z * s,
        (mu - nu - 1) * up + nu / z * s,
    )

def struve_h(nu: float, z: float) -> float:
    """
    The Struve function H_nu(z) = 2^(1-nu) / (sqrt(pi) Gamma(nu + 1/2)) s_{nu,nu}(z).
    """
    nu = float(nu)
    s = lommel_series(validate_params(nu, nu), z).value
    return 2 ** (1 - nu) / (math.sqrt(math.pi) * scipy.special.gamma(nu + 0.5)) * s
