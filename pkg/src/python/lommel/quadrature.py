###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from dataclasses import dataclass
from fractions import Fraction
import functools
import math
import typing as tp

import numpy as np

from lommel.core import EvalResult, a_coeff, lommel_series, validate_params
from lommel.errors import DomainError, NonConvergence, PoleError
from lommel.hypergeometric import hyp2f1_series
from lommel.ratpoly import RationalPoly

__doc__ = """
Numerical evaluation of the integral representations of s_{mu,nu}(z):

* the sine form with the normalized 2F1 kernel f_{mu,nu}(t) (mu > 1/2),
* the cosine form built on f_{mu+1,nu},
* the polynomial kernels at nu = n + 1/2 and nu = mu + 2n,
* the angular form of s_{0,nu} over [0, pi].

Every integral goes through ``gauss_legendre``.
"""

GL_ORDER = 32
GL_MAX_LEVEL = 14
DEFAULT_TOL = 1e-12

# the 2F1 inside the kernel is summed at argument <= 1/2
KERNEL_MAX_TERMS = 500

# geometric panels added per level next to a singular endpoint
LADDER_DEPTH_PER_LEVEL = 12
# in units of machine epsilon; the ladder stops above this width
LADDER_FLOOR = 1e4

FINITE_DIFFERENCE_STEP = 1e-5

@functools.lru_cache(maxsize=None)
def _leggauss(order):
    return np.polynomial.legendre.leggauss(order)

def _panel_edges(a, b, level, singular_end):
    edges = np.linspace(a, b, 2 ** level + 1)
    depth = LADDER_DEPTH_PER_LEVEL * (level + 1)
    ladder = 0.5 ** np.arange(1, depth + 1)
    # narrower panels would put nodes on the endpoint after rounding
    floor = LADDER_FLOOR * np.finfo(float).eps * max(1.0, abs(a), abs(b))
    if singular_end in ('b', 'both'):
        h = edges[-1] - edges[-2]
        steps = h * ladder
        edges = np.concatenate([edges[:-1], b - steps[steps >= floor], [b]])
    if singular_end in ('a', 'both'):
        h = edges[1] - edges[0]
        steps = h * ladder[::-1]
        edges = np.concatenate([[a], a + steps[steps >= floor], edges[1:]])
    return np.unique(edges)

def _gauss_sum(f, edges):
    x, w = _leggauss(GL_ORDER)
    lo, hi = edges[:-1, None], edges[1:, None]
    half = 0.5 * (hi - lo)
    nodes = lo + half * (x + 1)
    values = np.asarray(f(nodes.ravel()), dtype=float).reshape(nodes.shape)
    if not np.all(np.isfinite(values)):
        raise DomainError('integrand is not finite at a quadrature node')
    weighted = half * w * values
    return float(np.sum(weighted)), float(np.sum(np.abs(weighted))), nodes.size

def gauss_legendre(
        f: tp.Callable[[np.ndarray], np.ndarray],
        a: float,
        b: float,
        tol: float = DEFAULT_TOL,
        singular_end: tp.Optional[str] = None,
        max_level: int = GL_MAX_LEVEL,
) -> EvalResult:
    """
    Composite 32-point Gauss-Legendre quadrature of ``f`` over ``[a, b]``.

    Level ``L`` uses ``2**L`` equal panels; levels are refined until two
    successive results differ by less than ``tol`` relative to the latest
    (or by roundoff relative to the integral of ``|f|``).

    :param f: vectorized integrand; called with a 1-D array of nodes.
    :param singular_end: ``'a'``, ``'b'`` or ``'both'`` to replace the end
    panel(s) by a geometric ladder of panels, for integrands with unbounded
    derivatives at that endpoint.
    :return: ``EvalResult`` whose ``est_error`` is the last refinement delta
    and whose ``terms_or_nodes`` is the number of nodes at the final level.
    :raises NonConvergence: no agreement within ``max_level`` levels.
    """
    a, b = float(a), float(b)
    if not a < b:
        raise ValueError(f'empty or reversed interval [{a}, {b}]')
    if tol <= 0:
        raise ValueError(f'tolerance must be positive, not {tol}')
    if singular_end not in (None, 'a', 'b', 'both'):
        raise ValueError(f'bad singular_end {singular_end!r}')

    previous, _, _ = _gauss_sum(f, _panel_edges(a, b, 0, singular_end))
    for level in range(1, max_level + 1):
        value, magnitude, nodes = _gauss_sum(f, _panel_edges(a, b, level, singular_end))
        delta = abs(value - previous)
        if delta <= tol * abs(value) or delta <= 64 * np.finfo(float).eps * magnitude:
            return EvalResult(value, delta, nodes)
        previous = value

    raise NonConvergence(f'Gauss-Legendre did not converge on [{a}, {b}] after {max_level} levels')

#---------------------------------------------------------------
# the hypergeometric kernel f_{mu,nu}

def _kernel_unrestricted(mu, nu, t):
    # f_{mu,nu}(t) without the mu > 1/2 guard; used for the lower member of
    # the differential recurrence
    c = mu + 0.5
    at_half = float(hyp2f1_series(0.5 + nu, 0.5 - nu, c, 0.5, max_terms=KERNEL_MAX_TERMS))
    if at_half == 0:
        raise PoleError(f'kernel normalization vanishes for mu = {mu}, nu = {nu}')
    t = np.asarray(t, dtype=float)
    s = 1.0 - t
    body = hyp2f1_series(0.5 + nu, 0.5 - nu, c, s / 2, max_terms=KERNEL_MAX_TERMS)
    return np.power(s, mu - 0.5) * body / at_half

def kernel_f(mu: float, nu: float, t):
    """
    The normalized kernel of the sine representation,

        f_{mu,nu}(t) = (1-t)^(mu-1/2) 2F1(1/2+nu, 1/2-nu; mu+1/2; (1-t)/2)
                                    / 2F1(1/2+nu, 1/2-nu; mu+1/2; 1/2)

    so that f(0) = 1 and f(1) = 0.  Accepts arrays for ``t``.

    :raises DomainError: ``mu <= 1/2``.
    """
    mu, nu = float(mu), float(nu)
    if not mu > 0.5:
        raise DomainError(f'kernel_f needs mu > 1/2, got {mu}')
    return _kernel_unrestricted(mu, nu, t)

def kernel_recurrence_residual(mu: float, nu: float, t: float, h: float = FINITE_DIFFERENCE_STEP) -> float:
    """
    ``|f'_{mu,nu}(t) + a_{mu,nu} f_{mu-1,nu}(t)|`` with the derivative taken
    by a central difference of step ``h``.
    """
    mu, nu = float(mu), float(nu)
    derivative = (kernel_f(mu, nu, t + h) - kernel_f(mu, nu, t - h)) / (2 * h)
    lower = _kernel_unrestricted(mu - 1, nu, t)
    return float(abs(derivative + a_coeff(mu, nu) * lower))

def _sine_integral(kernel, z, tol, singular_end='b'):
    return gauss_legendre(lambda t: np.sin(z * t) * kernel(t), 0.0, 1.0, tol=tol, singular_end=singular_end)

def _check_z(z):
    z = float(z)
    if not z >= 0:
        raise DomainError(f'z must be on the nonnegative real axis, got {z!r}')
    return z

def lommel_quadrature(mu: float, nu: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """ s_{mu,nu}(z) = z^mu * integral_0^1 sin(zt) f_{mu,nu}(t) dt, for mu > 1/2. """
    p = validate_params(mu, nu)
    if not p.mu > 0.5:
        raise DomainError(f'the sine representation needs mu > 1/2, got {p.mu}')
    z = _check_z(z)
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    res = _sine_integral(lambda t: kernel_f(p.mu, p.nu, t), z, tol)
    scale = z ** p.mu
    return EvalResult(scale * res.value, scale * res.est_error, res.terms_or_nodes)

def lommel_cos_quadrature(mu: float, nu: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    s_{mu,nu}(z) = a_{mu+2,nu} / ((mu+1)^2 - nu^2) * z^(mu+1) * integral_0^1 cos(zt) f_{mu+1,nu}(t) dt

    Valid on the same region as the sine form shifted by one in mu; this is
    confirmed against the series rather than assumed.
    """
    p = validate_params(mu, nu)
    if not p.mu + 1 > 0.5:
        raise DomainError(f'the cosine representation needs mu + 1 > 1/2, got mu = {p.mu}')
    z = _check_z(z)
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    prefactor = a_coeff(p.mu + 2, p.nu) / ((p.mu + 1) ** 2 - p.nu ** 2)
    res = gauss_legendre(
        lambda t: np.cos(z * t) * kernel_f(p.mu + 1, p.nu, t),
        0.0, 1.0, tol=tol, singular_end='b',
    )
    scale = prefactor * z ** (p.mu + 1)
    return EvalResult(scale * res.value, scale * res.est_error, res.terms_or_nodes)

#---------------------------------------------------------------
# polynomial kernels

def _exact(mu):
    if isinstance(mu, str):
        return Fraction(mu.strip())
    return Fraction(mu)

def _kernel_sum_coeffs(mu, n):
    # coefficients in powers of u = 1 - t of 2F1(-n, n+1; mu+1/2; u/2)
    coeffs = [Fraction(1)]
    for q in range(n):
        den = (q + 1) * (2 * mu + 2 * q + 1)
        if den == 0:
            raise PoleError(f'vanishing denominator 2*mu + 2*q + 1 at q = {q} (mu = {mu})')
        coeffs.append(coeffs[-1] * (q - n) * (q + n + 1) / den)
    return coeffs

def polynomial_kernel(mu, n: int) -> RationalPoly:
    """
    The degree-``n`` polynomial K with f_{mu,n+1/2}(t) = (1-t)^(mu-1/2) K(t),
    normalized to K(0) = 1.

    ``mu`` is taken exactly: integers, ``Fraction``, ``"num/den"`` strings,
    and floats (by their exact binary value).

    :raises PoleError: a denominator ``2*mu + 2*q + 1`` vanishes, or the
    normalization at t = 0 does.
    """
    if n < 0:
        raise ValueError(f'n must be nonnegative, not {n}')
    mu = _exact(mu)
    coeffs = _kernel_sum_coeffs(mu, n)
    at_zero = sum(coeffs)
    if at_zero == 0:
        raise PoleError(f'polynomial kernel has no normalization at t = 0 (mu = {mu}, n = {n})')

    u = RationalPoly([1, -1])
    out = RationalPoly()
    for c in reversed(coeffs):
        out = out * u + c
    return out / at_zero

def kernel_prefactor(mu, n: int) -> Fraction:
    """
    The product prefactor

        prod_{p=0}^{n-1} (2 mu - 4p + 2n - 1) / (2 mu + 2p - 2n + 1)

    that multiplies the unnormalized sum.  Where a factor is 0/0 the product
    is replaced by its limit, the reciprocal of the sum at t = 0.
    """
    mu = _exact(mu)
    out = Fraction(1)
    for p in range(n):
        num = 2 * mu - 4 * p + 2 * n - 1
        den = 2 * mu + 2 * p - 2 * n + 1
        if den == 0:
            break
        out *= num / den
    else:
        return out

    at_zero = sum(_kernel_sum_coeffs(mu, n))
    if at_zero == 0:
        raise PoleError(f'kernel prefactor is singular (mu = {mu}, n = {n})')
    return 1 / at_zero

def polynomial_kernel_quadrature(mu: float, n: int, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """ s_{mu,n+1/2}(z) through the polynomial kernel. """
    p = validate_params(mu, n + 0.5)
    if not p.mu > -0.5:
        raise DomainError(f'(1-t)^(mu-1/2) is not integrable for mu = {p.mu}')
    z = _check_z(z)
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    coeffs = [float(c) for c in polynomial_kernel(p.mu, n).coeffs]
    kernel = lambda t: np.power(1 - t, p.mu - 0.5) * np.polynomial.polynomial.polyval(t, coeffs)
    res = _sine_integral(kernel, z, tol)
    scale = z ** p.mu
    return EvalResult(scale * res.value, scale * res.est_error, res.terms_or_nodes)

def struve_family_kernel(mu, n: int) -> RationalPoly:
    """
    The even polynomial K with s_{mu,mu+2n}(z) = z^mu integral_0^1 (1-t^2)^(mu-1/2) K(t) sin(zt) dt.

    K(t) = 2F1(-n, mu+n; 1/2; t^2), so n = 1 gives 1 - 2(mu+1)t^2.
    """
    if n < 0:
        raise ValueError(f'n must be nonnegative, not {n}')
    mu = _exact(mu)
    coeffs = [Fraction(0)] * (2 * n + 1)
    c = Fraction(1)
    coeffs[0] = c
    for j in range(n):
        # ratio of successive 2F1 terms at x = t^2, with c = 1/2
        c = c * (j - n) * (mu + n + j) / ((j + Fraction(1, 2)) * (j + 1))
        coeffs[2 * j + 2] = c
    return RationalPoly(coeffs)

def struve_family_quadrature(mu: float, n: int, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    s_{mu,mu+2n}(z) from the Struve-family kernel.

    No extra constant is needed: the first moment
    integral_0^1 t (1-t^2)^(mu-1/2) K(t) dt equals 1 / ((mu+1)^2 - (mu+2n)^2),
    which is the leading series coefficient.
    """
    mu = float(mu)
    validate_params(mu, mu + 2 * n)
    if not mu > -0.5:
        raise DomainError(f'(1-t^2)^(mu-1/2) is not integrable for mu = {mu}')
    z = _check_z(z)
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    poly = struve_family_kernel(mu, n)
    coeffs = [float(c) for c in poly.coeffs]

    kernel = lambda t: np.power(1 - t * t, mu - 0.5) * np.polynomial.polynomial.polyval(t, coeffs)
    res = _sine_integral(kernel, z, tol)
    scale = z ** mu
    return EvalResult(scale * res.value, scale * res.est_error, res.terms_or_nodes)

#---------------------------------------------------------------
# angular forms

def lommel_s0_quadrature(nu: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    s_{0,nu}(z) = 1 / (1 + cos(pi nu)) * integral_0^pi sin(z sin t) cos(nu t) dt
    """
    p = validate_params(0.0, nu)
    z = _check_z(z)
    denom = 1 + math.cos(math.pi * p.nu)
    if abs(denom) < 1e-12:
        raise PoleError(f'1 + cos(pi nu) vanishes at nu = {p.nu}')
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    res = gauss_legendre(lambda t: np.sin(z * np.sin(t)) * np.cos(p.nu * t), 0.0, math.pi, tol=tol)
    return EvalResult(res.value / denom, res.est_error / abs(denom), res.terms_or_nodes)

@dataclass(frozen=True)
class KernelSpec:
    """
    Which kernel an integral representation uses.

    ``payload`` holds the polynomial factor for the polynomial kinds and
    a ``TrigExpansion`` for ``angular_sine``.
    """
    kind: str
    mu: float
    nu: float
    payload: tp.Any = None

    KINDS = ('hyp2f1_weight', 'polynomial_weight', 'struve_family', 'angular_sine')

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f'unknown kernel kind {self.kind!r}')
        if self.kind == 'hyp2f1_weight' and not self.mu > 0.5:
            raise DomainError(f'hyp2f1_weight kernel needs mu > 1/2, got {self.mu}')
        if self.kind in ('polynomial_weight', 'struve_family') and not isinstance(self.payload, RationalPoly):
            raise TypeError(f'{self.kind} kernel needs a RationalPoly payload')
        if self.kind == 'angular_sine' and not hasattr(self.payload, 'coeffs'):
            raise TypeError('angular_sine kernel needs a TrigExpansion payload')

def evaluate_kernel(spec: KernelSpec, t):
    """ The weight function of ``spec`` at ``t`` (an angle for ``angular_sine``). """
    t = np.asarray(t, dtype=float)
    if spec.kind == 'hyp2f1_weight':
        return kernel_f(spec.mu, spec.nu, t)
    coeffs = [float(c) for c in getattr(spec.payload, 'coeffs', ())]
    if spec.kind == 'polynomial_weight':
        return np.power(1 - t, spec.mu - 0.5) * np.polynomial.polynomial.polyval(t, coeffs)
    if spec.kind == 'struve_family':
        return np.power(1 - t * t, spec.mu - 0.5) * np.polynomial.polynomial.polyval(t, coeffs)
    from lommel.hyp_trig import evaluate_expansion
    return evaluate_expansion(spec.payload, t)

#---------------------------------------------------------------
# zeros

def mixed_function(mu: float, nu: float, theta: float, z: float) -> float:
    """
    z^(-mu) (a_{mu,nu} cos(theta) s_{mu-1,nu}(z) + sin(theta) s_{mu,nu}(z)) for z > 0.
    """
    z = _check_z(z)
    if z == 0:
        raise DomainError('the mixed function is evaluated for z > 0 only')
    lower = lommel_series(validate_params(mu - 1, nu), z).value
    upper = lommel_series(validate_params(mu, nu), z).value
    return z ** (-mu) * (a_coeff(mu, nu) * math.cos(theta) * lower + math.sin(theta) * upper)

def count_sign_changes(f: tp.Callable[[float], float], a: float, b: float, samples: int = 64) -> int:
    """
    Number of sign changes of ``f`` over the interior of ``(a, b)``, sampled
    at ``samples - 1`` equally spaced points.
    """
    xs = a + (b - a) * np.arange(1, samples) / samples
    signs = np.sign([f(x) for x in xs])
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
