###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from dataclasses import dataclass
from fractions import Fraction
import math
import numbers
import typing as tp

from mpmath import mp
import numpy as np

from lommel.core import EvalResult, validate_params
from lommel.errors import DomainError, PoleError
from lommel.hypergeometric import hyp2f1_series
from lommel.quadrature import DEFAULT_TOL, gauss_legendre

__doc__ = """
Trigonometric forms at integer mu.

For n >= 1,

    s_{n,nu}(z) = z^n integral_0^{pi/2} sin(z cos th) f_n(nu, th) sin th dth

    f_n(nu, th) = sum_{k<n} a_k sin((nu-n+2k+1) th) / sin((nu-n+2k+1) pi/2)

and f_n(nu, th) is the kernel f_{n,nu}(t) at t = cos th.  The same
coefficients give a closed form for 2F1(1/2+nu, 1/2-nu; n+1/2; sin(th/2)^2).

Coefficients are exact ``Fraction`` when nu is given as an int, Fraction or
"num/den" string, and floats otherwise.
"""

# a vanishing factor or sine denominator, in float mode
POLE_TOL = 1e-12

# nu this close to a pole of the closed 2F1 prefactor is rejected
HYP2F1_POLE_TOL = 1e-6

# below this |theta| the closed 2F1 form is 0/0 and the series is summed instead
SMALL_THETA = 1e-4

# working digits of the closed 2F1 form, before the cancellation allowance
BASE_DPS = 25

Number = tp.Union[float, Fraction]

def _coerce_nu(nu) -> Number:
    if isinstance(nu, bool):
        raise TypeError(f'refusing to treat bool {nu!r} as nu')
    if isinstance(nu, Fraction):
        return nu
    if isinstance(nu, numbers.Integral):
        return Fraction(int(nu))
    if isinstance(nu, str):
        return Fraction(nu.strip())
    return float(nu)

def _is_zero(x: Number) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    return abs(x) < POLE_TOL

def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f'n must be a positive integer, not {n!r}')
    return int(n)

def a_k_n(n: int, k: int, nu) -> Number:
    """
    a_k^n(nu) = 2^(1-n) prod_{p=1}^{n-1} (nu-n+2p+1)/(nu-p+1)
                        prod_{q=1}^{k} (n-q)(q+nu-n) / (q (q+nu))

    :raises PoleError: a factor nu-p+1 or q+nu vanishes.
    """
    n = _check_n(n)
    if not 0 <= k < n:
        raise ValueError(f'k must lie in 0..{n - 1}, not {k}')
    nu = _coerce_nu(nu)

    one = Fraction(1) if isinstance(nu, Fraction) else 1.0
    out = one / 2 ** (n - 1)
    for p in range(1, n):
        den = nu - p + 1
        if _is_zero(den):
            raise PoleError(f'a_k^n has a pole at nu = {nu} (factor nu - {p - 1})')
        out *= (nu - n + 2 * p + 1) / den
    for q in range(1, k + 1):
        den = q * (q + nu)
        if _is_zero(den):
            raise PoleError(f'a_k^n has a pole at nu = {nu} (factor nu + {q})')
        out *= (n - q) * (q + nu - n) / den
    return out

def coefficient_recursion_residuals(n: int, nu) -> tp.List[Number]:
    """ k(k+nu) a_k + (k-n)(k-n+nu) a_{k-1} for k = 1..n-1; exact in rational mode. """
    n = _check_n(n)
    nu = _coerce_nu(nu)
    a = [a_k_n(n, k, nu) for k in range(n)]
    return [k * (k + nu) * a[k] + (k - n) * (k - n + nu) * a[k - 1] for k in range(1, n)]

@dataclass(frozen=True)
class TrigExpansion:
    """ f_n(nu, .) as a sum of sines; ``coeffs[k]`` multiplies sin(frequencies[k] th) / denominators[k]. """
    n: int
    nu: Number
    coeffs: tp.Tuple[Number, ...]
    frequencies: tp.Tuple[float, ...]
    denominators: tp.Tuple[float, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n:
            raise ValueError(f'expected {self.n} coefficients, got {len(self.coeffs)}')
        for den in self.denominators:
            if abs(den) <= POLE_TOL:
                raise PoleError(f'sine denominator vanishes for n = {self.n}, nu = {self.nu}')

def trig_expansion(n: int, nu) -> TrigExpansion:
    n = _check_n(n)
    nu = _coerce_nu(nu)
    coeffs = tuple(a_k_n(n, k, nu) for k in range(n))
    frequencies = tuple(float(nu) - n + 2 * k + 1 for k in range(n))
    denominators = tuple(math.sin(w * math.pi / 2) for w in frequencies)
    return TrigExpansion(n, nu, coeffs, frequencies, denominators)

def evaluate_expansion(exp: TrigExpansion, theta):
    """ f_n(nu, theta); accepts numpy arrays. """
    theta = np.asarray(theta, dtype=float)
    out = np.zeros_like(theta)
    for a, w, den in zip(exp.coeffs, exp.frequencies, exp.denominators):
        out = out + float(a) / den * np.sin(w * theta)
    return out[()]

def f_n(n: int, nu, theta):
    return evaluate_expansion(trig_expansion(n, nu), theta)

def f_n_derivatives(n: int, nu, theta: float) -> tp.Tuple[float, float, float]:
    """ ``(f, f', f'')`` in theta, differentiating the sine sum term by term. """
    exp = trig_expansion(n, nu)
    f = df = d2f = 0.0
    for a, w, den in zip(exp.coeffs, exp.frequencies, exp.denominators):
        c = float(a) / den
        f += c * math.sin(w * theta)
        df += c * w * math.cos(w * theta)
        d2f -= c * w * w * math.sin(w * theta)
    return f, df, d2f

def ode_residual(n: int, nu, theta: float) -> float:
    """
    |sin(th) f'' - 2(n-1) cos(th) f' - sin(th) ((n-1)^2 - nu^2) f| for th in (0, pi/2).
    """
    if not 0 < theta < math.pi / 2:
        raise DomainError(f'theta must lie in (0, pi/2), not {theta}')
    n = _check_n(n)
    nu_f = float(_coerce_nu(nu))
    f, df, d2f = f_n_derivatives(n, nu, theta)
    s, c = math.sin(theta), math.cos(theta)
    return abs(s * d2f - 2 * (n - 1) * c * df - s * ((n - 1) ** 2 - nu_f ** 2) * f)

def lommel_trig_integral(n: int, nu, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """
    s_{n,nu}(z) from the angular integral over [0, pi/2].  For n = 0 the form

        s_{0,nu}(z) = 1/cos(nu pi/2) integral_0^{pi/2} sin(z cos th) cos(nu th) dth

    is used instead.
    """
    if int(n) != n or n < 0:
        raise ValueError(f'n must be a nonnegative integer, not {n!r}')
    n = int(n)
    nu_f = float(_coerce_nu(nu))
    validate_params(n, nu_f)
    z = float(z)
    if not z >= 0:
        raise DomainError(f'z must be on the nonnegative real axis, got {z!r}')
    if z == 0:
        return EvalResult(0.0, 0.0, 1)

    half_pi = math.pi / 2
    if n == 0:
        denom = math.cos(nu_f * half_pi)
        if abs(denom) < POLE_TOL:
            raise PoleError(f'cos(nu pi/2) vanishes at nu = {nu_f}')
        res = gauss_legendre(lambda th: np.sin(z * np.cos(th)) * np.cos(nu_f * th), 0.0, half_pi, tol=tol)
        return EvalResult(res.value / denom, res.est_error / abs(denom), res.terms_or_nodes)

    exp = trig_expansion(n, nu)
    integrand = lambda th: np.sin(z * np.cos(th)) * evaluate_expansion(exp, th) * np.sin(th)
    res = gauss_legendre(integrand, 0.0, half_pi, tol=tol)
    scale = z ** n
    return EvalResult(scale * res.value, scale * res.est_error, res.terms_or_nodes)

def _working_dps(n, theta):
    # the sine sum cancels to order sin(theta/2)^(2n-1)
    small = abs(math.sin(theta / 2))
    return BASE_DPS + int(math.ceil((2 * n - 1) * max(0.0, -math.log10(small))))

def hyp2f1_trig(n: int, nu: float, theta: float) -> float:
    """
    2F1(1/2+nu, 1/2-nu; n+1/2; sin(theta/2)^2) from its closed trigonometric form

        prod_{p<n} (2p+1)/(nu-p) / (2^(3n-2) sin(theta/2)^(2n-1))
            * sum_{k<n} prod_{q=1}^{k} (q-n)(q+nu-n) / (q (q+nu)) * sin((1-n+nu+2k) theta)

    for |theta| < pi, summed in mpmath.  Near theta = 0 the hypergeometric
    series is summed directly.

    :raises PoleError: nu is within ``HYP2F1_POLE_TOL`` of an integer j with |j| <= n-1.
    :raises DomainError: |theta| >= pi.
    """
    n = _check_n(n)
    nu, theta = float(nu), float(theta)
    if not abs(theta) < math.pi:
        raise DomainError(f'the closed form holds for |theta| < pi, not {theta}')
    for j in range(-(n - 1), n):
        if abs(nu - j) < HYP2F1_POLE_TOL:
            raise PoleError(f'nu = {nu} is at the pole {j} of the closed 2F1 form (n = {n})')

    if abs(theta) < SMALL_THETA:
        x = math.sin(theta / 2) ** 2
        return float(hyp2f1_series(0.5 + nu, 0.5 - nu, n + 0.5, x))

    with mp.workdps(_working_dps(n, theta)):
        v, th = mp.mpf(nu), mp.mpf(theta)
        pre = mp.mpf(1)
        for p in range(n):
            pre *= (2 * p + 1) / (v - p)
        pre /= 2 ** (3 * n - 2) * mp.sin(th / 2) ** (2 * n - 1)

        total = mp.mpf(0)
        weight = mp.mpf(1)
        for k in range(n):
            if k:
                weight *= (k - n) * (k + v - n) / (k * (k + v))
            total += weight * mp.sin((1 - n + v + 2 * k) * th)
        return float(pre * total)
