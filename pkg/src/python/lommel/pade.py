###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
import math
import typing as tp

import sympy

from lommel.errors import ExcludedIndex, ReconciliationError
from lommel.quadrature import polynomial_kernel
from lommel.ratpoly import RationalPoly, primitive_scale

__doc__ = """
Approximant triples (A, B, C) with

    s_{m+1/2, n+1/2}(z) = (A(z) - B(z) cos z - C(z) sin z) / z^(n+1/2)

so that B/A and C/A approximate cos and sin.  Indices (m, n) follow that
identity throughout: the "even family" of index n is (0, 2n) and the "odd
family" of index n is (1, 2n+1).

Several independent constructions are provided so that they can check each
other: closed coefficient sums, Legendre-derivative sums, the antiderivative
of sin(zt) times the polynomial kernel, and the difference equation in m.

Normalizations:

* ``raw_derivative``: the scale at which the identity above holds exactly
  (the kernel is 1 at t = 0).
* ``primitive``: integer coefficients with joint gcd 1 and A's lowest
  coefficient positive.  Ratios B/A and C/A are unchanged.
* ``display``: whatever scale the caller supplied.
"""

RAW = 'raw_derivative'
PRIMITIVE = 'primitive'
DISPLAY = 'display'
NORMALIZATIONS = (PRIMITIVE, DISPLAY, RAW)

@dataclass(frozen=True)
class ApproximantTriple:
    m: int
    n: int
    A: RationalPoly
    B: RationalPoly
    C: RationalPoly
    normalization: str = RAW

    def __post_init__(self):
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f'unknown normalization {self.normalization!r}')
        if self.m < 0 or self.n < 0:
            raise ValueError(f'negative index in ({self.m}, {self.n})')

    def polys(self) -> tp.Tuple[RationalPoly, RationalPoly, RationalPoly]:
        return self.A, self.B, self.C

    def rescaled(self, factor, normalization=DISPLAY) -> 'ApproximantTriple':
        return ApproximantTriple(
            self.m, self.n,
            self.A * factor, self.B * factor, self.C * factor,
            normalization=normalization,
        )

    def primitive(self) -> 'ApproximantTriple':
        factor = primitive_scale(self.polys())
        lowest = next(c for p in self.polys() for c in p.coeffs if c != 0)
        if lowest < 0:
            factor = -factor
        return self.rescaled(factor, normalization=PRIMITIVE)

    def normalized(self, normalization) -> 'ApproximantTriple':
        """ Convert a ``raw_derivative`` triple to ``normalization``. """
        if normalization == PRIMITIVE:
            return self.primitive()
        if normalization == self.normalization:
            return self
        raise ValueError(f'cannot convert a {self.normalization} triple to {normalization}')

def even_family_indices(n):
    return 0, 2 * n

def odd_family_indices(n):
    return 1, 2 * n + 1

def _check_index(n):
    if int(n) != n or n < 0:
        raise ValueError(f'family index must be a nonnegative integer, not {n!r}')
    return int(n)

#---------------------------------------------------------------
# Legendre-type polynomials in t

def legendre_poly(n: int) -> RationalPoly:
    """
    P_{2n}(t) = 2^(-2n) sum_k (-1)^k (4n-2k)! / (k! (2n-k)! (2n-2k)!) t^(2n-2k)
    """
    n = _check_index(n)
    coeffs = [Fraction(0)] * (2 * n + 1)
    for k in range(n + 1):
        coeffs[2 * n - 2 * k] = Fraction(
            (-1) ** k * factorial(4 * n - 2 * k),
            factorial(k) * factorial(2 * n - k) * factorial(2 * n - 2 * k) * 4 ** n,
        )
    return RationalPoly(coeffs)

def legendre_poly_at_one(n: int) -> RationalPoly:
    """
    P_{2n}(t) from its expansion about t = 1,

        sum_{k=0}^{2n} (-1)^k (2n+k)! / ((k!)^2 (2n-k)!) ((1-t)/2)^k
    """
    n = _check_index(n)
    x = RationalPoly([Fraction(1, 2), Fraction(-1, 2)])
    out = RationalPoly()
    for k in reversed(range(2 * n + 1)):
        c = Fraction((-1) ** k * factorial(2 * n + k), factorial(k) ** 2 * factorial(2 * n - k))
        out = out * x + c
    return out

def p_normalized(n: int) -> RationalPoly:
    """ p_{2n}(t) = P_{2n}(t) / P_{2n}(0) """
    p = legendre_poly(n)
    return p / p[0]

def q_poly(n: int) -> RationalPoly:
    """
    q_{2n+1}(t) = (1-t) 2F1(-2n-1, 2n+2; 2; (1-t)/2) / 2F1(-2n-1, 2n+2; 2; 1/2)

    A polynomial of degree 2n+2 with q(0) = 1 and q(1) = 0, built from the
    terminating sum.
    """
    n = _check_index(n)
    a, b, c = -2 * n - 1, 2 * n + 2, 2
    g = [Fraction(1)]
    for k in range(2 * n + 1):
        g.append(g[-1] * (a + k) * (b + k) / ((c + k) * (k + 1)))
    hyp = RationalPoly(g)

    x = RationalPoly([Fraction(1, 2), Fraction(-1, 2)])
    body = RationalPoly([1, -1]) * hyp.compose(x)
    return body / hyp(Fraction(1, 2), exact=True)

#---------------------------------------------------------------
# antiderivative of sin(zt) R(t)

@dataclass(frozen=True)
class SinAntiderivative:
    """
    An antiderivative of sin(zt) R(t) in the form

        z^-(k+1) sum_p z^p (cos(zt) cos_part[p](t) + sin(zt) sin_part[p](t))

    where k = deg R.  ``cos_part`` and ``sin_part`` have k+1 entries, each a
    polynomial in t (so together they form a matrix of rationals).
    """
    degree: int
    cos_part: tp.Tuple[RationalPoly, ...]
    sin_part: tp.Tuple[RationalPoly, ...]

    def triple(self) -> tp.Tuple[RationalPoly, RationalPoly, RationalPoly]:
        """
        ``(A, B, C)`` with z^(k+1) integral_0^1 sin(zt) R(t) dt = A - B cos z - C sin z.
        """
        one, zero = Fraction(1), Fraction(0)
        A = RationalPoly([-q(zero, exact=True) for q in self.cos_part])
        B = RationalPoly([-q(one, exact=True) for q in self.cos_part])
        C = RationalPoly([-s(one, exact=True) for s in self.sin_part])
        return A, B, C

    def definite(self, z: float) -> float:
        """ integral_0^1 sin(zt) R(t) dt, for z > 0. """
        if not z > 0:
            raise ValueError(f'definite integral is evaluated for z > 0, not {z}')
        A, B, C = self.triple()
        return float((A(z) - B(z) * math.cos(z) - C(z) * math.sin(z)) / z ** (self.degree + 1))

def antideriv_sin(R: RationalPoly) -> SinAntiderivative:
    if R.is_zero():
        raise ValueError('antiderivative of the zero polynomial is not tabulated')
    k = R.degree
    derivs = [R]
    for _ in range(k + 1):
        derivs.append(derivs[-1].derivative())

    cos_part = [RationalPoly()] * (k + 1)
    sin_part = [RationalPoly()] * (k + 1)
    for j in range(k // 2 + 1):
        cos_part[k - 2 * j] = derivs[2 * j] * (-1) ** (j + 1)
        if k - 2 * j - 1 >= 0:
            sin_part[k - 2 * j - 1] = derivs[2 * j + 1] * (-1) ** j
    return SinAntiderivative(k, tuple(cos_part), tuple(sin_part))

def _derivative_sums(R: RationalPoly, k: int):
    # A = sum_j (-1)^j z^(k-2j) R^(2j)(0), B the same at t = 1,
    # C = sum_j (-1)^(j+1) z^(k-2j-1) R^(2j+1)(1)
    A = [Fraction(0)] * (k + 1)
    B = [Fraction(0)] * (k + 1)
    C = [Fraction(0)] * (k + 1)
    deriv = R
    for order in range(k + 1):
        j = order // 2
        if order % 2 == 0:
            A[k - order] = (-1) ** j * deriv[0]
            B[k - order] = (-1) ** j * deriv(1, exact=True)
        else:
            C[k - order] = (-1) ** (j + 1) * deriv(1, exact=True)
        deriv = deriv.derivative()
    return RationalPoly(A), RationalPoly(B), RationalPoly(C)

#---------------------------------------------------------------
# the two families

def triple_even_closed(n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """
    Even family (0, 2n) from the closed coefficient sums

        A = (n!)^2/(2n)! sum_k (2n+2k)! / ((n+k)! (n-k)!) z^(2n-2k)
        B = (n!)^2 (-1)^n/(2n)! sum_k (-1)^k (2n+2k)! / ((2k)! (2n-2k)!) (2z)^(2n-2k)
        C = (n!)^2 (-1)^n/(2n)! sum_{k<n} (-1)^(k+1) (2n+2k+1)! / ((2k+1)! (2n-2k-1)!) (2z)^(2n-2k-1)
    """
    n = _check_index(n)
    pre = Fraction(factorial(n) ** 2, factorial(2 * n))
    sign = (-1) ** n
    A = [Fraction(0)] * (2 * n + 1)
    B = [Fraction(0)] * (2 * n + 1)
    C = [Fraction(0)] * (2 * n + 1)
    for k in range(n + 1):
        A[2 * n - 2 * k] = pre * Fraction(factorial(2 * n + 2 * k), factorial(n + k) * factorial(n - k))
        B[2 * n - 2 * k] = pre * sign * (-1) ** k * Fraction(
            factorial(2 * n + 2 * k), factorial(2 * k) * factorial(2 * n - 2 * k),
        ) * 2 ** (2 * n - 2 * k)
    for k in range(n):
        C[2 * n - 2 * k - 1] = pre * sign * (-1) ** (k + 1) * Fraction(
            factorial(2 * n + 2 * k + 1), factorial(2 * k + 1) * factorial(2 * n - 2 * k - 1),
        ) * 2 ** (2 * n - 2 * k - 1)
    m, nn = even_family_indices(n)
    raw = ApproximantTriple(m, nn, RationalPoly(A), RationalPoly(B), RationalPoly(C), RAW)
    return raw.normalized(normalization)

def triple_even_derivative(n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """ Even family (0, 2n) from the derivatives of p_{2n} at t = 0 and t = 1. """
    n = _check_index(n)
    A, B, C = _derivative_sums(p_normalized(n), 2 * n)
    m, nn = even_family_indices(n)
    return ApproximantTriple(m, nn, A, B, C, RAW).normalized(normalization)

def triple_odd_derivative(n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """ Odd family (1, 2n+1) from the derivatives of q_{2n+1} at t = 0 and t = 1. """
    n = _check_index(n)
    A, B, C = _derivative_sums(q_poly(n), 2 * n + 2)
    m, nn = odd_family_indices(n)
    return ApproximantTriple(m, nn, A, B, C, RAW).normalized(normalization)

def odd_closed_bc(n: int) -> tp.Tuple[RationalPoly, RationalPoly]:
    """
    B and C of the odd family (1, 2n+1) from the closed sums

        B = P sum_k (-1)^k (2n+2k+2)! / ((2k+1)! (2n-2k)!) (2z)^(2n-2k)
        C = P sum_k (-1)^k (2n+2k+1)! / ((2k)! (2n-2k+1)!) (2z)^(2n-2k+1)

    with P = 2(2n+1) ((n+1)!)^2 (-1)^n / (2n+2)!.
    """
    n = _check_index(n)
    pre = Fraction(2 * (2 * n + 1) * factorial(n + 1) ** 2 * (-1) ** n, factorial(2 * n + 2))
    B = [Fraction(0)] * (2 * n + 2)
    C = [Fraction(0)] * (2 * n + 2)
    for k in range(n + 1):
        B[2 * n - 2 * k] = pre * (-1) ** k * Fraction(
            factorial(2 * n + 2 * k + 2), factorial(2 * k + 1) * factorial(2 * n - 2 * k),
        ) * 2 ** (2 * n - 2 * k)
        C[2 * n - 2 * k + 1] = pre * (-1) ** k * Fraction(
            factorial(2 * n + 2 * k + 1), factorial(2 * k) * factorial(2 * n - 2 * k + 1),
        ) * 2 ** (2 * n - 2 * k + 1)
    return RationalPoly(B), RationalPoly(C)

def triple_odd_closed(n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """
    Odd family (1, 2n+1) with B and C from their closed sums and A from the
    q-derivative route (the closed sum for A is not usable as printed).

    :raises ReconciliationError: the closed B, C are not a common multiple of
    the derivative-route B, C.
    """
    deriv = triple_odd_derivative(n, normalization=RAW)
    B, C = odd_closed_bc(n)
    # one scale must carry both closed polynomials onto the derivative route
    factor = deriv.B.leading / B.leading
    if B * factor != deriv.B or C * factor != deriv.C:
        raise ReconciliationError(
            f'closed B, C of the odd family disagree with the derivative route at n = {n}'
        )
    raw = ApproximantTriple(deriv.m, deriv.n, deriv.A, B * factor, C * factor, RAW)
    return raw.normalized(normalization)

def odd_a_from_even(n: int) -> RationalPoly:
    """
    A_{1,2n+1} = ((2n+1) A_{0,2n+2} + 2 z^2 (n+1) A_{0,2n}) / (4n+3)

    at ``raw_derivative`` scale.  Note the roles of A_{0,2n} and A_{0,2n+2};
    the opposite assignment already fails at n = 0.
    """
    n = _check_index(n)
    lower = triple_even_closed(n, normalization=RAW).A
    upper = triple_even_closed(n + 1, normalization=RAW).A
    z2 = RationalPoly.monomial(2)
    return (upper * (2 * n + 1) + z2 * lower * (2 * (n + 1))) / (4 * n + 3)

#---------------------------------------------------------------
# general (m, n)

def is_excluded_index(m: int, n: int) -> bool:
    """ (m, n) is excluded when n = m + 2k + 1 for some k >= 0. """
    return n > m and (n - m) % 2 == 1

def triple_direct(m: int, n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """
    Any non-excluded (m, n) straight from the antiderivative of
    sin(zt) (1-t)^m K(t), where K is the polynomial kernel for
    mu = m + 1/2, nu = n + 1/2.
    """
    m, n = _check_index(m), _check_index(n)
    if is_excluded_index(m, n):
        raise ExcludedIndex(f'(m, n) = ({m}, {n}) is excluded: n - m is odd and positive')
    R = RationalPoly([1, -1]) ** m * polynomial_kernel(Fraction(2 * m + 1, 2), n)
    A, B, C = antideriv_sin(R).triple()
    return ApproximantTriple(m, n, A, B, C, RAW).normalized(normalization)

def triple_general(m: int, n: int, normalization=PRIMITIVE) -> ApproximantTriple:
    """
    Walk the difference equations

        A_{m+2,n} + (m+n+2)(m+1-n) A_{m,n} = z^(m+n+2)
        B_{m+2,n} + (m+n+2)(m+1-n) B_{m,n} = 0       (same for C)

    up from the base triple (m mod 2, n).

    :raises ExcludedIndex: (m, n) or its base is excluded, or a step factor vanishes.
    """
    m, n = _check_index(m), _check_index(n)
    if is_excluded_index(m, n):
        raise ExcludedIndex(f'(m, n) = ({m}, {n}) is excluded: n - m is odd and positive')
    base = m % 2
    if is_excluded_index(base, n):
        raise ExcludedIndex(f'difference chain to ({m}, {n}) starts from excluded base ({base}, {n})')

    t = triple_direct(base, n, normalization=RAW)
    A, B, C = t.polys()
    for mm in range(base, m, 2):
        factor = (mm + n + 2) * (mm + 1 - n)
        if factor == 0:
            raise ExcludedIndex(f'difference chain to ({m}, {n}) crosses a vanishing factor at m = {mm}')
        A = RationalPoly.monomial(mm + n + 2) - A * factor
        B = B * -factor
        C = C * -factor
    return ApproximantTriple(m, n, A, B, C, RAW).normalized(normalization)

#---------------------------------------------------------------
# scaling relations

def _to_fraction(expr) -> Fraction:
    expr = sympy.simplify(expr)
    if not isinstance(expr, sympy.Rational):
        raise ReconciliationError(f'expected an exact rational, got {expr}')
    return Fraction(int(expr.p), int(expr.q))

def scaling_factor(m: int, n: int, family: str = 'even') -> Fraction:
    """
    The constant relating B (and C) across m,

        even:  B_{2m,2n}     = (-1)^m 4^m (m+n)!   Gamma(m-n+1/2) / (n!     Gamma(1/2-n)) B_{0,2n}
        odd:   B_{2m+1,2n+1} = (-1)^m 4^m (m+n+1)! Gamma(m-n+1/2) / ((n+1)! Gamma(1/2-n)) B_{1,2n+1}

    The half-integer Gamma ratio is evaluated exactly.
    """
    m, n = _check_index(m), _check_index(n)
    half = sympy.Rational(1, 2)
    ratio = sympy.gamma(m - n + half) / sympy.gamma(half - n)
    if family == 'even':
        count = sympy.factorial(m + n) / sympy.factorial(n)
    elif family == 'odd':
        count = sympy.factorial(m + n + 1) / sympy.factorial(n + 1)
    else:
        raise ValueError(f'family must be even or odd, not {family!r}')
    return _to_fraction((-1) ** m * 4 ** m * count * ratio)

def scaled_a(m_target: int, n: int) -> RationalPoly:
    """
    A_{m_target,n} from the scaling relation with its inhomogeneous sum,
    written with the summation index in every Gamma argument:

        A_{2m,n} = F A_{0,n} + (-1)^(m+1) 4^m G(2m+n+2) G(2m-n+1) z^(n+2)/4
                               sum_{j<m} (-1)^j (z/2)^(2j) / (G(2j+n+4) G(2j+3-n))

    with G(x) = Gamma(x/2), F the homogeneous factor, and the analogue shifted
    by one for odd ``m_target``.  The base A is taken at ``raw_derivative`` scale.
    """
    m_target, n = _check_index(m_target), _check_index(n)
    m, shift = divmod(m_target, 2)
    base = triple_direct(shift, n, normalization=RAW).A
    g = lambda x: sympy.gamma(sympy.Rational(x, 2))

    homogeneous = (-1) ** m * 4 ** m * g(2 * m + n + 2 + shift) * g(2 * m - n + 1 + shift) \
        / (g(n + 2 + shift) * g(1 - n + shift))
    outer = (-1) ** (m + 1) * 4 ** m * g(2 * m + n + 2 + shift) * g(2 * m - n + 1 + shift) / 4

    out = base * _to_fraction(homogeneous)
    for j in range(m):
        c = outer * (-1) ** j / (4 ** j * g(2 * j + n + 4 + shift) * g(2 * j + 3 - n + shift))
        out = out + RationalPoly.monomial(n + 2 + shift + 2 * j, _to_fraction(c))
    return out

#---------------------------------------------------------------
# checks

def pythagorean_check(t: ApproximantTriple) -> bool:
    """ B^2 + C^2 - A^2 vanishes for all powers below m + n + 2. """
    excess = t.B * t.B + t.C * t.C - t.A * t.A
    return all(excess[k] == 0 for k in range(t.m + t.n + 2))

def half_integer_lommel(t: ApproximantTriple, z: float) -> float:
    """
    s_{m+1/2,n+1/2}(z) = (A - B cos z - C sin z) / z^(n+1/2), for a
    ``raw_derivative`` triple and z > 0.
    """
    if t.normalization != RAW:
        raise ValueError(f'half_integer_lommel needs a raw_derivative triple, got {t.normalization}')
    if not z > 0:
        raise ValueError(f'z must be positive, not {z}')
    value = t.A(z) - t.B(z) * math.cos(z) - t.C(z) * math.sin(z)
    return float(value / z ** (t.n + 0.5))
