###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from fractions import Fraction
from functools import reduce
import math
import numbers
import typing as tp

import numpy as np

__doc__ = """
Exact univariate polynomials over the rationals, and the truncated sine and
cosine series used to check approximation orders.

Coefficients are ``fractions.Fraction`` (always stored reduced, with a positive
denominator), indexed by power, lowest power first.

Series truncation is "through z^order inclusive" everywhere in this module:
``trig_series('cosine', 4)`` keeps the z^4 term and drops z^6 onwards.
"""

Rational = Fraction
Scalar = tp.Union[int, Fraction, str]

SINE = 'sine'
COSINE = 'cosine'
_KIND_ALIASES = {'sine': SINE, 'sin': SINE, 'cosine': COSINE, 'cos': COSINE}

def rational(x) -> Fraction:
    """
    Coerce ``x`` to an exact, reduced ``Fraction``.

    Accepts integers, ``Fraction`` and strings like ``"-3/4"`` or ``"12"``.
    Floats are refused, since silently turning ``0.1`` into
    ``3602879701896397/36028797018963968`` is never what anybody meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f'refusing to treat bool {x!r} as a rational')
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f'cannot make an exact rational from {type(x).__name__} {x!r}')

class RationalPoly:
    """
    Immutable polynomial with exact rational coefficients.

    The highest stored coefficient is nonzero; the zero polynomial has no
    coefficients and degree -1.
    """
    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: tp.Iterable[Scalar] = ()):
        coeffs = [rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            assert c.denominator > 0 and math.gcd(c.numerator, c.denominator) == 1
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> 'RationalPoly':
        if power < 0:
            raise ValueError(f'negative power {power}')
        return cls([0] * power + [rational(coeff)])

    @classmethod
    def constant(cls, value: Scalar) -> 'RationalPoly':
        return cls([value])

    @property
    def coeffs(self) -> tp.Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            raise IndexError(f'negative power {power}')
        if power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __neg__(self):
        return RationalPoly(-c for c in self._coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, RationalPoly):
            raise TypeError('polynomial division is not supported; divide by a scalar')
        scalar = rational(scalar)
        if scalar == 0:
            raise ZeroDivisionError('polynomial divided by zero')
        return RationalPoly(c / scalar for c in self._coeffs)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, numbers.Integral) or exponent < 0:
            raise ValueError(f'exponent must be a nonnegative integer, not {exponent!r}')
        out = RationalPoly([1])
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def __call__(self, z, exact=False):
        return poly_eval(self, z, exact=exact)

    def derivative(self, order: int = 1) -> 'RationalPoly':
        coeffs = list(self._coeffs)
        for _ in range(order):
            coeffs = [k * c for (k, c) in enumerate(coeffs)][1:]
        return RationalPoly(coeffs)

    def truncate(self, order: int) -> 'RationalPoly':
        """ Keep the powers 0 through ``order`` inclusive. """
        return RationalPoly(self._coeffs[:max(order + 1, 0)])

    def compose(self, inner: 'RationalPoly') -> 'RationalPoly':
        """ ``self(inner(z))``, by Horner's rule on polynomials. """
        out = RationalPoly()
        for c in reversed(self._coeffs):
            out = out * inner + c
        return out

    def parity(self) -> tp.Optional[str]:
        """ ``'even'``, ``'odd'``, or ``None`` for mixed parity.  Zero is even. """
        powers = {k % 2 for (k, c) in enumerate(self._coeffs) if c != 0}
        if not powers or powers == {0}:
            return 'even'
        if powers == {1}:
            return 'odd'
        return None

    def scale_variable(self, factor: Scalar) -> 'RationalPoly':
        """ ``self(factor * z)`` """
        factor = rational(factor)
        return RationalPoly(c * factor ** k for (k, c) in enumerate(self._coeffs))

    def to_string(self, var='z') -> str:
        if self.is_zero():
            return '0'
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                mono = ''
            elif k == 1:
                mono = var
            else:
                mono = f'{var}^{k}'
            if not mono:
                text = str(abs(c))
            elif abs(c) == 1:
                text = mono
            else:
                text = f'{abs(c)}*{mono}'
            terms.append(('-' if c < 0 else '+', text))
        sign, text = terms[0]
        out = ('-' if sign == '-' else '') + text
        for sign, text in terms[1:]:
            out += f' {sign} {text}'
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f'RationalPoly({to_cereal(self)!r})'

def _coerce(x) -> tp.Union[RationalPoly, type(NotImplemented)]:
    if isinstance(x, RationalPoly):
        return x
    if isinstance(x, (numbers.Integral, Fraction)) and not isinstance(x, bool):
        return RationalPoly([x])
    return NotImplemented

def poly_eval(p: RationalPoly, z, exact=False):
    """
    Evaluate ``p`` at ``z``.

    :param z: a rational (``int``, ``Fraction`` or ``"num/den"`` string) when
    ``exact`` is set; otherwise a float, complex or numpy array.
    :param exact: evaluate in exact rational arithmetic by Horner's rule.
    :return: a ``Fraction`` in exact mode, else a numpy float/complex value
    (or array) computed in double precision.
    """
    if exact:
        z = rational(z)
        out = Fraction(0)
        for c in reversed(p.coeffs):
            out = out * z + c
        return out

    coeffs = [float(c) for c in p.coeffs] or [0.0]
    return np.polynomial.polynomial.polyval(z, coeffs)

def poly_derivative(p: RationalPoly) -> RationalPoly:
    return p.derivative()

def trig_series(kind: str, order: int) -> RationalPoly:
    """
    Maclaurin series of sin or cos with exact coefficients, through ``z**order``
    inclusive.

    :param kind: ``'sine'`` or ``'cosine'`` (``'sin'``/``'cos'`` also accepted).
    """
    try:
        kind = _KIND_ALIASES[kind]
    except KeyError:
        raise ValueError(f'unknown series kind {kind!r}')
    if order < 0:
        raise ValueError(f'series order must be nonnegative, not {order}')

    start = 1 if kind == SINE else 0
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(start, order + 1, 2):
        coeffs[k] = Fraction((-1) ** ((k - start) // 2), math.factorial(k))
    return RationalPoly(coeffs)

def _residual_series(triple, order: int) -> RationalPoly:
    # A - B cos z - C sin z through z^order inclusive
    cos = trig_series(COSINE, order)
    sin = trig_series(SINE, order)
    out = triple.A - triple.B * cos - triple.C * sin
    return out.truncate(order)

def pade_order_check(triple, order: int) -> tp.Tuple[bool, tp.Optional[int]]:
    """
    Check that ``A(z) - B(z) cos z - C(z) sin z`` has vanishing coefficients
    for every power ``0 .. order - 1``.  Computed in exact arithmetic.

    :param triple: anything with ``A``, ``B`` and ``C`` attributes holding
    ``RationalPoly`` (usually an ``ApproximantTriple``).
    :return: ``(True, None)`` on success, otherwise ``(False, power)`` with
    the lowest power whose coefficient is nonzero.
    """
    if order < 1:
        raise ValueError(f'order must be at least 1, not {order}')
    residual = _residual_series(triple, order - 1)
    for k, c in enumerate(residual.coeffs):
        if c != 0:
            return False, k
    return True, None

def approximation_order(triple, limit: tp.Optional[int] = None) -> tp.Optional[int]:
    """
    The lowest power with a nonzero coefficient in ``A - B cos - C sin``.

    Powers up to ``limit`` are examined (by default, twice the total degree
    of the triple plus a margin).  Returns ``None`` if all of them vanish.
    """
    if limit is None:
        limit = 2 * (max(triple.A.degree, 0) + max(triple.B.degree, 0) + max(triple.C.degree, 0)) + 4
    residual = _residual_series(triple, limit)
    for k, c in enumerate(residual.coeffs):
        if c != 0:
            return k
    return None

def primitive_scale(polys: tp.Iterable[RationalPoly]) -> Fraction:
    """
    The positive rational ``s`` such that multiplying every polynomial in
    ``polys`` by ``s`` yields integer coefficients with joint gcd 1.
    """
    coeffs = [c for p in polys for c in p.coeffs if c != 0]
    if not coeffs:
        raise ValueError('cannot normalize a collection of zero polynomials')
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
    gcd = reduce(math.gcd, (abs(c.numerator) * (lcm // c.denominator) for c in coeffs), 0)
    return Fraction(lcm, gcd)

def to_cereal(p: RationalPoly, **_kw) -> tp.List[str]:
    """ Coefficient strings, lowest power first.  Integers are written bare. """
    return [str(c) for c in p.coeffs]

def from_cereal(cereal, **_kw) -> RationalPoly:
    if isinstance(cereal, (str, bytes)):
        raise TypeError(f'expected a list of coefficients, got {type(cereal).__name__}')
    return RationalPoly(cereal)
