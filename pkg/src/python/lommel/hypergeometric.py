###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

import typing as tp

import numpy as np

from lommel.errors import NonConvergence, PoleError

__doc__ = """
Direct summation of generalized hypergeometric series.

These are the plain Gauss-style sums, with no transformation formulas; they
serve both as building blocks (the quadrature kernels sum a 2F1 at argument
at most 1/2) and as oracles for the closed forms in ``lommel.hyp_trig``.
"""

DEFAULT_TOL = 1e-16
DEFAULT_MAX_TERMS = 100000

# parameters closer than this to a nonpositive integer are treated as equal to it
INTEGER_TOL = 1e-12

def _nonpositive_integer(x):
    r = round(x)
    return r <= 0 and abs(x - r) < INTEGER_TOL

def hyp_pfq(
        a: tp.Sequence[float],
        b: tp.Sequence[float],
        x,
        tol: float = DEFAULT_TOL,
        max_terms: int = DEFAULT_MAX_TERMS,
):
    """
    Sum ``pFq(a; b; x)`` term by term.

    ``x`` may be a scalar or a numpy array.  Summation stops when a term
    (scaled by the geometric tail bound when ``p == q + 1``) drops below
    ``tol`` relative to the partial sum, or when a numerator parameter is a
    nonpositive integer and the series terminates.

    :raises PoleError: a denominator parameter is a nonpositive integer that is
    reached before the series terminates.
    :raises NonConvergence: ``max_terms`` terms were not enough.
    """
    a = [float(v) for v in a]
    b = [float(v) for v in b]
    x = np.asarray(x, dtype=float)

    # bound on the remaining tail relative to the current term
    if len(a) == len(b) + 1:
        xmax = float(np.max(np.abs(x))) if x.size else 0.0
        if xmax >= 1 and not any(_nonpositive_integer(v) for v in a):
            raise NonConvergence(f'{len(a)}F{len(b)} series diverges at |x| = {xmax}')
        tail = 1.0 / (1.0 - xmax) if xmax < 1 else 1.0
    else:
        tail = 1.0

    term = np.ones_like(x)
    total = np.ones_like(x)
    peak = np.ones_like(x)
    for k in range(max_terms):
        if any(abs(v + k) < INTEGER_TOL for v in a):
            return total[()]
        for v in b:
            if abs(v + k) < INTEGER_TOL:
                raise PoleError(f'denominator parameter {v} is a nonpositive integer')

        ratio = 1.0
        for v in a:
            ratio *= v + k
        for v in b:
            ratio /= v + k
        term = term * (ratio / (k + 1)) * x
        total = total + term
        peak = np.maximum(peak, np.abs(term))

        size = np.abs(term) * tail
        if np.all((size <= tol * np.abs(total)) | (size <= tol * 1e-3 * peak)):
            return total[()]

    raise NonConvergence(f'{len(a)}F{len(b)} series did not converge in {max_terms} terms')

def hyp2f1_series(a, b, c, x, tol: float = DEFAULT_TOL, max_terms: int = DEFAULT_MAX_TERMS):
    """
    Gauss hypergeometric ``2F1(a, b; c; x)`` by direct summation.

    Requires ``|x| < 1`` unless ``a`` or ``b`` is a nonpositive integer.
    Accepts a numpy array for ``x``.

    >>> float(hyp2f1_series(-2, 3, 1, 0.5))
    -0.5
    """
    return hyp_pfq([a, b], [c], x, tol=tol, max_terms=max_terms)
