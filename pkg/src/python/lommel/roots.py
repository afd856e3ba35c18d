###########################################################################
#  This file is part of lommel, and is licensed under EITHER the MIT license
#  or the Apache 2.0 license, at your option.
#
#      http://www.apache.org/licenses/LICENSE-2.0
#      http://opensource.org/licenses/MIT
###########################################################################

from dataclasses import dataclass, field
import math
import typing as tp
import warnings

from mpmath import mp
import numpy as np

from lommel.core import lommel_series, validate_params
from lommel.errors import NonConvergence
from lommel.internals import trace
from lommel.pade import triple_even_closed, triple_odd_derivative
from lommel.quadrature import count_sign_changes, lommel_quadrature, lommel_s0_quadrature, mixed_function
from lommel.ratpoly import RationalPoly

__doc__ = """
Polynomial roots, the tables of relative distances between polynomial zeros
and trigonometric zeros, and the sign-change checks on real zeros of Lommel
functions.

Roots are located in double precision by Aberth sweeps and then polished by
Newton steps in mpmath on the exact coefficients, so that the tabulated
relative distances (which go down to 1e-23) are meaningful.
"""

MAX_SWEEPS = 500
# relative size of an Aberth correction below which a root is accepted for polishing
SWEEP_TOL = 1e-10

# working precision of the polishing step
ROOT_DPS = 50
MAX_NEWTON_STEPS = 60

RESIDUAL_BOUND = 1e-10
# roots with |Im| below this count as real (after polishing it is far smaller)
IMAG_TOL = 1e-8

TABLE_MAX_K = 8
FIG_MAX_N = 12

# sample points per interval in the sign-change checks
SIGN_SAMPLES = 128

@dataclass(frozen=True)
class RootSet:
    """
    All complex roots of a polynomial, sorted by real part then imaginary part.

    ``residuals[i]`` is |p(r)| / (|lead| max(1, |r|)^degree), measured at the
    extended-precision root ``precise[i]``.
    """
    roots: tp.Tuple[complex, ...]
    residuals: tp.Tuple[float, ...]
    poly_degree: int
    precise: tp.Tuple[tp.Any, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if len(self.roots) != self.poly_degree:
            raise ValueError(f'{len(self.roots)} roots for a polynomial of degree {self.poly_degree}')
        if len(self.residuals) != self.poly_degree:
            raise ValueError('one residual per root is required')

    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def coordinates(self) -> tp.List[tp.Tuple[float, float]]:
        return [(r.real, r.imag) for r in self.roots]

    def max_abs_imag(self) -> float:
        return max((abs(r.imag) for r in self.roots), default=0.0)

    def min_abs_imag(self) -> float:
        return min((abs(r.imag) for r in self.roots), default=math.inf)

#---------------------------------------------------------------
# root finding

def _mp_coeffs(p: RationalPoly):
    # highest power first, as mp.polyval wants
    return [mp.mpf(c.numerator) / c.denominator for c in reversed(p.coeffs)]

def _initial_guesses(coeffs):
    # coeffs is monic, highest power first
    n = len(coeffs) - 1
    radius = 2 * max(abs(coeffs[k]) ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius, 1e-3)
    # offset keeps the starting circle off the real axis
    angles = 2 * np.pi * np.arange(n) / n + 0.4 / n
    return radius * np.exp(1j * angles)

def _aberth(coeffs: np.ndarray) -> np.ndarray:
    n = coeffs.size - 1
    deriv = coeffs[:-1] * np.arange(n, 0, -1)
    x = _initial_guesses(coeffs)
    for sweep in range(MAX_SWEEPS):
        pv = np.polyval(coeffs, x)
        dpv = np.polyval(deriv, x)
        diff = x[:, None] - x[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = (1.0 / diff).sum(axis=1) - 1.0
        ratio = pv / dpv
        delta = ratio / (1.0 - ratio * repulsion)
        delta[~np.isfinite(delta)] = 0.0
        x = x - delta
        if np.all(np.abs(delta) <= SWEEP_TOL * np.maximum(1.0, np.abs(x))):
            trace(f'aberth: degree {n} converged after {sweep + 1} sweeps')
            return x
    raise NonConvergence(f'Aberth iteration did not converge in {MAX_SWEEPS} sweeps (degree {n})')

def _polish(mp_coeffs, x0):
    x = mp.mpc(x0)
    scale_tol = mp.mpf(10) ** (-(mp.dps - 8))
    for _ in range(MAX_NEWTON_STEPS):
        value, slope = mp.polyval(mp_coeffs, x, derivative=True)
        if slope == 0:
            break
        step = value / slope
        x -= step
        if abs(step) <= scale_tol * max(1, abs(x)):
            return x
    raise NonConvergence(f'Newton polishing stalled near {complex(x0)}')

def _pair_conjugates(roots):
    # real-coefficient input: real roots lose their rounding-level imaginary
    # part and complex ones come in exact conjugate pairs
    real_tol = mp.mpf(10) ** (-(mp.dps // 2))
    reals, upper, lower = [], [], []
    for r in roots:
        if abs(r.imag) <= real_tol * max(1, abs(r)):
            reals.append(mp.mpc(r.real, 0))
        elif r.imag > 0:
            upper.append(r)
        else:
            lower.append(r)
    if len(upper) != len(lower):
        raise NonConvergence('complex roots of a real polynomial did not pair up')
    return reals + upper + [mp.conj(u) for u in upper]

def all_roots(p: RationalPoly, dps: int = ROOT_DPS) -> RootSet:
    """
    Every complex root of ``p`` (with multiplicity for the zero root).

    :raises NonConvergence: the Aberth sweeps or the polishing fail.
    """
    if p.degree < 1:
        raise ValueError(f'root finding needs degree >= 1, got {p.degree}')

    zeros = next(k for (k, c) in enumerate(p.coeffs) if c != 0)
    reduced = RationalPoly(p.coeffs[zeros:])

    with mp.workdps(dps):
        found = [mp.mpc(0)] * zeros
        if reduced.degree == 1:
            r = -reduced[0] / reduced[1]
            found.append(mp.mpc(mp.mpf(r.numerator) / r.denominator))
        elif reduced.degree > 1:
            mp_coeffs = _mp_coeffs(reduced)
            lead = reduced.leading
            monic = np.array([float(c / lead) for c in reversed(reduced.coeffs)])
            approx = _aberth(monic)
            found += _pair_conjugates([_polish(mp_coeffs, x) for x in approx])

        found.sort(key=lambda r: (r.real, r.imag))
        full = _mp_coeffs(p)
        lead = abs(full[0])
        residuals = []
        for r in found:
            scale = lead * max(mp.mpf(1), abs(r)) ** p.degree
            residuals.append(float(abs(mp.polyval(full, r)) / scale))

        roots = tuple(complex(r) for r in found)
        precise = tuple(found)

    return RootSet(roots, tuple(residuals), p.degree, precise)

def positive_real_roots(rs: RootSet, imag_tol: float = IMAG_TOL) -> tp.List[tp.Any]:
    """ The real roots with positive real part, ascending, at full precision. """
    out = [r.real for r in rs.precise if abs(r.imag) < imag_tol and r.real > 0]
    return sorted(out)

#---------------------------------------------------------------
# tables

@dataclass(frozen=True)
class CellMismatch:
    k: int
    n: int
    computed: tp.Optional[float]
    printed: tp.Optional[float]
    suspect: bool = False

@dataclass(frozen=True)
class ZeroTable:
    """
    ``cells[k-1][n-1]`` is the relative distance between the n-th positive
    zero of the row-k polynomial and the n-th trigonometric zero, or ``None``
    where the polynomial has fewer positive zeros.
    """
    which: int
    kmax: int
    cells: tp.Tuple[tp.Tuple[tp.Optional[float], ...], ...]

    def cell(self, k: int, n: int) -> tp.Optional[float]:
        return self.cells[k - 1][n - 1]

    def column(self, n: int) -> tp.List[float]:
        return [row[n - 1] for row in self.cells if row[n - 1] is not None]

    def column_is_decreasing(self, n: int) -> bool:
        col = self.column(n)
        return all(b < a for (a, b) in zip(col, col[1:]))

    def compare(
            self,
            printed: tp.Mapping[tp.Tuple[int, int], float],
            suspect: tp.Iterable[tp.Tuple[int, int]] = (),
    ) -> tp.List[CellMismatch]:
        """
        Cells that differ from ``printed`` at two significant figures.

        Mismatches in ``suspect`` cells are reported with ``warnings.warn``
        as well as returned; other mismatches are only returned.
        """
        suspect = set(suspect)
        out = []
        for k in range(1, self.kmax + 1):
            for n in range(1, self.kmax + 1):
                computed = self.cell(k, n)
                expected = printed.get((k, n))
                if computed is None and expected is None:
                    continue
                if computed is not None and expected is not None and agrees_to_two_figures(computed, expected):
                    continue
                mismatch = CellMismatch(k, n, computed, expected, suspect=(k, n) in suspect)
                if mismatch.suspect:
                    warnings.warn(
                        f'table {self.which} cell (k={k}, n={n}): printed {expected}, computed {computed}'
                    )
                out.append(mismatch)
        return out

def agrees_to_two_figures(computed: float, printed: float) -> bool:
    """ |computed - printed| is at most half a unit in the second significant digit of ``printed``. """
    if printed == 0:
        return computed == 0
    unit = 10.0 ** (math.floor(math.log10(abs(printed))) - 1)
    return abs(computed - printed) <= 0.5 * unit

def _check_kmax(kmax, limit=TABLE_MAX_K):
    if int(kmax) != kmax or not 1 <= kmax <= limit:
        raise ValueError(f'kmax must be an integer in 1..{limit}, not {kmax!r}')
    return int(kmax)

def _relative_distances(poly: RationalPoly, reference: tp.Callable[[int], tp.Any], count: int):
    with mp.workdps(ROOT_DPS):
        positive = positive_real_roots(all_roots(poly))
        row = []
        for n in range(1, count + 1):
            if n > len(positive):
                row.append(None)
                continue
            ref = reference(n)
            row.append(float((positive[n - 1] - ref) / ref))
    return tuple(row)

def table1_poly(k: int) -> RationalPoly:
    """ Row k of the sine table is C_{0,2(k+1)}; C_{0,2} = 6z has no positive zero. """
    return triple_even_closed(k + 1).C

def table2_poly(k: int) -> RationalPoly:
    """ Row k of the cosine table is B_{1,2k+1}. """
    return triple_odd_derivative(k).B

def table1(kmax: int) -> ZeroTable:
    """ (z_k^n - n pi) / (n pi) for the positive zeros of C_{0,2(k+1)}. """
    kmax = _check_kmax(kmax)
    rows = []
    for k in range(1, kmax + 1):
        trace(f'table 1: row {k}')
        rows.append(_relative_distances(table1_poly(k), lambda n: n * mp.pi, kmax))
    return ZeroTable(1, kmax, tuple(rows))

def table2(kmax: int) -> ZeroTable:
    """ (z_k^n - (n - 1/2) pi) / ((n - 1/2) pi) for the positive zeros of B_{1,2k+1}. """
    kmax = _check_kmax(kmax)
    rows = []
    for k in range(1, kmax + 1):
        trace(f'table 2: row {k}')
        rows.append(_relative_distances(table2_poly(k), lambda n: (n - mp.mpf(1) / 2) * mp.pi, kmax))
    return ZeroTable(2, kmax, tuple(rows))

def fig_data(family: str, nmax: int) -> tp.List[tp.Tuple[int, RootSet]]:
    """ Roots of A_{0,2n} (``even``) or A_{1,2n+1} (``odd``) for n = 1..nmax. """
    nmax = _check_kmax(nmax, FIG_MAX_N)
    if family == 'even':
        build = triple_even_closed
    elif family == 'odd':
        build = triple_odd_derivative
    else:
        raise ValueError(f'family must be even or odd, not {family!r}')
    return [(n, all_roots(build(n).A)) for n in range(1, nmax + 1)]

#---------------------------------------------------------------
# real zeros of Lommel functions

def zero_interval_check(nu: float, kmax: int = 5, samples: int = SIGN_SAMPLES, method: str = 'quadrature') -> tp.List[int]:
    """
    Sign changes of s_{0,nu} inside (k pi, (k+1) pi) for k = 0..kmax, with
    s_{0,nu} from its angular integral (``quadrature``) or its ``series``.

    The zero belonging to k = 0 is z = 0 itself, so the expected counts are
    ``[0, 1, 1, ...]``.
    """
    p = validate_params(0.0, nu)
    if method == 'quadrature':
        f = lambda z: lommel_s0_quadrature(p.nu, z).value
    elif method == 'series':
        f = lambda z: lommel_series(p, z).value
    else:
        raise ValueError(f'unknown method {method!r}')
    return [count_sign_changes(f, k * math.pi, (k + 1) * math.pi, samples) for k in range(kmax + 1)]

def mixed_zero_check(mu: float, nu: float, theta: float, kmax: int = 5, samples: int = SIGN_SAMPLES) -> tp.List[int]:
    """
    Sign changes of the mixed function inside ((k - 1/2) pi + theta, (k + 1/2) pi + theta)
    for k = 1..kmax.
    """
    f = lambda z: mixed_function(mu, nu, theta, z)
    out = []
    for k in range(1, kmax + 1):
        a = (k - 0.5) * math.pi + theta
        out.append(count_sign_changes(f, a, a + math.pi, samples))
    return out

def positivity_check(mu: float, nu: float, zs: tp.Iterable[float]) -> bool:
    """ s_{mu,nu}(z) > 0 at every z in ``zs``, through the sine quadrature. """
    return all(lommel_quadrature(mu, nu, z).value > 0 for z in zs)
