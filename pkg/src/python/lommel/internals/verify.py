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
import typing as tp

import numpy as np

from lommel import core, hyp_trig, pade, quadrature, reference, roots
from lommel.errors import ReconciliationError
from lommel.hypergeometric import hyp2f1_series
from lommel.internals import info
from lommel.ratpoly import RationalPoly, pade_order_check, trig_series

__doc__ = """
The invariant suite run by ``lommel verify``.

Each check is a function returning ``(passed, detail)`` and is registered
under a short name with ``@check``; ``run_checks`` runs all of them (or a
named subset) in registration order.
"""

FAMILY_NMAX = 10
THREE_PATH_POINTS = 20
THREE_PATH_ZS = (0.5, 1.0, 2.0, 5.0, 10.0)
THREE_PATH_TOL = 1e-8
HALF_INTEGER_TOL = 1e-9
HYP2F1_TOL = 1e-11
ODE_TOL = 1e-9
GENERAL_MAX_M = 8
GENERAL_MAX_N = 6
ODD_PYTHAGOREAN_NMAX = 6
KERNEL_RECURRENCE_TOL = 1e-5
POLYNOMIAL_KERNEL_TOL = 1e-9
CONJUGATE_TOL = 1e-10
RANDOM_POLYS = 20
RANDOM_POLY_DEGREE = 12

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def summary_line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"

CheckFn = tp.Callable[[np.random.Generator], tp.Tuple[bool, str]]
CHECKS: tp.Dict[str, CheckFn] = {}

def check(name: str):
    def register(func: CheckFn) -> CheckFn:
        if name in CHECKS:
            raise ValueError(f'check {name!r} registered twice')
        CHECKS[name] = func
        return func
    return register

def run_checks(only: tp.Optional[tp.Iterable[str]] = None, seed: int = 0) -> tp.List[CheckResult]:
    names = list(CHECKS) if not only else list(only)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(f'unknown checks {unknown}; available: {sorted(CHECKS)}')

    out = []
    for name in names:
        info(f'verify: {name}')
        passed, detail = CHECKS[name](np.random.default_rng(seed))
        out.append(CheckResult(name, bool(passed), detail))
    return out

def _rel(a, b):
    return abs(a - b) / max(1.0, abs(b))

#---------------------------------------------------------------
# approximants

@check('pade-orders')
def _pade_orders(_rng):
    failures = []
    for n in range(FAMILY_NMAX + 1):
        for label, t, order in [
            ('even', pade.triple_even_closed(n), 2 * n + 2),
            ('odd', pade.triple_odd_derivative(n), 2 * n + 4),
        ]:
            ok, power = pade_order_check(t, order)
            if not ok:
                failures.append(f'{label} n={n} fails at z^{power}')
    return not failures, '; '.join(failures) or f'both families, n = 0..{FAMILY_NMAX}'

@check('displayed-triples')
def _displayed_triples(_rng):
    failures = []
    for family, build in [('even', pade.triple_even_closed), ('odd', pade.triple_odd_derivative)]:
        for n in reference.displayed_indices(family):
            if reference.displayed_triple(family, n).primitive() != build(n):
                failures.append(f'{family} n={n}')
    return not failures, '; '.join(failures) or 'all displayed triples reproduced'

@check('dual-paths')
def _dual_paths(_rng):
    failures = []
    for n in range(FAMILY_NMAX + 1):
        if pade.triple_even_closed(n) != pade.triple_even_derivative(n):
            failures.append(f'even n={n}')
        try:
            pade.triple_odd_closed(n)
        except ReconciliationError as e:
            failures.append(str(e))
    return not failures, '; '.join(failures) or f'closed and derivative routes agree for n = 0..{FAMILY_NMAX}'

@check('half-integer')
def _half_integer(_rng):
    worst = 0.0
    for m, n in [(0, 2), (0, 4), (1, 1), (1, 3)]:
        t = pade.triple_general(m, n, normalization=pade.RAW)
        p = core.validate_params(m + 0.5, n + 0.5)
        for z in (0.5, 1.0, 2.0, 5.0):
            series = core.lommel_series(p, z).value
            worst = max(worst, abs(pade.half_integer_lommel(t, z) - series) / abs(series))
    return worst < HALF_INTEGER_TOL, f'worst relative difference {worst:.2e}'

def _general_indices():
    for m in range(GENERAL_MAX_M + 1):
        for n in range(GENERAL_MAX_N + 1):
            if not pade.is_excluded_index(m, n) and not pade.is_excluded_index(m % 2, n):
                yield m, n

@check('general-orders')
def _general_orders(_rng):
    failures = []
    count = 0
    for m, n in _general_indices():
        ok, power = pade_order_check(pade.triple_general(m, n), m + n + 2)
        count += 1
        if not ok:
            failures.append(f'({m},{n}) fails at z^{power}')
    return not failures, '; '.join(failures) or f'{count} index pairs with m <= {GENERAL_MAX_M}, n <= {GENERAL_MAX_N}'

@check('sine-order')
def _sine_order(_rng):
    # C/A follows sin z one power further than B/A follows cos z
    failures = []
    for n in range(1, FAMILY_NMAX + 1):
        t = pade.triple_even_closed(n)
        excess = (t.C - trig_series('sin', 2 * n + 2) * t.A).truncate(2 * n + 2)
        if not excess.is_zero():
            failures.append(f'n={n} at z^{min(k for k, c in enumerate(excess.coeffs) if c != 0)}')
    return not failures, '; '.join(failures) or f'even family, n = 1..{FAMILY_NMAX}'

@check('pythagorean')
def _pythagorean(_rng):
    failures = [f'even n={n}' for n in range(FAMILY_NMAX + 1) if not pade.pythagorean_check(pade.triple_even_closed(n))]
    failures += [f'odd n={n}' for n in range(ODD_PYTHAGOREAN_NMAX + 1) if not pade.pythagorean_check(pade.triple_odd_derivative(n))]
    return not failures, '; '.join(failures) or 'B^2 + C^2 - A^2 vanishes below z^(m+n+2)'

@check('scaling-relations')
def _scaling_relations(_rng):
    failures = []
    for m in (1, 2, 3):
        for n in (0, 1, 2):
            for family, shift in [('even', 0), ('odd', 1)]:
                base = pade.triple_general(shift, 2 * n + shift, normalization=pade.RAW)
                t = pade.triple_general(2 * m + shift, 2 * n + shift, normalization=pade.RAW)
                factor = pade.scaling_factor(m, n, family=family)
                if t.B != base.B * factor or t.C != base.C * factor:
                    failures.append(f'{family} B, C at m={m}, n={n}')
    for m, n in [(2, 0), (4, 0), (6, 0), (2, 2), (4, 2), (3, 1), (5, 1), (5, 3)]:
        if pade.scaled_a(m, n) != pade.triple_general(m, n, normalization=pade.RAW).A:
            failures.append(f'A_{{{m},{n}}}')
    return not failures, '; '.join(failures) or 'B, C factors and the inhomogeneous A sums hold exactly'

#---------------------------------------------------------------
# exact polynomial arithmetic

@check('ratpoly-invariants')
def _ratpoly_invariants(rng):
    def random_fraction():
        return Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 20)))

    def random_poly():
        return RationalPoly(random_fraction() for _ in range(int(rng.integers(0, RANDOM_POLY_DEGREE + 1)) + 1))

    failures = []
    for _ in range(RANDOM_POLYS):
        p, q = random_poly(), random_poly()
        a, b = random_fraction(), random_fraction()
        if (p * a + q * b).derivative() != p.derivative() * a + q.derivative() * b:
            failures.append('derivative is not linear')
            break

    for order in range(1, 2 * RANDOM_POLY_DEGREE):
        if trig_series('sin', order).derivative() != trig_series('cos', order - 1):
            failures.append(f'd/dz sin series differs from cos series at order {order}')

    for n in range(FAMILY_NMAX + 1):
        t = pade.triple_even_closed(n)
        factor = random_fraction() or Fraction(1)
        for order in (2 * n + 2, 2 * n + 3):
            if pade_order_check(t.rescaled(factor), order) != pade_order_check(t, order):
                failures.append(f'order check depends on scale for even n={n}')
    return not failures, '; '.join(failures) or 'linearity, series derivative and scale invariance hold'

#---------------------------------------------------------------
# numerics

@check('three-paths')
def _three_paths(rng):
    worst = 0.0
    for _ in range(THREE_PATH_POINTS):
        mu, nu = rng.uniform(0.6, 3.0), rng.uniform(0.0, 1.0)
        p = core.validate_params(mu, nu)
        for z in THREE_PATH_ZS:
            series = core.lommel_series(p, z).value
            sine = quadrature.lommel_quadrature(mu, nu, z).value
            cosine = quadrature.lommel_cos_quadrature(mu, nu, z).value
            worst = max(worst, _rel(sine, series), _rel(cosine, series), _rel(sine, cosine))
    return worst < THREE_PATH_TOL, f'worst scaled difference {worst:.2e} over {THREE_PATH_POINTS} random (mu, nu)'

@check('residuals')
def _residuals(rng):
    worst_ode = worst_recurrence = 0.0
    for _ in range(THREE_PATH_POINTS):
        mu, nu = rng.uniform(0.0, 3.0), rng.uniform(0.0, 1.0)
        p = core.validate_params(mu, nu)
        for z in (0.5, 1.0, 2.0, 5.0):
            scale = max(1.0, z ** (mu + 1))
            worst_ode = max(worst_ode, core.lommel_ode_residual(p, z) / scale)
            lower = core.lommel_series(p, z).value
            upper = core.lommel_series(core.validate_params(mu + 2, nu), z).value
            worst_recurrence = max(worst_recurrence, abs(upper - core.recurrence_step(p, z, lower)))

    worst_angular = 0.0
    for n in range(1, 6):
        for nu in (0.25, 0.5, 0.75):
            for theta in np.linspace(0.1, 1.4, 10):
                worst_angular = max(worst_angular, hyp_trig.ode_residual(n, nu, float(theta)))

    passed = worst_ode < 1e-8 and worst_recurrence < ODE_TOL and worst_angular < ODE_TOL
    return passed, (
        f'Bessel equation {worst_ode:.2e}, recurrence {worst_recurrence:.2e}, '
        f'angular equation {worst_angular:.2e}'
    )

@check('hyp2f1-identity')
def _hyp2f1_identity(_rng):
    worst = 0.0
    for n in range(1, 7):
        for nu in (0.13, 0.37, 0.61, 0.89):
            for theta in (0.2, 0.7, 1.3, 2.1, 2.9):
                closed = hyp_trig.hyp2f1_trig(n, nu, theta)
                series = float(hyp2f1_series(0.5 + nu, 0.5 - nu, n + 0.5, math.sin(theta / 2) ** 2))
                worst = max(worst, _rel(closed, series))
    return worst < HYP2F1_TOL, f'worst scaled difference {worst:.2e} over 120 points'

@check('hyp2f1-parity')
def _hyp2f1_parity(_rng):
    worst = 0.0
    for n in range(1, 7):
        for nu in (0.13, 0.37, 0.61, 0.89):
            for theta in (0.4, 1.7, -2.2):
                worst = max(worst, _rel(hyp_trig.hyp2f1_trig(n, -nu, theta), hyp_trig.hyp2f1_trig(n, nu, theta)))
    return worst < HYP2F1_TOL, f'worst scaled difference under nu -> -nu {worst:.2e}'

@check('coefficient-recursion')
def _coefficient_recursion(_rng):
    failures = []
    for n in range(1, FAMILY_NMAX + 1):
        for nu in (Fraction(1, 3), Fraction(3, 10), Fraction(7, 9)):
            if any(r != 0 for r in hyp_trig.coefficient_recursion_residuals(n, nu)):
                failures.append(f'n={n}, nu={nu}')
    return not failures, '; '.join(failures) or f'exact for n = 1..{FAMILY_NMAX}'

@check('kernel-recurrence')
def _kernel_recurrence(_rng):
    worst = 0.0
    for mu, nu in [(1.5, 0.3), (2.0, 0.7), (2.5, 0.45)]:
        for t in (0.2, 0.5, 0.8):
            worst = max(worst, quadrature.kernel_recurrence_residual(mu, nu, t))
    return worst < KERNEL_RECURRENCE_TOL, f'worst residual {worst:.2e} (central differences)'

@check('polynomial-kernel-path')
def _polynomial_kernel_path(_rng):
    worst = 0.0
    for mu, n in [(1.25, 1), (0.3, 2), (1.75, 2), (2.2, 3)]:
        p = core.validate_params(mu, n + 0.5)
        for z in (0.5, 1.0, 2.0, 5.0):
            series = core.lommel_series(p, z).value
            worst = max(worst, _rel(quadrature.polynomial_kernel_quadrature(mu, n, z).value, series))
    return worst < POLYNOMIAL_KERNEL_TOL, f'worst scaled difference {worst:.2e}'

@check('zero-intervals')
def _zero_intervals(_rng):
    failures = []
    for nu in (0.1, 0.5, 0.9):
        counts = roots.zero_interval_check(nu)
        if counts != [0, 1, 1, 1, 1, 1]:
            failures.append(f'nu={nu}: {counts}')
    for theta, label in [(math.pi / 2, 'theta=pi/2'), (0.0, 'theta=0')]:
        counts = roots.mixed_zero_check(0.25, 0.5, theta)
        if counts != [1] * len(counts):
            failures.append(f'mixed {label}: {counts}')
    return not failures, '; '.join(failures) or 'one zero per interval'

@check('positivity')
def _positivity(_rng):
    zs = [j * math.pi / 4 for j in range(1, 41)]
    bad = [mu for mu in (1.0, 2.0) if not roots.positivity_check(mu, mu / 2, zs)]
    return not bad, f'negative values for mu in {bad}' if bad else 's_{mu,mu/2} > 0 on the grid'

#---------------------------------------------------------------
# roots and tables

@check('root-soundness')
def _root_soundness(_rng):
    failures = []
    for n in range(1, FAMILY_NMAX + 1):
        for label, t in [('even', pade.triple_even_closed(n)), ('odd', pade.triple_odd_derivative(n))]:
            a = roots.all_roots(t.A)
            if a.min_abs_imag() <= roots.IMAG_TOL:
                failures.append(f'{label} A n={n} has a real root')
            for name, poly in [('B', t.B), ('C', t.C)]:
                if poly.degree < 1:
                    continue
                rs = roots.all_roots(poly)
                if rs.max_abs_imag() >= roots.IMAG_TOL:
                    failures.append(f'{label} {name} n={n} has a complex root')
                if rs.max_residual() >= roots.RESIDUAL_BOUND:
                    failures.append(f'{label} {name} n={n} residual {rs.max_residual():.1e}')
            if a.max_residual() >= roots.RESIDUAL_BOUND:
                failures.append(f'{label} A n={n} residual {a.max_residual():.1e}')
    return not failures, '; '.join(failures) or f'n = 1..{FAMILY_NMAX}'

@check('root-conjugates')
def _root_conjugates(_rng):
    key = lambda r: (r.real, r.imag)
    failures = []
    for n in range(1, FAMILY_NMAX + 1):
        for label, t in [('even', pade.triple_even_closed(n)), ('odd', pade.triple_odd_derivative(n))]:
            for name, poly in zip('ABC', t.polys()):
                if poly.degree < 1:
                    continue
                rs = roots.all_roots(poly).roots
                mirrored = sorted((r.conjugate() for r in rs), key=key)
                if any(abs(a - b) > CONJUGATE_TOL * max(1.0, abs(a)) for a, b in zip(sorted(rs, key=key), mirrored)):
                    failures.append(f'{label} {name} n={n}')
    return not failures, '; '.join(failures) or 'every root set is closed under conjugation'

def _table_check(which, build):
    kmax = reference.printed_rows(which)
    table = build(kmax)
    mismatches = table.compare(reference.printed_table(which), reference.suspect_cells(which))
    hard = [m for m in mismatches if not m.suspect]
    flagged = [m for m in mismatches if m.suspect]
    rising = [n for n in range(1, kmax + 1) if not table.column_is_decreasing(n)]
    detail = f'{len(hard)} mismatched cells'
    if rising:
        detail += f', columns {rising} not decreasing in k'
    if flagged:
        detail += ', suspect cells recomputed as ' + ', '.join(
            f'({m.k},{m.n})={_format_cell(m.computed)}' for m in flagged
        )
    return not hard and not rising, detail

def _format_cell(value):
    return 'blank' if value is None else f'{value:.3e}'

@check('table1')
def _table1(_rng):
    return _table_check(1, roots.table1)

@check('table2')
def _table2(_rng):
    return _table_check(2, roots.table2)
