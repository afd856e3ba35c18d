import math

from numpy.testing import assert_allclose
import pytest

from lommel import pade, reference, roots
from lommel.ratpoly import RationalPoly

def test_simple_roots():
    rs = roots.all_roots(RationalPoly([1, 0, 1]))
    assert_allclose(rs.roots, [-1j, 1j], atol=1e-15)
    assert rs.poly_degree == 2

    rs = roots.all_roots(RationalPoly([3, 2]))
    assert_allclose(rs.roots, [-1.5], rtol=1e-15)
    assert rs.max_residual() == 0.0

def test_zero_root_is_deflated():
    c = RationalPoly([0, 840, 0, -80])
    rs = roots.all_roots(c)
    r = math.sqrt(10.5)
    assert_allclose([x.real for x in rs.roots], [-r, 0.0, r], rtol=1e-15, atol=1e-300)
    assert rs.max_abs_imag() == 0.0
    assert_allclose([float(x) for x in roots.positive_real_roots(rs)], [r], rtol=1e-15)

def test_root_arguments():
    with pytest.raises(ValueError):
        roots.all_roots(RationalPoly([5]))
    with pytest.raises(ValueError):
        roots.RootSet((1j,), (0.0,), 2)

@pytest.mark.parametrize('n', range(1, 7))
@pytest.mark.parametrize('build', [pade.triple_even_closed, pade.triple_odd_derivative])
def test_approximant_roots(build, n):
    t = build(n)
    a = roots.all_roots(t.A)
    # A has no real zeros, and its roots close under conjugation
    assert a.min_abs_imag() > roots.IMAG_TOL
    key = lambda r: (r.real, r.imag)
    assert_allclose(sorted((r.conjugate() for r in a.roots), key=key), sorted(a.roots, key=key), rtol=1e-14)
    for poly in (t.B, t.C):
        rs = roots.all_roots(poly)
        assert rs.max_abs_imag() < roots.IMAG_TOL
        assert rs.max_residual() < roots.RESIDUAL_BOUND
    assert a.max_residual() < roots.RESIDUAL_BOUND

def test_two_figure_agreement():
    assert roots.agrees_to_two_figures(3.144e-2, 3.14e-2)
    assert not roots.agrees_to_two_figures(3.2e-2, 3.14e-2)
    assert roots.agrees_to_two_figures(-1.72e-9, -1.7e-9)
    assert roots.agrees_to_two_figures(0.0, 0.0)

#---------------------------------------------------------------
# tables

def test_first_table_cells():
    t1 = roots.table1(2)
    assert_allclose(t1.cell(1, 1), (math.sqrt(10.5) - math.pi) / math.pi, rtol=1e-12)
    assert t1.cell(1, 2) is None
    assert_allclose(t1.cell(2, 1), (math.sqrt(30 - math.sqrt(405)) - math.pi) / math.pi, rtol=1e-9)
    assert_allclose(t1.cell(2, 2), (math.sqrt(30 + math.sqrt(405)) - 2 * math.pi) / (2 * math.pi), rtol=1e-9)
    assert t1.column(2) == [t1.cell(2, 2)]

    t2 = roots.table2(1)
    half_pi = math.pi / 2
    assert_allclose(t2.cell(1, 1), (math.sqrt(2.5) - half_pi) / half_pi, rtol=1e-12)

def test_table_polys():
    assert roots.table1_poly(1) == pade.triple_even_closed(2).C
    assert roots.table2_poly(1) == RationalPoly([120, 0, -48])

@pytest.mark.parametrize('kmax', [0, 9, 1.5])
def test_table_kmax(kmax):
    with pytest.raises(ValueError):
        roots.table1(kmax)
    with pytest.raises(ValueError):
        roots.table2(kmax)

def test_compare_flags_suspect_cells():
    table = roots.ZeroTable(2, 2, ((1.3e-2, None), (2.0e-3, 5.0e-2)))
    printed = {(1, 1): 1.0e-2, (2, 1): 2.0e-3, (2, 2): 7.0e-2}
    with pytest.warns(UserWarning, match=r'cell \(k=2, n=2\)'):
        mismatches = table.compare(printed, suspect={(2, 2)})
    assert [(m.k, m.n, m.suspect) for m in mismatches] == [(1, 1, False), (2, 2, True)]
    assert table.column_is_decreasing(1)

def test_column_is_decreasing():
    table = roots.ZeroTable(1, 3, ((3e-2, None, None), (3e-4, 1e-1, None), (7e-7, 2e-1, 3e-1)))
    assert table.column(2) == [1e-1, 2e-1]
    assert table.column_is_decreasing(1)
    assert not table.column_is_decreasing(2)
    # a single populated cell is trivially monotone
    assert table.column_is_decreasing(3)

def test_figure_data():
    data = roots.fig_data('even', 2)
    assert [n for (n, _) in data] == [1, 2]
    assert_allclose(data[0][1].roots, [-1j * math.sqrt(6), 1j * math.sqrt(6)], atol=1e-14)
    assert data[1][1].poly_degree == 4
    assert len(roots.fig_data('odd', 1)[0][1].roots) == 4

    with pytest.raises(ValueError):
        roots.fig_data('both', 2)
    with pytest.raises(ValueError):
        roots.fig_data('even', roots.FIG_MAX_N + 1)

@pytest.mark.slow
@pytest.mark.filterwarnings('ignore::UserWarning')
@pytest.mark.parametrize('which, build', [(1, roots.table1), (2, roots.table2)])
def test_printed_tables(which, build):
    table = build(reference.printed_rows(which))
    mismatches = table.compare(reference.printed_table(which), reference.suspect_cells(which))
    assert [m for m in mismatches if not m.suspect] == []
    for n in range(1, table.kmax + 1):
        assert table.column_is_decreasing(n), n

#---------------------------------------------------------------
# real zeros of Lommel functions

@pytest.mark.parametrize('nu', [0.1, 0.5, 0.9])
def test_zero_intervals(nu):
    assert roots.zero_interval_check(nu) == [0, 1, 1, 1, 1, 1]

def test_zero_interval_options():
    assert roots.zero_interval_check(0.3, kmax=3, method='series') == [0, 1, 1, 1]
    with pytest.raises(ValueError):
        roots.zero_interval_check(0.5, method='spline')

@pytest.mark.parametrize('theta', [math.pi / 2, 0.0])
def test_mixed_zeros(theta):
    assert roots.mixed_zero_check(0.25, 0.5, theta) == [1] * 5

def test_positivity():
    zs = [j * math.pi / 4 for j in range(1, 41)]
    assert roots.positivity_check(1.0, 0.5, zs)
    assert roots.positivity_check(2.0, 1.0, zs)
