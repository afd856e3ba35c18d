import json

import pytest

from lommel import pade, roots
from lommel.io import dwim, tables as tables_io, triple as triple_io
from lommel.ratpoly import RationalPoly

@pytest.mark.parametrize('ext', ['.json', '.yaml', '.json.gz', '.yaml.xz'])
def test_triple_round_trip(tmp_path, ext):
    t = pade.triple_general(2, 2, normalization=pade.RAW)
    path = tmp_path / ('triple' + ext)
    triple_io.to_path(path, t)
    assert triple_io.from_path(path) == t

def test_triple_keeps_fractions(tmp_path):
    t = pade.ApproximantTriple(1, 1, RationalPoly(['1/3', 0, 2]), RationalPoly([-5]), RationalPoly(['0', '7/2']))
    path = tmp_path / 'frac.json'
    triple_io.to_path(path, t)
    assert json.loads(path.read_text())['A'] == ['1/3', '0', '2']
    assert triple_io.from_path(path) == t

def test_triple_cereal_errors():
    good = triple_io.to_cereal(pade.triple_even_closed(1))
    assert good['normalization'] == pade.PRIMITIVE
    assert triple_io.from_cereal(dict(good)) == pade.triple_even_closed(1)

    missing = dict(good)
    del missing['C']
    with pytest.raises(ValueError, match='missing'):
        triple_io.from_cereal(missing)

    with pytest.raises(ValueError):
        triple_io.from_cereal(dict(good, normalization='monic'))

    no_norm = dict(good)
    del no_norm['normalization']
    assert triple_io.from_cereal(no_norm).normalization == pade.DISPLAY

#---------------------------------------------------------------
# tables

def _small_table():
    return roots.ZeroTable(2, 2, ((6.5843e-3, None), (7.36e-6, 7.23e-2)))

def test_table_csv_text():
    text = tables_io.table_to_csv(_small_table())
    assert text == 'k,1,2\n1,6.58430e-03,\n2,7.36000e-06,7.23000e-02\n'
    assert tables_io.table_from_csv(text, 2) == _small_table()

    with pytest.raises(ValueError):
        tables_io.table_from_csv('n,1\n1,2.0\n', 2)

@pytest.mark.parametrize('ext', ['.csv', '.json', '.yaml.gz'])
def test_table_path_round_trip(tmp_path, ext):
    path = tmp_path / ('table' + ext)
    tables_io.table_to_path(path, _small_table())
    assert tables_io.table_from_path(path, 2) == _small_table()

def test_root_csv():
    rs = roots.all_roots(RationalPoly([6, 0, 1]))
    lines = tables_io.roots_to_csv(rs).splitlines()
    assert lines[0] == 're,im'
    assert len(lines) == 3
    assert lines[1].split(',')[1] == '-2.449489742783e+00'

    cereal = tables_io.roots_to_cereal(rs)
    assert cereal['degree'] == 2
    assert len(cereal['residuals']) == 2

def test_figdata_csv():
    data = roots.fig_data('even', 2)
    lines = tables_io.figdata_to_csv(data).splitlines()
    assert lines[0] == 'n,re,im'
    assert [line.split(',')[0] for line in lines[1:]] == ['1'] * 2 + ['2'] * 4
    assert [entry['n'] for entry in tables_io.figdata_to_cereal(data)] == [1, 2]

#---------------------------------------------------------------
# dwim

def test_plain_data(tmp_path):
    obj = {'a': [1, 2, 3], 'b': 'text'}
    for name in ['x.json', 'x.yaml', 'x.json.xz']:
        dwim.to_path(tmp_path / name, obj)
        assert dict(dwim.from_path(tmp_path / name)) == obj

def test_unknown_extension(tmp_path):
    with pytest.raises(ValueError):
        dwim.to_path(tmp_path / 'x.toml', {})

    (tmp_path / 'x.txt').write_text('hello')
    with pytest.raises(ValueError):
        dwim.from_path(tmp_path / 'x.txt')
