import functools
from pathlib import Path
import typing as tp

from lommel.io import dwim, triple as triple_io
from lommel.pade import ApproximantTriple, even_family_indices, odd_family_indices

__doc__ = """
Access to the published reference values shipped in ``resources/``.
"""

RESOURCE_PATH = Path(__file__).parent / 'resources' / 'reference.yaml'

@functools.lru_cache(maxsize=None)
def load(path=RESOURCE_PATH):
    return dwim.from_path(path)

def printed_table(which: int) -> tp.Dict[tp.Tuple[int, int], float]:
    """ Printed cells keyed by ``(k, n)``. """
    rows = _table(which)['rows']
    return {(k, n): float(v) for (k, row) in enumerate(rows, start=1) for (n, v) in enumerate(row, start=1)}

def suspect_cells(which: int) -> tp.FrozenSet[tp.Tuple[int, int]]:
    return frozenset((int(k), int(n)) for (k, n) in _table(which).get('suspect') or ())

def printed_rows(which: int) -> int:
    return len(_table(which)['rows'])

def _table(which):
    key = {1: 'table1', 2: 'table2'}.get(which)
    if key is None:
        raise ValueError(f'no table {which!r}; expected 1 or 2')
    return load()[key]

def displayed_triple(family: str, n: int) -> ApproximantTriple:
    """ A displayed approximant at its printed scale (``display`` normalization). """
    if family == 'even':
        m, nn = even_family_indices(n)
    elif family == 'odd':
        m, nn = odd_family_indices(n)
    else:
        raise ValueError(f'family must be even or odd, not {family!r}')

    for entry in load()['triples'][family]:
        if int(entry['n']) == n:
            return triple_io.from_cereal({
                'm': m, 'n': nn,
                'A': entry['A'], 'B': entry['B'], 'C': entry['C'],
                'normalization': 'display',
            })
    raise KeyError(f'no displayed {family} triple for n = {n}')

def displayed_indices(family: str) -> tp.List[int]:
    return [int(entry['n']) for entry in load()['triples'][family]]
