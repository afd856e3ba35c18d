import csv
import io
import typing as tp

from lommel.roots import RootSet, ZeroTable
from . import dwim

__doc__ = """
CSV and plain-data forms of zero tables and root coordinates.

Table CSV has a header ``k,1,2,...`` and one row per k with empty cells
where the polynomial has too few positive zeros.  Root coordinates are
written as ``n,re,im`` (figure data) or ``re,im`` (a single root set).
"""

# six significant digits
CELL_FORMAT = '{:.5e}'
COORD_FORMAT = '{:.12e}'

def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerows(rows)
    return buf.getvalue()

def format_cell(value: tp.Optional[float]) -> str:
    return '' if value is None else CELL_FORMAT.format(value)

def table_to_csv(table: ZeroTable) -> str:
    header = ['k'] + [str(n) for n in range(1, table.kmax + 1)]
    rows = [[str(k)] + [format_cell(v) for v in row] for (k, row) in enumerate(table.cells, start=1)]
    return _csv_text([header] + rows)

def table_from_csv(text: str, which: int) -> ZeroTable:
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    if header[0] != 'k':
        raise ValueError(f'expected a "k" header column, got {header[0]!r}')
    cells = tuple(tuple(float(v) if v else None for v in row[1:]) for row in body)
    return ZeroTable(which, len(header) - 1, cells)

def table_to_cereal(table: ZeroTable, **_kw):
    return {'which': table.which, 'kmax': table.kmax, 'cells': [list(row) for row in table.cells]}

def table_from_cereal(cereal, **_kw) -> ZeroTable:
    cells = tuple(tuple(None if v is None else float(v) for v in row) for row in cereal['cells'])
    return ZeroTable(int(cereal['which']), int(cereal['kmax']), cells)

def table_to_path(path, table: ZeroTable):
    return dwim.to_path_impl(
        path, table,
        to_dict=table_to_cereal,
        to_ext={'.csv': lambda file, obj, **_kw: dwim.write_text(file, table_to_csv(obj))},
    )

def table_from_path(path, which: int) -> ZeroTable:
    return dwim.from_path_impl(
        path,
        from_dict=table_from_cereal,
        from_ext={'.csv': lambda file, **_kw: table_from_csv(dwim.read_text(file), which)},
    )

#---------------------------------------------------------------

def roots_to_csv(rs: RootSet) -> str:
    rows = [['re', 'im']]
    rows += [[COORD_FORMAT.format(re), COORD_FORMAT.format(im)] for (re, im) in rs.coordinates()]
    return _csv_text(rows)

def figdata_to_csv(data: tp.Sequence[tp.Tuple[int, RootSet]]) -> str:
    rows = [['n', 're', 'im']]
    for n, rs in data:
        rows += [[str(n), COORD_FORMAT.format(re), COORD_FORMAT.format(im)] for (re, im) in rs.coordinates()]
    return _csv_text(rows)

def roots_to_cereal(rs: RootSet, **_kw):
    return {
        'degree': rs.poly_degree,
        'roots': [[re, im] for (re, im) in rs.coordinates()],
        'residuals': list(rs.residuals),
    }

def figdata_to_cereal(data, **_kw):
    return [dict(n=n, **roots_to_cereal(rs)) for (n, rs) in data]
