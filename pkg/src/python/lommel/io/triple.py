from lommel import ratpoly
from lommel.pade import ApproximantTriple, NORMALIZATIONS
from . import dwim

def to_path(path, triple: ApproximantTriple):
    """
    :param path: filepath; ``.json`` or ``.yaml``, optionally compressed.
    :param triple: an ``ApproximantTriple``.
    """
    return dwim.to_path_impl(path, triple, to_dict=to_cereal)

def from_path(path) -> ApproximantTriple:
    return dwim.from_path_impl(path, from_dict=from_cereal)

# Coefficients are strings ("num/den" or bare integers), lowest power first,
# so that a parse gives back the exact triple.
def to_cereal(triple: ApproximantTriple, **_kw):
    return {
        'm': triple.m,
        'n': triple.n,
        'A': ratpoly.to_cereal(triple.A),
        'B': ratpoly.to_cereal(triple.B),
        'C': ratpoly.to_cereal(triple.C),
        'normalization': triple.normalization,
    }

def from_cereal(cereal, **_kw) -> ApproximantTriple:
    missing = {'m', 'n', 'A', 'B', 'C'} - set(cereal)
    if missing:
        raise ValueError(f'triple is missing fields {sorted(missing)}')
    normalization = cereal.get('normalization', 'display')
    if normalization not in NORMALIZATIONS:
        raise ValueError(f'unknown normalization {normalization!r}')

    return ApproximantTriple(
        int(cereal['m']), int(cereal['n']),
        ratpoly.from_cereal([str(c) for c in cereal['A']]),
        ratpoly.from_cereal([str(c) for c in cereal['B']]),
        ratpoly.from_cereal([str(c) for c in cereal['C']]),
        normalization=normalization,
    )
