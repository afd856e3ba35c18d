from . import dwim
from . import tables
from . import triple
