"""
Supertraces of graded Lie superalgebras.

Witt formulas, gl(k,l) decompositions, denominator identities, Monstrous Lie
superalgebras and diagram automorphism twining.

Documentation and examples are at <https://gradedlie.readthedocs.io>

"""
__version__ = '0.1.0'
__author__ = 'gradedlie developers'
__email__ = 'gradedlie@users.noreply.github.com'
__copyright__ = '2026, gradedlie developers'
__license__ = 'MIT'
__url__ = 'https://github.com/gradedlie/gradedlie'

from .graded_series import *
from .witt_engine import *
from .freelie_oracle import *
from .symfunc import *
from .gl_decomp import *
from . import gkm, monstrous, orbit, plotting, cli
