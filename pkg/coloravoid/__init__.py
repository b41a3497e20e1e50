"""
Tools for color-avoiding connectivity of colored graphs and matroids

"""

# Versions should comply with PEP440. For a discussion on single-sourcing
# the version across setup.py and the project code, see
# https://packaging.python.org/en/latest/single_source_version.html
__version__ = '0.3.0'

from . import math
from . import graph
from . import connectivity
from . import matroid
from . import sparsify
from . import construction
from . import sampling
from . import exact
from . import fileio
from . import experiment
