from .surface import *              # Curve configurations: ribbon graphs, arcs, overlays, bigon reduction, generators
from .bicorns import *              # Bicorn curves, third reduction, bicorn sequences and slim triples
from .certify import *              # Bound formulas and distance certificates
from .projection import *           # Subsurface projection of curves and bicorns
from .bounds_ledger import *        # Exact arithmetic of the hyperbolicity constants
from .utils import *                # Utility methods: parameters, log files, timers, serialization
from .visualization import *        # DOT export
from .bicorn_base import *
