from .configuration import *        # Crossings, curves, faces and the ribbon graph
from .unionfind import *
from .arcs import *                 # Arcs of a curve between two crossings
from .cycles import *               # Bicorn curves as pairs of arcs
from .overlay import *              # Redraw cycles in minimal general position
from .reduction import *            # Bigon removal and intersection numbers
from .topology import *             # Orientability, essential curves, validation
from .generators import *           # Pattern families built from straight torus curves
