from .logutils import *
from .paramutils import *
from .other_utils import *
from .serialization import *
