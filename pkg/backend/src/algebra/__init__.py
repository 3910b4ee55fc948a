from .coeff import *
from .gell_mann import *
from .scalar import *
