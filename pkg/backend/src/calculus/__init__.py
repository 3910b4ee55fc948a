from .difference import *
from .divergence import *
from .number import *
from .rotation import *
