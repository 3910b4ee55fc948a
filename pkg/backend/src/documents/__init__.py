from .matrix import *
from .poly import *
from .reports import *
from .scalar import *
