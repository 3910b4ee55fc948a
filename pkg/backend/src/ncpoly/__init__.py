from .poly import *
from .sampling import *
from .tensor import *
from .word import *
