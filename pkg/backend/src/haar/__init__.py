from .moments import *
from .recovery import *
from .sampler import *
