from .audit import *
from .exactness import *
from .kernel import *
