from .axioms import *
from .delta import *
from .evaluate import *
from .point import *
