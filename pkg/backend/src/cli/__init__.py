from .config import *
from .runner import *
