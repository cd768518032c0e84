from .groups import *
from .tuples import *
from .classes import *
from .cache import *
