from .permutation import *
from .factored import *
from .bsgs import *
from .closure import *
