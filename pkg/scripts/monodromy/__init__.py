from .analyze_monodromy import *
from .coset_action import *
from .omega_crosscheck import *
