from .residue import *
from .space import *
from .orders import *
from .domain import *
