from .constants import *
from .errors import *
from .formats import *
from .runner import *
