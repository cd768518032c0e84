from .braids import *
from .analysis import *
from .cosets import *
from .chains import *
from .predict import *
