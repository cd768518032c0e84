from .config import *
from .dispatch import *
