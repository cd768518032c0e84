from .suite import *
