from .chain_checks import *
