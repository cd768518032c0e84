from .enumerate_nielsen import *
