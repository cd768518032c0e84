from .predict_structure import *
