"""
Hermitian Hull EAQMDS - Lattices Package
"""

from .hull_formula import Exactness, HullCalculator, HullComputation
from .lattice_core import FirstPoint, Lattice, SublatticePair, count_below, first_point

__all__ = [
    'Exactness',
    'HullCalculator',
    'HullComputation',
    'FirstPoint',
    'Lattice',
    'SublatticePair',
    'count_below',
    'first_point',
]
