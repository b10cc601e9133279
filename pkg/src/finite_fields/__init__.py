"""
Hermitian Hull EAQMDS - Finite Fields Package
"""

from .gf import Field, FieldElement, make_fields

__all__ = ['Field', 'FieldElement', 'make_fields']
