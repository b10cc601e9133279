"""
Hermitian Hull EAQMDS - Main Package
"""

__version__ = "1.0.0"
__description__ = "Hermitian hulls of GRS codes and entanglement-assisted quantum MDS parameters"
