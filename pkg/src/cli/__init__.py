"""
Hermitian Hull EAQMDS - Command Line Package
"""

from .commands import FAMILIES, ParameterSweep, SweepSpec, cli, main

__all__ = ['FAMILIES', 'ParameterSweep', 'SweepSpec', 'cli', 'main']
