"""
Hermitian Hull EAQMDS - Quantum Codes Package
"""

from .quantum_params import (
    MdsStatus,
    QuantumCodeRecord,
    SingletonReport,
    SingletonStatus,
    eaqecc_params,
    is_eaqmds,
    propagate,
    singleton_check,
    vary_entanglement,
)

__all__ = [
    'MdsStatus',
    'QuantumCodeRecord',
    'SingletonReport',
    'SingletonStatus',
    'eaqecc_params',
    'is_eaqmds',
    'propagate',
    'singleton_check',
    'vary_entanglement',
]
