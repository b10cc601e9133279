"""
Hermitian Hull EAQMDS - Utilities Package
"""

from .config import Config
from .exceptions import (
    DimensionOutOfRangeError,
    FieldConstructionError,
    HullToolkitError,
    InvalidParametersError,
)
from .logger import configure_logging, setup_logger

__all__ = [
    'Config',
    'setup_logger',
    'configure_logging',
    'HullToolkitError',
    'FieldConstructionError',
    'InvalidParametersError',
    'DimensionOutOfRangeError',
]
