"""
Hermitian Hull EAQMDS - Reporting Package
"""

from .table_writer import RECORD_COLUMNS, record_row, records_frame, render, write_output

__all__ = ['RECORD_COLUMNS', 'record_row', 'records_frame', 'render', 'write_output']
