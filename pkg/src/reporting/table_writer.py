"""
Tabular output for parameter tables and sweeps
Rows are collected in a pandas DataFrame and rendered as CSV or JSON with a
fixed column order, so that repeated runs produce identical text.
"""

import os
import sys
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from quantum.quantum_params import QuantumCodeRecord
from utils.logger import setup_logger

logger = setup_logger(__name__)

RECORD_COLUMNS = ["k", "n", "K", "d", "c", "exact", "eaqmds"]
FAMILY_COLUMNS = ["q", "lam", "tau", "rho", "sigma"]
OUTPUT_FORMATS = ("csv", "json")


def record_row(record: QuantumCodeRecord, k: Optional[int] = None) -> Dict[str, Any]:
    """Flat row for one record; k defaults to d - 1."""
    row = record.to_json_dict()
    row["k"] = record.k if k is None else k
    return row


def records_frame(rows: Iterable[Dict[str, Any]], leading: Optional[List[str]] = None,
                  trailing: Optional[List[str]] = None) -> pd.DataFrame:
    """DataFrame with ``leading`` + k,n,K,d,c,exact,eaqmds + ``trailing`` columns."""
    columns = list(leading or []) + RECORD_COLUMNS + list(trailing or [])
    frame = pd.DataFrame(list(rows), columns=columns)
    # Keep None as null in both renderings instead of NaN
    return frame.astype(object).where(frame.notna(), None)


def render(frame: pd.DataFrame, output_format: str = "csv") -> str:
    if output_format == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if output_format == "json":
        return frame.to_json(orient="records", indent=2) + "\n"
    raise ValueError(f"unknown output format '{output_format}', expected one of {OUTPUT_FORMATS}")


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write rendered text to ``path`` or to stdout."""
    if path is None:
        sys.stdout.write(text)
        return

    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info(f"Wrote {path}")
