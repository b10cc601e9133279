"""
Entanglement-assisted quantum code parameters
Turns (n, k, c) into [[n, n-2k+c, k+1; c]]_q records, checks them against the
entanglement-assisted Singleton bounds, and applies the propagation and
entanglement-variation rules to produce further records.
"""

import os
import sys
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from codes.grs_codes import (
    CodeFamilyParams,
    code_family,
    hermitian_dual_generator,
    minimum_distance_bruteforce,
)
from lattices.hull_formula import Exactness
from utils.exceptions import DimensionOutOfRangeError
from utils.logger import setup_logger

logger = setup_logger(__name__)

BRUTE_FORCE_MAX_N = 12


class MdsStatus(str, Enum):
    EAQMDS = "EAQMDS"
    NOT_MDS = "NotMDS"
    UNKNOWN = "Unknown"


class SingletonStatus(str, Enum):
    TIGHT = "Tight"
    SLACK = "Slack"
    VIOLATED = "Violated"


class QuantumCodeRecord(BaseModel):
    """[[n, K, d; c]]_q with the exactness of c and the EAQMDS certification."""

    model_config = ConfigDict(frozen=True)

    q: int
    n: int
    K: int
    d: int
    c: int
    exactness: Exactness = Exactness.EXACT
    mds_status: MdsStatus = MdsStatus.UNKNOWN

    @property
    def k(self) -> int:
        """Dimension of the classical code, d - 1 for the Hermitian construction."""
        return self.d - 1

    @property
    def eaqmds(self) -> Optional[bool]:
        if self.mds_status == MdsStatus.UNKNOWN:
            return None
        return self.mds_status == MdsStatus.EAQMDS

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "n": self.n,
            "K": self.K,
            "d": self.d,
            "c": self.c,
            "exact": self.exactness == Exactness.EXACT,
            "eaqmds": self.eaqmds,
        }

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "QuantumCodeRecord":
        eaqmds = data.get("eaqmds")
        if eaqmds is None:
            status = MdsStatus.UNKNOWN
        else:
            status = MdsStatus.EAQMDS if eaqmds else MdsStatus.NOT_MDS
        return cls(
            q=data["q"], n=data["n"], K=data["K"], d=data["d"], c=data["c"],
            exactness=Exactness.EXACT if data["exact"] else Exactness.UPPER_BOUND,
            mds_status=status,
        )

    def __str__(self) -> str:
        return f"[[{self.n},{self.K},{self.d};{self.c}]]_{self.q}"


class SingletonReport(BaseModel):
    """Outcome of the three Singleton-type bounds; margins are bound minus K."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    status: SingletonStatus
    margins: Dict[str, Fraction] = Field(default_factory=dict)
    hermitian_ceiling_ok: bool = True


def singleton_check(record: QuantumCodeRecord) -> SingletonReport:
    n, K, d, c = record.n, record.K, record.d, record.c

    margins = {
        "entanglement": Fraction(c + max(0, n - 2 * d + 2) - K),
        "classical": Fraction(n - d + 1 - K),
    }
    if 2 * (d - 1) >= n:
        bound = Fraction((n - d + 1) * (c + 2 * d - 2 - n), 3 * d - 3 - n)
        margins["large_distance"] = bound - K

    if any(margin < 0 for margin in margins.values()):
        status = SingletonStatus.VIOLATED
        logger.error(f"{record} violates a Singleton bound: {margins}")
    elif margins["entanglement"] == 0:
        status = SingletonStatus.TIGHT
    else:
        status = SingletonStatus.SLACK

    return SingletonReport(
        status=status,
        margins=margins,
        hermitian_ceiling_ok=2 * d <= n + c - K + 2,
    )


def _certify(record: QuantumCodeRecord, guaranteed: bool) -> MdsStatus:
    if record.exactness == Exactness.UPPER_BOUND:
        return MdsStatus.UNKNOWN
    report = singleton_check(record)
    if report.status == SingletonStatus.VIOLATED or not report.hermitian_ceiling_ok:
        return MdsStatus.NOT_MDS
    if guaranteed or report.status == SingletonStatus.TIGHT:
        return MdsStatus.EAQMDS
    return MdsStatus.NOT_MDS


def is_eaqmds(params: CodeFamilyParams, k: int, record: QuantumCodeRecord) -> bool:
    """EAQMDS for k <= lambda*tau, otherwise only when the first bound is tight."""
    report = singleton_check(record)
    if report.status == SingletonStatus.VIOLATED or not report.hermitian_ceiling_ok:
        return False
    return k <= params.lam_tau or report.status == SingletonStatus.TIGHT


def eaqecc_params(params: CodeFamilyParams, k: int, c: int,
                  exactness: Exactness = Exactness.EXACT) -> QuantumCodeRecord:
    """[[n, n-2k+c, k+1; c]]_q from the classical dimension k and entanglement c."""
    if not 1 <= k <= params.n:
        raise DimensionOutOfRangeError(f"k={k} outside [1, n={params.n}]")
    if not 0 <= c <= k:
        raise DimensionOutOfRangeError(f"c={c} outside [0, k={k}]")

    record = QuantumCodeRecord(q=params.q, n=params.n, K=params.n - 2 * k + c, d=k + 1,
                               c=c, exactness=exactness)
    if record.K < 0:
        raise DimensionOutOfRangeError(f"negative quantum dimension for k={k}, c={c}")

    status = _certify(record, guaranteed=k <= params.lam_tau)
    return record.model_copy(update={"mds_status": status})


def propagate(record: QuantumCodeRecord, i: int, s: int) -> QuantumCodeRecord:
    """[[n, n-k-i-s, k+i+1; k+i-s]]_q from a record with an l-dimensional hull, l = k - c.

    (i, s) = (0, l) returns the record itself.
    """
    n, k, q = record.n, record.k, record.q
    l = k - record.c
    if 2 * k > n:
        raise DimensionOutOfRangeError(f"propagation needs 2k <= n, got k={k}, n={n}")

    i_max = min(l, q * q + 1 - n, n - 2 * k)
    if not 0 <= i <= i_max:
        raise DimensionOutOfRangeError(f"i={i} outside [0, {i_max}]")
    if not 0 <= s <= l - i:
        raise DimensionOutOfRangeError(f"s={s} outside [0, {l - i}]")

    result = QuantumCodeRecord(q=q, n=n, K=n - k - i - s, d=k + i + 1, c=k + i - s,
                               exactness=record.exactness)
    status = _certify(result, guaranteed=False)
    logger.debug(f"propagate {record} with i={i}, s={s} -> {result} ({status.value})")
    return result.model_copy(update={"mds_status": status})


def vary_entanglement(record: QuantumCodeRecord, c_new: int) -> QuantumCodeRecord:
    """[[n, n-2k+c', k+1; c']]_q from a monomially equivalent code with a smaller hull."""
    k = record.k
    if record.q <= 2:
        raise DimensionOutOfRangeError("entanglement variation needs q > 2")
    if not record.c <= c_new <= k:
        raise DimensionOutOfRangeError(f"c'={c_new} outside [{record.c}, k={k}]")

    result = QuantumCodeRecord(q=record.q, n=record.n, K=record.n - 2 * k + c_new,
                               d=record.d, c=c_new, exactness=record.exactness)
    return result.model_copy(update={"mds_status": _certify(result, guaranteed=False)})


def dual_distance_check(params: CodeFamilyParams, k: int) -> Tuple[int, int]:
    """(measured minimum distance of the Hermitian dual, k + 1) for tiny lengths."""
    if params.n > BRUTE_FORCE_MAX_N:
        raise DimensionOutOfRangeError(
            f"n={params.n} exceeds the brute-force limit {BRUTE_FORCE_MAX_N}")
    if not 1 <= k < params.n:
        raise DimensionOutOfRangeError(f"k={k} outside [1, n-1={params.n - 1}]")

    family = code_family(params)
    dual = hermitian_dual_generator(family.generator_matrix(k), family.field)
    return minimum_distance_bruteforce(dual), k + 1
