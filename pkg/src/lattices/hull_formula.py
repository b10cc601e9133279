"""
Closed-form Hermitian hull dimension
The failure pairs e1 < e2 are the points of T = L(L, lambda, tau) that are not
points of P = L(L, lambda, pi), pi = lcm(tau, rho). First points of both
lattices come from closed forms; counts below k come from lattice_core.
"""

import os
import sys
from enum import Enum
from typing import Any, Dict, List, Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from codes.grs_codes import CodeFamilyParams, FailurePoint
from lattices.lattice_core import (
    FirstPoint,
    Lattice,
    SublatticePair,
    ceil_div,
    count_below,
    points_below,
    sublattice_first_points,
)
from utils.exceptions import DimensionOutOfRangeError
from utils.logger import setup_logger


class Exactness(str, Enum):
    EXACT = "Exact"
    UPPER_BOUND = "UpperBound"


class HullComputation(BaseModel):
    """Lattice counts below k for one family.

    c is the failure count capped at k; beyond the exact range it is an upper bound.
    """

    model_config = ConfigDict(frozen=True)

    params: CodeFamilyParams
    k: int
    T_first: FirstPoint
    T_first2: Optional[FirstPoint]
    P_first: FirstPoint
    P_first2: Optional[FirstPoint]
    countT: int
    countP: int
    F_count: int
    exactness: Exactness

    @property
    def c(self) -> int:
        return min(self.F_count, self.k)

    @property
    def hull_dim(self) -> int:
        return self.k - self.c


def lattice_T(params: CodeFamilyParams) -> Lattice:
    return Lattice(A=params.L, B=params.lam, C=params.tau)


def lattice_P(params: CodeFamilyParams) -> Lattice:
    return Lattice(A=params.L, B=params.lam, C=params.pi)


def _first_point_from_pair(lat: Lattice, e1: int, e2: int) -> FirstPoint:
    return FirstPoint(D1=e1, D2=e2, t_star=(e1 + e2 - lat.A) // lat.B, eps_star=(e2 - e1) // lat.C)


def first_point_T_closed_form(params: CodeFamilyParams) -> FirstPoint:
    """(T1, T2) by the parities of lambda, tau and the size of rho."""
    lam, tau, rho = params.lam, params.tau, params.rho

    if lam % 2 == 0:
        T1, T2 = (lam - 2) // 2, (lam + 4 * tau - 2) // 2
    elif tau % 2 == 0:
        T1, T2 = lam - 1, lam + tau - 1
    elif rho == 2:
        if lam < tau + 2:
            T1, T2 = lam - 1, lam + tau - 1
        else:
            T1, T2 = (lam - tau - 2) // 2, (lam + 3 * tau - 2) // 2
    elif lam < tau:
        T1, T2 = lam - 1, lam + tau - 1
    else:
        T1, T2 = (lam + tau - 2) // 2, (lam + 3 * tau - 2) // 2

    return _first_point_from_pair(lattice_T(params), T1, T2)


def classify_P_case(params: CodeFamilyParams) -> int:
    """Case number 1..11 fixing eps* and the parity of t* for the first point of P."""
    lam, tau, rho, pi = params.lam, params.tau, params.rho, params.pi

    if lam % 2 == 0:
        return 1 if rho % 2 else 2
    if tau % 2 == 0:
        return 3
    if lam == pi:
        raise RuntimeError(f"lambda = pi = {pi} is impossible for odd lambda ({params.label()})")

    if lam < tau:
        return 4 if rho % 2 == 0 else 5
    if lam < pi:
        if rho % 2:
            return 6
        return 7 if rho == 2 else 8
    if rho == 2:
        return 9
    return 10 if rho % 2 == 0 else 11


# eps* and the parity required of t* (None: no parity constraint)
_P_CASES: Dict[int, Tuple[int, Optional[int]]] = {
    1: (2, None),
    2: (1, None),
    3: (1, 0),
    4: (1, 1),
    5: (1, 0),
    6: (1, 1),
    7: (1, 1),
    8: (1, 0),
    9: (1, 1),
    10: (1, 0),
    11: (1, 1),
}


def _ceil_with_parity(numerator: int, denominator: int, parity: Optional[int]) -> int:
    """Smallest integer >= numerator/denominator of the given parity."""
    value = ceil_div(numerator, denominator)
    if parity is not None and value % 2 != parity:
        value += 1
    return value


def first_point_P_closed_form(params: CodeFamilyParams) -> FirstPoint:
    """(P1, P2) = ((t*lambda + L - eps*pi)/2, P1 + eps*pi) with beta(eps) = eps*pi - L."""
    eps, parity = _P_CASES[classify_P_case(params)]
    beta = eps * params.pi - params.L
    t = _ceil_with_parity(beta, params.lam, parity)

    P1 = (t * params.lam + params.L - eps * params.pi) // 2
    return FirstPoint(D1=P1, D2=P1 + eps * params.pi, t_star=t, eps_star=eps)


def exactness_of(params: CodeFamilyParams, k: int) -> Exactness:
    """Exact iff sigma in {2, 3, rho} and (k <= lambda*tau, or rho = 2 and k <= 2*lambda*tau)."""
    within = k <= params.lam_tau or (params.rho == 2 and k <= 2 * params.lam_tau)
    if params.sigma_in_exact_set and within:
        return Exactness.EXACT
    return Exactness.UPPER_BOUND


class HullCalculator:
    """Counts failure points for one code family, reusing the first points across k."""

    def __init__(self, params: CodeFamilyParams):
        self.params = params
        self.logger = setup_logger(__name__)
        self._cache: Dict[str, Any] = {}

    @property
    def T(self) -> Lattice:
        return lattice_T(self.params)

    @property
    def P(self) -> Lattice:
        return lattice_P(self.params)

    @property
    def T_pair(self) -> SublatticePair:
        if "T" not in self._cache:
            self._cache["T"] = sublattice_first_points(self.T, first_point_T_closed_form(self.params))
        return self._cache["T"]

    @property
    def P_pair(self) -> SublatticePair:
        if "P" not in self._cache:
            self._cache["P"] = sublattice_first_points(self.P, first_point_P_closed_form(self.params))
        return self._cache["P"]

    def count_F(self, k: int) -> int:
        self._check_k(k, allow_zero=True)
        return 2 * (count_below(self.T, k, self.T_pair) - count_below(self.P, k, self.P_pair))

    def compute(self, k: int) -> HullComputation:
        self._check_k(k, allow_zero=False)
        countT = count_below(self.T, k, self.T_pair)
        countP = count_below(self.P, k, self.P_pair)
        F_count = 2 * (countT - countP)
        if F_count < 0:
            raise RuntimeError(f"negative failure count at k={k} for {self.params.label()}")

        result = HullComputation(
            params=self.params,
            k=k,
            T_first=self.T_pair.first1,
            T_first2=self.T_pair.first2,
            P_first=self.P_pair.first1,
            P_first2=self.P_pair.first2,
            countT=countT,
            countP=countP,
            F_count=F_count,
            exactness=exactness_of(self.params, k),
        )
        self.logger.debug(f"k={k}: |T|={countT}, |P|={countP}, c={F_count} "
                          f"({result.exactness.value})")
        return result

    def failure_points(self, k: int) -> Set[FailurePoint]:
        """Ordered failure pairs below k from the lattice points of T not in P."""
        self._check_k(k, allow_zero=True)
        upper = set(points_below(self.T, k, self.T_pair)) - set(points_below(self.P, k, self.P_pair))
        return upper | {(e2, e1) for e1, e2 in upper}

    def hull_basis_exponents(self, k: int) -> List[int]:
        """Exponents e < k whose row ev(X^e) is Hermitian-orthogonal to every row."""
        failing = {e1 for e1, _ in self.failure_points(k)}
        return [e for e in range(k) if e not in failing]

    def _check_k(self, k: int, allow_zero: bool) -> None:
        low = 0 if allow_zero else 1
        if not low <= k <= self.params.n:
            raise DimensionOutOfRangeError(f"k={k} outside [{low}, n={self.params.n}]")


def count_F(params: CodeFamilyParams, k: int) -> int:
    return HullCalculator(params).count_F(k)


def hull_dim_formula(params: CodeFamilyParams, k: int) -> Tuple[int, int, Exactness]:
    """(hull dimension, c, exactness); under UpperBound the dimension is a lower bound."""
    result = HullCalculator(params).compute(k)
    return result.hull_dim, result.c, result.exactness


def failure_points_formula(params: CodeFamilyParams, k: int) -> Set[FailurePoint]:
    return HullCalculator(params).failure_points(k)


def hull_basis_exponents(params: CodeFamilyParams, k: int) -> List[int]:
    return HullCalculator(params).hull_basis_exponents(k)
