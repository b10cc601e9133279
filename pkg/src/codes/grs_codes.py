"""
Generalized Reed-Solomon code family C_{lambda,tau,rho,sigma}(k)
Builds the evaluation set, the coefficients s and the multiplier vector v over
F_{q^2}, the generator and Gram matrices, and the brute-force Hermitian hull
oracle (Gram-matrix rank) the closed-form counting is checked against.
"""

import os
import sys
from itertools import combinations
from math import gcd
from typing import Any, Dict, Iterator, List, Optional, Set, Tuple

import galois
import numpy as np
from pydantic import BaseModel, ConfigDict

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from finite_fields.gf import Field, FieldElement, make_fields
from utils.exceptions import DimensionOutOfRangeError, InvalidParametersError
from utils.logger import setup_logger

FailurePoint = Tuple[int, int]


class CodeFamilyParams(BaseModel):
    """Validated parameters (q, lambda, tau, rho, sigma) and derived quantities."""

    model_config = ConfigDict(frozen=True)

    q: int
    lam: int
    tau: int
    rho: int
    sigma: int
    kappa1: int
    kappa2: int
    kappa: int
    n: int
    pi: int
    L: int

    @property
    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.q, self.lam, self.tau, self.rho, self.sigma)

    @property
    def lam_tau(self) -> int:
        return self.lam * self.tau

    @property
    def sigma_in_exact_set(self) -> bool:
        """sigma in {2, 3, rho}: the orthogonality conditions are necessary and sufficient."""
        return self.sigma in (2, 3, self.rho)

    def label(self) -> str:
        return (f"q={self.q}, lambda={self.lam}, tau={self.tau}, "
                f"rho={self.rho}, sigma={self.sigma}")


def select_L(lam: int, tau: int, rho: int) -> int:
    """Value of L maximizing the self-orthogonal range."""
    if lam % 2 == 0:
        return 2 * tau - 2
    if lam < tau or tau % 2 == 0 or rho == 2:
        return tau - 2
    return 2 * tau - 2


def validate_params(q: int, lam: int, tau: int, rho: int, sigma: int) -> CodeFamilyParams:
    """Check every construction assumption and derive kappa, n, pi and L."""
    if q < 2 or not galois.is_prime_power(q):
        raise InvalidParametersError("q_not_prime_power", f"q={q} is not a prime power")
    if q < 4:
        raise InvalidParametersError("q_too_small", f"q={q} < 4")
    if lam <= 1 or (q - 1) % lam:
        raise InvalidParametersError(
            "lambda_divisibility", f"lambda={lam} must be > 1 and divide q-1={q - 1}")
    if tau <= 1 or (q + 1) % tau:
        raise InvalidParametersError(
            "tau_divisibility", f"tau={tau} must be > 1 and divide q+1={q + 1}")
    if rho <= 1 or (q + 1) % rho:
        raise InvalidParametersError(
            "rho_divisibility", f"rho={rho} must be > 1 and divide q+1={q + 1}")
    if gcd(lam, tau) != 1:
        raise InvalidParametersError(
            "lambda_tau_not_coprime", f"gcd(lambda, tau)={gcd(lam, tau)} != 1")

    kappa1 = gcd(lam, rho)
    kappa2 = gcd(tau, rho)
    kappa = kappa1 * kappa2
    if rho // kappa < 2:
        raise InvalidParametersError(
            "rho_over_kappa_too_small", f"rho/kappa={rho}/{kappa} < 2")
    if not 2 <= sigma <= rho // kappa:
        raise InvalidParametersError(
            "sigma_out_of_range", f"sigma={sigma} outside [2, rho/kappa={rho // kappa}]")

    n = lam * tau * sigma
    if n > q * q - 1:
        raise InvalidParametersError(
            "length_exceeds_field", f"n={n} exceeds q^2-1={q * q - 1}")

    return CodeFamilyParams(
        q=q, lam=lam, tau=tau, rho=rho, sigma=sigma,
        kappa1=kappa1, kappa2=kappa2, kappa=kappa,
        n=n, pi=tau * rho // kappa2, L=select_L(lam, tau, rho),
    )


def admissible_families(q: int, sigma_filter: str = "exact") -> List[CodeFamilyParams]:
    """Every valid family for q, ordered by (lambda, tau, rho, sigma).

    Args:
        q: field size
        sigma_filter: ``"exact"`` keeps sigma in {2, 3, rho}, ``"all"`` keeps every sigma
    """
    if q < 4 or not galois.is_prime_power(q):
        return []

    families = []
    lams = [d for d in range(2, q) if (q - 1) % d == 0]
    plus = [d for d in range(2, q + 2) if (q + 1) % d == 0]
    for lam in lams:
        for tau in plus:
            if gcd(lam, tau) != 1:
                continue
            for rho in plus:
                kappa = gcd(lam, rho) * gcd(tau, rho)
                for sigma in range(2, rho // kappa + 1):
                    if sigma_filter == "exact" and sigma not in (2, 3, rho):
                        continue
                    if lam * tau * sigma > q * q - 1:
                        continue
                    families.append(validate_params(q, lam, tau, rho, sigma))
    return families


def hermitian_inner_product(u: FieldElement, w: FieldElement, field: Field) -> FieldElement:
    """u ._h w = sum_i u_i w_i^q."""
    if u.shape != w.shape:
        raise DimensionOutOfRangeError(f"length mismatch: {u.shape} vs {w.shape}")
    return np.sum(u * field.frobenius(w))


def gram_rank(M: FieldElement) -> int:
    """Rank over F_{q^2} by exact row reduction; an empty matrix has rank 0."""
    if M.size == 0:
        return 0
    return int(np.linalg.matrix_rank(M))


def minimum_distance_bruteforce(G: FieldElement) -> int:
    """Exact minimum distance of the code spanned by the rows of G (full row rank).

    A nonzero codeword vanishes on a column set T iff rank(G_T) < k, so the
    distance is n minus the largest such T. Only feasible for tiny n.
    """
    k, n = G.shape
    for size in range(n, -1, -1):
        for columns in combinations(range(n), size):
            if size == 0 or gram_rank(G[:, list(columns)]) < k:
                return n - size
    return n


def hermitian_dual_generator(G: FieldElement, field: Field) -> FieldElement:
    """Rows spanning C^{perp_h} = {u : G^q u = 0}."""
    return field.frobenius(G).null_space()


class CodeFamily:
    """Construction of C_{lambda,tau,rho,sigma}(k) for all k at once.

    The full n x n evaluation matrix and its Gram matrix are built once and
    sliced for each k.
    """

    def __init__(self, params: CodeFamilyParams):
        self.params = params
        self.field = make_fields(params.q)
        self.logger = setup_logger(__name__)
        self._cache: Dict[str, Any] = {}

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @property
    def s(self) -> FieldElement:
        """Coefficients s_0..s_{sigma-1} in F_q*, summing to zero."""
        if "s" not in self._cache:
            self._cache["s"] = self._coefficients_s()
        return self._cache["s"]

    def _coefficients_s(self) -> FieldElement:
        field, sigma = self.field, self.params.sigma
        if sigma == 2:
            return field.GF([1, int(-field.one)])

        head = field.integer(sigma - 2)
        excluded = {0, int(-head)}
        if field.p != 2:
            excluded.add(int(-head / field.integer(2)))

        chosen = next(x for x in field.base_field_elements if int(x) not in excluded)
        last = -(head + chosen)
        return field.GF([1] * (sigma - 2) + [int(chosen), int(last)])

    def _index_triples(self) -> Iterator[Tuple[int, int, int]]:
        p = self.params
        for i in range(p.lam):
            for j in range(p.tau):
                for ell in range(p.sigma):
                    yield i, j, ell

    @property
    def evaluation_set(self) -> FieldElement:
        """A(i,j,l) = zeta_lambda^i zeta_tau^j zeta_rho^l in lexicographic (i,j,l) order."""
        if "A" not in self._cache:
            p, field = self.params, self.field
            z_lam = field.root_of_unity(p.lam)
            z_tau = field.root_of_unity(p.tau)
            z_rho = field.root_of_unity(p.rho)
            values = [int(z_lam ** i * z_tau ** j * z_rho ** ell)
                      for i, j, ell in self._index_triples()]
            self._cache["A"] = field.GF(values)
        return self._cache["A"]

    @property
    def multiplier_vector(self) -> FieldElement:
        """v(i,j,l) with v^(q+1) = zeta_lambda^(-iL) s_l."""
        if "v" not in self._cache:
            p, field = self.params, self.field
            z_lam = field.root_of_unity(p.lam)
            s = self.s
            preimages: Dict[Tuple[int, int], int] = {}
            values = []
            for i, _, ell in self._index_triples():
                if (i, ell) not in preimages:
                    exponent = (-i * p.L) % p.lam
                    normed = z_lam ** exponent * s[ell]
                    preimages[(i, ell)] = int(field.norm_preimage(normed))
                values.append(preimages[(i, ell)])
            self._cache["v"] = field.GF(values)
        return self._cache["v"]

    def evaluation_matrix(self) -> FieldElement:
        """n x n matrix whose row e is ev_{v,A}(X^e)."""
        if "ev" not in self._cache:
            A, v = self.evaluation_set, self.multiplier_vector
            rows = [v]
            power = v
            for _ in range(1, self.params.n):
                power = power * A
                rows.append(power)
            self._cache["ev"] = self.field.GF(np.vstack(rows))
        return self._cache["ev"]

    def generator_matrix(self, k: int) -> FieldElement:
        """k x n generator matrix, row i = ev_{v,A}(X^(i-1))."""
        self._check_k(k, allow_zero=False)
        return self.evaluation_matrix()[:k]

    # ------------------------------------------------------------------
    # Hermitian hull oracle
    # ------------------------------------------------------------------
    def full_gram_matrix(self) -> FieldElement:
        if "gram" not in self._cache:
            ev = self.evaluation_matrix()
            self.logger.debug(f"Computing {self.params.n}x{self.params.n} Gram matrix "
                              f"for {self.params.label()}")
            self._cache["gram"] = ev @ self.field.frobenius(ev).T
        return self._cache["gram"]

    def gram_matrix(self, k: int) -> FieldElement:
        """G (G^q)^T, entry (i,j) = ev(X^(i-1)) ._h ev(X^(j-1))."""
        self._check_k(k, allow_zero=True)
        return self.full_gram_matrix()[:k, :k]

    def hull_dimension(self, k: int) -> Tuple[int, int]:
        """(dim Hull(C), c) from the rank of the Gram matrix."""
        c = gram_rank(self.gram_matrix(k))
        return k - c, c

    def failure_points(self, k: int) -> Set[FailurePoint]:
        """Ordered pairs (e1, e2), e1, e2 < k, meeting the three failure congruences."""
        self._check_k(k, allow_zero=True)
        p = self.params
        return {
            (e1, e2)
            for e1 in range(k)
            for e2 in range(k)
            if (e1 + e2 - p.L) % p.lam == 0
            and (e1 - e2) % p.tau == 0
            and (e1 - e2) % p.rho != 0
        }

    def is_mds(self, k: int) -> bool:
        """Every k-subset of generator columns is nonsingular (tiny n only)."""
        G = self.generator_matrix(k)
        for columns in combinations(range(self.params.n), k):
            if np.linalg.det(G[:, list(columns)]) == 0:
                return False
        return True

    def _check_k(self, k: int, allow_zero: bool) -> None:
        low = 0 if allow_zero else 1
        if not low <= k <= self.params.n:
            raise DimensionOutOfRangeError(f"k={k} outside [{low}, n={self.params.n}]")


_FAMILY_CACHE: Dict[Tuple[int, int, int, int, int], CodeFamily] = {}


def code_family(params: CodeFamilyParams) -> CodeFamily:
    """Shared CodeFamily instance per parameter tuple."""
    if params.key not in _FAMILY_CACHE:
        _FAMILY_CACHE[params.key] = CodeFamily(params)
    return _FAMILY_CACHE[params.key]


# ----------------------------------------------------------------------
# Functional interface
# ----------------------------------------------------------------------
def coefficients_s(params: CodeFamilyParams) -> FieldElement:
    return code_family(params).s


def evaluation_set(params: CodeFamilyParams) -> FieldElement:
    return code_family(params).evaluation_set


def multiplier_vector(params: CodeFamilyParams) -> FieldElement:
    return code_family(params).multiplier_vector


def generator_matrix(params: CodeFamilyParams, k: int) -> FieldElement:
    return code_family(params).generator_matrix(k)


def gram_matrix(G: FieldElement, field: Field) -> FieldElement:
    """G (G^q)^T for an arbitrary generator matrix over F_{q^2}."""
    return G @ field.frobenius(G).T


def failure_points_bruteforce(params: CodeFamilyParams, k: int) -> Set[FailurePoint]:
    return code_family(params).failure_points(k)


def hull_dimension_oracle(params: CodeFamilyParams, k: int) -> Tuple[int, int]:
    family = code_family(params)
    family._check_k(k, allow_zero=False)
    return family.hull_dimension(k)
