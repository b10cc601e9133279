"""
Finite field arithmetic for the Hermitian construction
Builds F_{q^2} with a deterministic modulus and primitive element, and the
distinguished elements the code family needs: roots of unity, norm preimages
and geometric character sums. Elements are galois FieldArray scalars; the base
field F_q is the subfield fixed by the Frobenius map x -> x^q.
"""

import os
import sys
from typing import Dict, List

import galois
import numpy as np

# Add src directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.exceptions import FieldConstructionError
from utils.logger import setup_logger

FieldElement = galois.FieldArray

_FIELD_CACHE: Dict[int, "Field"] = {}


class Field:
    """The quadratic extension F_{q^2} together with its subfield F_q.

    Attributes:
        q: order of the base field
        p: characteristic
        m: q = p^m
        order: q^2
        modulus: irreducible polynomial of degree 2m over F_p defining F_{q^2}
        GF: the galois FieldArray class of F_{q^2}
        generator: fixed primitive element of F_{q^2}
    """

    def __init__(self, q: int):
        if q < 2 or not galois.is_prime_power(q):
            raise FieldConstructionError(f"q={q} is not a prime power")

        primes, multiplicities = galois.factors(q)
        self.q = q
        self.p = int(primes[0])
        self.m = int(multiplicities[0])
        self.order = q * q
        self.logger = setup_logger(__name__)

        # Lexicographically smallest monic irreducible of degree 2m over F_p and
        # the smallest primitive element modulo it
        self.modulus = galois.irreducible_poly(self.p, 2 * self.m, method="min")
        primitive = galois.primitive_element(self.modulus, method="min")
        self.GF = galois.GF(self.p ** (2 * self.m), irreducible_poly=self.modulus,
                            primitive_element=primitive)
        self.generator = self.GF.primitive_element
        self._cache: Dict[str, FieldElement] = {}

        self.logger.debug(f"Built F_{self.order} with modulus {self.modulus} "
                          f"and generator {self.format_element(self.generator)}")

    def __repr__(self) -> str:
        return f"Field(q={self.q}, modulus={self.modulus})"

    # ------------------------------------------------------------------
    # Elements
    # ------------------------------------------------------------------
    def element(self, value: int) -> FieldElement:
        """Element with the given integer (polynomial-basis) representation."""
        return self.GF(value)

    def integer(self, value: int) -> FieldElement:
        """The integer ``value`` as a field element (value * 1, reduced mod p)."""
        return self.GF(value % self.p)

    @property
    def zero(self) -> FieldElement:
        return self.GF(0)

    @property
    def one(self) -> FieldElement:
        return self.GF(1)

    @property
    def base_field_elements(self) -> FieldElement:
        """All elements of F_q inside F_{q^2}, in increasing integer representation."""
        if "base" not in self._cache:
            elements = self.GF.elements
            self._cache["base"] = elements[elements ** self.q == elements]
        return self._cache["base"]

    def is_in_base_field(self, x: FieldElement) -> bool:
        return bool(np.all(self.frobenius(x) == x))

    def frobenius(self, x: FieldElement) -> FieldElement:
        """x -> x^q, applied entrywise to arrays."""
        return x ** self.q

    def norm(self, x: FieldElement) -> FieldElement:
        """Norm map F_{q^2} -> F_q, x -> x^(q+1)."""
        return x ** (self.q + 1)

    def multiplicative_order(self, x: FieldElement) -> int:
        return int(x.multiplicative_order())

    def format_element(self, x: FieldElement) -> str:
        """Prime-field coordinates of a scalar, low degree first, comma separated."""
        coordinates = x.vector()[::-1]
        return ",".join(str(int(c)) for c in coordinates)

    def parse_element(self, text: str) -> FieldElement:
        """Inverse of :meth:`format_element`."""
        value = 0
        for position, digit in enumerate(int(c) for c in text.split(",")):
            value += digit * self.p ** position
        return self.GF(value)

    # ------------------------------------------------------------------
    # Distinguished elements
    # ------------------------------------------------------------------
    def root_of_unity(self, t: int) -> FieldElement:
        """Primitive t-th root of unity generator^((q^2-1)/t)."""
        if t < 1 or (self.order - 1) % t:
            raise FieldConstructionError(f"t={t} does not divide q^2-1={self.order - 1}")
        return self.generator ** ((self.order - 1) // t)

    def norm_preimage(self, alpha: FieldElement) -> FieldElement:
        """Deterministic v in F_{q^2} with v^(q+1) = alpha, for alpha in F_q*.

        alpha = generator^e with (q+1) | e because generator^(q+1) generates
        F_q*, so generator^(e/(q+1)) is a preimage.
        """
        alpha = self.GF(alpha)
        if alpha == 0:
            raise FieldConstructionError("the norm of a nonzero element is never 0")
        if not self.is_in_base_field(alpha):
            raise FieldConstructionError(
                f"{self.format_element(alpha)} is not in the base field F_{self.q}")

        exponent = int(alpha.log())
        return self.generator ** (exponent // (self.q + 1))

    def geometric_character_sum(self, gamma: int, N: int) -> FieldElement:
        """Sum of zeta_gamma^(iN) for 0 <= i < gamma.

        The sum vanishes unless gamma | N, in which case every term is 1 and
        the sum is gamma reduced mod p.
        """
        if gamma < 1 or (self.order - 1) % gamma:
            raise FieldConstructionError(
                f"gamma={gamma} does not divide q^2-1={self.order - 1}")
        if N % gamma:
            return self.zero
        return self.integer(gamma)

    def divisors_of_group_order(self) -> List[int]:
        n = self.order - 1
        return [t for t in range(1, n + 1) if n % t == 0]


def make_fields(q: int) -> Field:
    """Linked fields F_q and F_{q^2}; identical q always yields the same object."""
    if q not in _FIELD_CACHE:
        _FIELD_CACHE[q] = Field(q)
    return _FIELD_CACHE[q]
