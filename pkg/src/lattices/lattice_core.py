"""
Congruence lattices L_{A,B,C}
Points (e1, e2) with 0 <= e1 < e2, e1 + e2 = A (mod B) and e1 = e2 (mod C).
A point lies on the line f(t): e1 + e2 = tB + A and on g(eps): e2 - e1 = eps*C.
Splitting the lattice by the parity of t gives two sublattices on which every
point is reached from the first point by the positive moves (B, B) and
(-C', C'), where C' is C/2 for even C and C otherwise. Counting below a bound
then reduces to a finite sum.
"""

from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

Point = Tuple[int, int]


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class Lattice(BaseModel):
    model_config = ConfigDict(frozen=True)

    A: int
    B: int
    C: int

    @model_validator(mode="after")
    def _check_moduli(self) -> "Lattice":
        if self.A < 0 or self.B < 2 or self.C < 2:
            raise ValueError(f"invalid lattice parameters (A={self.A}, B={self.B}, C={self.C})")
        return self

    @property
    def move_c(self) -> int:
        """C' of the (-C', C') move."""
        return self.C // 2 if self.C % 2 == 0 else self.C

    def __str__(self) -> str:
        return f"L({self.A},{self.B},{self.C})"


class FirstPoint(BaseModel):
    """Colexicographically minimal point of a (sub)lattice and its lines f(t*), g(eps*)."""

    model_config = ConfigDict(frozen=True)

    D1: int
    D2: int
    t_star: int
    eps_star: int

    @property
    def point(self) -> Point:
        return (self.D1, self.D2)


class SublatticePair(BaseModel):
    """First points of the t = t* (mod 2) and t != t* (mod 2) sublattices; None when empty."""

    model_config = ConfigDict(frozen=True)

    first1: Optional[FirstPoint]
    first2: Optional[FirstPoint]

    def sublattices(self) -> Iterator[Tuple[int, FirstPoint]]:
        for index, first in ((1, self.first1), (2, self.first2)):
            if first is not None:
                yield index, first


def is_empty(lat: Lattice) -> bool:
    return lat.B % 2 == 0 and lat.C % 2 == 0 and lat.A % 2 == 1


def is_point(lat: Lattice, e1: int, e2: int) -> bool:
    return (0 <= e1 < e2
            and (e1 + e2 - lat.A) % lat.B == 0
            and (e2 - e1) % lat.C == 0)


def point_at(lat: Lattice, t: int, eps: int) -> Optional[Point]:
    """Intersection of f(t) and g(eps) when it is a lattice point."""
    if eps < 1:
        return None
    low = t * lat.B + lat.A - eps * lat.C
    if low < 0 or low % 2:
        return None
    return (low // 2, low // 2 + eps * lat.C)


def first_point(lat: Lattice) -> Optional[FirstPoint]:
    """First lattice point from the least t whose line carries a point, with the least eps."""
    if is_empty(lat):
        return None

    t_low = ceil_div(lat.C - lat.A, lat.B)
    t_high = ceil_div(2 * lat.C - lat.A, lat.B) + 2
    for t in range(t_low, t_high + 1):
        for eps in (1, 2):
            point = point_at(lat, t, eps)
            if point is not None:
                return FirstPoint(D1=point[0], D2=point[1], t_star=t, eps_star=eps)

    raise RuntimeError(f"no first point found for non-empty lattice {lat}")


def first_point_bruteforce(lat: Lattice) -> Optional[FirstPoint]:
    """First lattice point by scanning e2 upward, independent of the line analysis."""
    if is_empty(lat):
        return None

    limit = lat.A + 2 * (lat.B + lat.C) + 2
    for e2 in range(1, limit + 1):
        for e1 in range(e2 % lat.C, e2, lat.C):
            if (e1 + e2 - lat.A) % lat.B == 0:
                return FirstPoint(D1=e1, D2=e2, t_star=(e1 + e2 - lat.A) // lat.B,
                                  eps_star=(e2 - e1) // lat.C)

    raise RuntimeError(f"no lattice point with e2 <= {limit} in {lat}")


def sublattice_first_points(lat: Lattice, fp: Optional[FirstPoint] = None) -> SublatticePair:
    """First points of both sublattices, derived from the first point of the lattice."""
    if fp is None:
        fp = first_point(lat)
    if fp is None:
        return SublatticePair(first1=None, first2=None)

    B, C = lat.B, lat.C
    if C % 2 == 0 and B % 2 == 1:
        second = None
    elif B % 2 == 0:
        second = FirstPoint(D1=fp.D1 + B // 2, D2=fp.D2 + B // 2,
                            t_star=fp.t_star + 1, eps_star=fp.eps_star)
    elif fp.eps_star == 2:
        second = FirstPoint(D1=fp.D1 + (B + C) // 2, D2=fp.D2 + (B - C) // 2,
                            t_star=fp.t_star + 1, eps_star=1)
    else:
        l = ceil_div((C - B) // 2 - fp.D1, B)
        second = FirstPoint(D1=fp.D1 + (B - C) // 2 + l * B, D2=fp.D2 + (B + C) // 2 + l * B,
                            t_star=fp.t_star + 1 + 2 * l, eps_star=2)

    return SublatticePair(first1=fp, first2=second)


def _count_sublattice(lat: Lattice, first: Optional[FirstPoint], k: int) -> int:
    if first is None or k <= first.D2:
        return 0

    B, step = lat.B, lat.move_c
    total = 0
    for i in range(ceil_div(k - first.D2 - B, B) + 1):
        along_e1 = (first.D1 + i * B) // step
        along_e2 = ceil_div(k - first.D2 - i * B, step) - 1
        total += min(along_e1, along_e2) + 1
    return total


def count_below(lat: Lattice, k: int, pair: Optional[SublatticePair] = None) -> int:
    """|L_{<k}|: points with e2 < k, summed over the two sublattices.

    Args:
        lat: lattice
        k: exclusive bound on e2
        pair: precomputed sublattice first points (computed when omitted)
    """
    if pair is None:
        pair = sublattice_first_points(lat)
    return sum(_count_sublattice(lat, first, k) for _, first in pair.sublattices())


def count_below_bruteforce(lat: Lattice, k: int) -> int:
    return sum(1 for e2 in range(k) for e1 in range(e2) if is_point(lat, e1, e2))


def positive_move_decomposition(lat: Lattice, e1: int, e2: int,
                                pair: Optional[SublatticePair] = None) -> Tuple[int, int, int]:
    """Write a lattice point as first_s + i(B,B) + j(-C',C') with i, j >= 0.

    Returns:
        (sublattice index s in {1, 2}, i, j)
    """
    if not is_point(lat, e1, e2):
        raise ValueError(f"({e1}, {e2}) is not a point of {lat}")
    if pair is None:
        pair = sublattice_first_points(lat)

    t = (e1 + e2 - lat.A) // lat.B
    eps = (e2 - e1) // lat.C
    index = 1 if (t - pair.first1.t_star) % 2 == 0 else 2
    first = pair.first1 if index == 1 else pair.first2

    i, t_remainder = divmod(t - first.t_star, 2)
    j, eps_remainder = divmod(eps - first.eps_star, 2 if lat.C % 2 else 1)
    if t_remainder or eps_remainder or i < 0 or j < 0:
        raise RuntimeError(f"({e1}, {e2}) is not a positive move from {first.point} in {lat}")
    return index, i, j


def points_below(lat: Lattice, k: int, pair: Optional[SublatticePair] = None) -> List[Point]:
    """Every point with e2 < k, generated by positive moves, in colexicographic order."""
    if pair is None:
        pair = sublattice_first_points(lat)

    B, step = lat.B, lat.move_c
    points = []
    for _, first in pair.sublattices():
        i = 0
        while first.D2 + i * B < k:
            j = 0
            while first.D1 + i * B - j * step >= 0 and first.D2 + i * B + j * step < k:
                points.append((first.D1 + i * B - j * step, first.D2 + i * B + j * step))
                j += 1
            i += 1

    return sorted(points, key=lambda p: (p[1], p[0]))
