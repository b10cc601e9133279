import numpy as np
import pytest
from pydantic import ValidationError

from codes.grs_codes import admissible_families, code_family, failure_points_bruteforce, validate_params
from lattices.hull_formula import (
    Exactness,
    HullCalculator,
    classify_P_case,
    count_F,
    exactness_of,
    failure_points_formula,
    first_point_P_closed_form,
    first_point_T_closed_form,
    hull_basis_exponents,
    hull_dim_formula,
    lattice_P,
    lattice_T,
)
from lattices.lattice_core import FirstPoint, first_point, points_below
from quantum.quantum_params import SingletonStatus, eaqecc_params, singleton_check
from utils.exceptions import DimensionOutOfRangeError

# (k, K, c) rows of the published EAQMDS table
Q11_ROWS = [(8, 31, 2), (9, 29, 2), (10, 29, 4), (11, 29, 6), (12, 29, 8),
            (13, 27, 8), (14, 25, 8), (15, 25, 10)]

Q29_ROWS = [(25, 232, 2), (26, 230, 2), (27, 228, 2), (28, 226, 2), (29, 226, 4),
            (30, 224, 4), (31, 222, 4), (32, 220, 4), (33, 218, 4), (34, 216, 4),
            (35, 214, 4), (36, 212, 4), (37, 210, 4), (38, 210, 6), (39, 208, 6),
            (40, 206, 6), (41, 204, 6), (42, 202, 6), (43, 202, 8), (44, 200, 8),
            (127, 100, 74), (128, 100, 76), (129, 100, 78), (130, 100, 80), (131, 98, 80),
            (132, 96, 80), (133, 94, 80), (134, 92, 80), (135, 90, 80), (136, 90, 82),
            (137, 90, 84), (138, 90, 86), (139, 90, 88), (140, 90, 90)]

Q83_ROWS = [(48, 398, 2), (49, 396, 2), (50, 396, 4), (51, 394, 4), (52, 392, 4),
            (53, 392, 6), (54, 390, 6), (55, 388, 6), (56, 388, 8), (57, 386, 8),
            (58, 384, 8)] + [(k, 228, 2 * k - 264) for k in range(233, 247)]


def _families(q_max: int, sigma_filter: str = "exact"):
    return [p for q in range(4, q_max + 1) for p in admissible_families(q, sigma_filter)]


SMALL_FAMILIES = _families(13)
SMALL_FAMILIES_ALL_SIGMA = _families(13, "all")


class TestFirstPoints:
    def test_q11(self, q11_params):
        assert first_point_T_closed_form(q11_params) == FirstPoint(D1=3, D2=6, t_star=1, eps_star=1)
        assert first_point_P_closed_form(q11_params) == FirstPoint(D1=1, D2=13, t_star=2, eps_star=1)
        assert classify_P_case(q11_params) == 8

    def test_q29(self, q29_params):
        assert first_point_T_closed_form(q29_params) == FirstPoint(D1=13, D2=23, t_star=1, eps_star=2)
        assert classify_P_case(q29_params) == 2
        assert first_point_P_closed_form(q29_params) == first_point(lattice_P(q29_params))

    def test_q83(self, q83_params):
        assert classify_P_case(q83_params) == 3
        assert first_point_T_closed_form(q83_params) == first_point(lattice_T(q83_params))

    def test_odd_lambda_at_least_pi(self):
        params = validate_params(53, 13, 3, 9, 2)
        assert (params.pi, params.L) == (9, 4)
        assert classify_P_case(params) == 11
        fp = first_point_P_closed_form(params)
        assert fp.point == (4, 13)
        assert fp.t_star == 1
        assert fp == first_point(lattice_P(params))

    @pytest.mark.parametrize("params", _families(60), ids=lambda p: p.label())
    def test_closed_forms_match_search(self, params):
        assert first_point_T_closed_form(params) == first_point(lattice_T(params))
        assert first_point_P_closed_form(params) == first_point(lattice_P(params))

    @pytest.mark.slow
    def test_closed_forms_match_search_large_q(self):
        for params in _families(200):
            assert first_point_T_closed_form(params) == first_point(lattice_T(params)), params.label()
            assert first_point_P_closed_form(params) == first_point(lattice_P(params)), params.label()

    def test_every_case_is_reachable(self):
        cases = {classify_P_case(p) for p in _families(60)}
        assert cases <= set(range(1, 12))
        assert {2, 3, 8, 11} <= cases


class TestPublishedTable:
    @pytest.mark.parametrize("k, K, c", Q11_ROWS)
    def test_q11(self, q11_params, k, K, c):
        hull = HullCalculator(q11_params).compute(k)
        assert hull.c == c
        assert hull.exactness == Exactness.EXACT
        record = eaqecc_params(q11_params, k, hull.c, hull.exactness)
        assert str(record) == f"[[45,{K},{k + 1};{c}]]_11"
        assert record.eaqmds is True

    @pytest.mark.parametrize("k, K, c", Q29_ROWS)
    def test_q29(self, q29_params, k, K, c):
        hull = HullCalculator(q29_params).compute(k)
        assert hull.c == c
        assert eaqecc_params(q29_params, k, hull.c).K == K

    @pytest.mark.parametrize("k, K, c", Q83_ROWS)
    def test_q83(self, q83_params, k, K, c):
        hull = HullCalculator(q83_params).compute(k)
        assert hull.c == c
        assert eaqecc_params(q83_params, k, hull.c).K == K

    def test_hull_dim_formula(self, q11_params):
        assert hull_dim_formula(q11_params, 9) == (7, 2, Exactness.EXACT)


class TestCounting:
    def test_count_F_matches_failure_point_enumeration_q11(self, q11_params):
        calculator = HullCalculator(q11_params)
        for k in range(q11_params.n + 1):
            assert calculator.count_F(k) == len(failure_points_bruteforce(q11_params, k))

    @pytest.mark.parametrize("params", SMALL_FAMILIES_ALL_SIGMA, ids=lambda p: p.label())
    def test_count_F_matches_enumeration_for_every_k(self, params):
        calculator = HullCalculator(params)
        points = failure_points_bruteforce(params, params.n)
        for k in range(params.n + 1):
            below = [(e1, e2) for e1, e2 in points if e1 < k and e2 < k]
            assert calculator.count_F(k) == len(below), f"k={k}"

    @pytest.mark.parametrize("params", SMALL_FAMILIES_ALL_SIGMA, ids=lambda p: p.label())
    def test_failure_points_match_enumeration(self, params):
        for k in sorted({1, params.n // 3, params.n // 2, params.n}):
            assert failure_points_formula(params, k) == failure_points_bruteforce(params, k)
            assert count_F(params, k) == len(failure_points_bruteforce(params, k))

    def test_count_F_is_even_and_monotone(self, q29_params):
        calculator = HullCalculator(q29_params)
        counts = [calculator.count_F(k) for k in range(q29_params.n + 1)]
        assert all(c % 2 == 0 for c in counts)
        assert all(a <= b for a, b in zip(counts, counts[1:]))

    def test_P_points_lie_in_T(self, q29_params):
        calculator = HullCalculator(q29_params)
        k = q29_params.n
        assert set(points_below(calculator.P, k, calculator.P_pair)) <= \
            set(points_below(calculator.T, k, calculator.T_pair))

    def test_k_out_of_range(self, q11_params):
        calculator = HullCalculator(q11_params)
        with pytest.raises(DimensionOutOfRangeError):
            calculator.compute(0)
        with pytest.raises(DimensionOutOfRangeError):
            calculator.count_F(46)
        assert calculator.count_F(0) == 0

    def test_c_is_capped_at_k_beyond_exact_range(self, q11_params):
        hull = HullCalculator(q11_params).compute(22)
        assert hull.F_count == 24
        assert (hull.c, hull.hull_dim) == (22, 0)
        assert hull_dim_formula(q11_params, 22) == (0, 22, Exactness.UPPER_BOUND)

    def test_hull_dimension_never_negative(self, q11_params):
        calculator = HullCalculator(q11_params)
        for k in range(1, q11_params.n + 1):
            hull = calculator.compute(k)
            assert 0 <= hull.hull_dim <= k
            assert hull.c == min(hull.F_count, k)

    def test_records_are_frozen(self, q11_params):
        hull = HullCalculator(q11_params).compute(9)
        with pytest.raises(ValidationError):
            hull.F_count = 0


class TestExactness:
    def test_q11_boundary(self, q11_params):
        assert exactness_of(q11_params, 15) == Exactness.EXACT
        assert exactness_of(q11_params, 16) == Exactness.UPPER_BOUND

    def test_rho_two_doubles_the_range(self):
        params = validate_params(11, 5, 3, 2, 2)
        assert exactness_of(params, 30) == Exactness.EXACT

    def test_sigma_outside_exact_set(self):
        params = validate_params(13, 3, 2, 14, 4)
        assert exactness_of(params, 1) == Exactness.UPPER_BOUND


class TestAgainstGramOracle:
    @pytest.mark.parametrize("key", [(7, 3, 2, 4, 2), (7, 3, 2, 8, 2), (7, 3, 2, 8, 3),
                                     (7, 3, 4, 8, 2), (8, 7, 3, 9, 2), (8, 7, 3, 9, 3),
                                     (11, 5, 3, 4, 3)])
    def test_formula_equals_gram_rank(self, key):
        params = validate_params(*key)
        calculator = HullCalculator(params)
        family = code_family(params)
        for k in range(1, params.n + 1):
            hull = calculator.compute(k)
            _, rank = family.hull_dimension(k)
            if hull.exactness == Exactness.EXACT:
                assert rank == hull.c, f"k={k}"
            else:
                assert rank <= hull.c, f"k={k}"

    @pytest.mark.slow
    @pytest.mark.parametrize("params", SMALL_FAMILIES, ids=lambda p: p.label())
    def test_formula_equals_gram_rank_small_fields(self, params):
        calculator = HullCalculator(params)
        family = code_family(params)
        for k in range(1, params.n + 1):
            hull = calculator.compute(k)
            _, rank = family.hull_dimension(k)
            if hull.exactness == Exactness.EXACT:
                assert rank == hull.c, f"k={k}"
            else:
                assert rank <= hull.c, f"k={k}"

    def test_hull_basis_exponents(self, q11_params, q11_family):
        exponents = hull_basis_exponents(q11_params, 9)
        assert exponents == [0, 1, 2, 4, 5, 7, 8]
        M = q11_family.gram_matrix(9)
        assert np.all(M[exponents] == 0)
        assert not np.any(np.all(M[[3, 6]] == 0, axis=1))


@pytest.mark.parametrize("params", SMALL_FAMILIES, ids=lambda p: p.label())
def test_exact_records_are_tight(params):
    calculator = HullCalculator(params)
    for k in range(1, min(params.lam_tau, params.n) + 1):
        hull = calculator.compute(k)
        if hull.exactness != Exactness.EXACT:
            continue
        record = eaqecc_params(params, k, hull.c, hull.exactness)
        assert singleton_check(record).status == SingletonStatus.TIGHT
        assert record.eaqmds is True


@pytest.mark.parametrize("params", SMALL_FAMILIES, ids=lambda p: p.label())
def test_zero_count_means_self_orthogonal(params):
    calculator = HullCalculator(params)
    family = code_family(params)
    for k in range(1, params.n + 1):
        if calculator.count_F(k) > 0:
            break
        assert np.all(family.gram_matrix(k) == 0)
