"""Pivot-free elimination with infinitesimal injections vs the exact oracle."""

import random
from fractions import Fraction as F

import pytest

from grossone import (
    G,
    ZERO,
    LinearSystem,
    SingularSystem,
    divide,
    solve_exact_oracle,
    solve_grossone,
)
from support import gn, random_system_with_zero_minors

ZERO_PIVOT_2X2 = LinearSystem.from_rows([[0, 1], [2, 2]], [2, 2])
DOUBLE_ZERO_3X3 = LinearSystem.from_rows([[0, 0, 1], [2, 0, -1], [1, 2, 3]], [1, 3, 1])


def assert_residual_infinitesimal(report):
    lead = report.residual_leading_power
    assert lead is None or lead < ZERO


def test_two_by_two_zero_pivot_system():
    report = solve_grossone(ZERO_PIVOT_2X2)
    assert report.finite_solution == (F(-1), F(2))
    assert report.injected_pivots == 1
    assert report.injected_rows == (0,)
    assert report.solution[0] == gn(-1)  # exact, no infinitesimal tail
    assert report.solution[1] == gn(2) + G**-1
    assert report.residual_leading_power == gn(-1)


def test_three_by_three_double_zero_pivot_system():
    report = solve_grossone(DOUBLE_ZERO_3X3)
    assert report.finite_solution == (F(2), F(-2), F(1))
    assert report.injected_pivots == 2
    assert report.injected_rows == (0, 1)
    assert report.solution[0] == gn(2)
    assert report.solution[1] == gn(-2)
    assert report.solution[2] == gn(1) - 2 * G**-1
    assert_residual_infinitesimal(report)


def test_identity_system_passes_through():
    system = LinearSystem.from_rows([[1, 0], [0, 1]], [5, 7])
    report = solve_grossone(system)
    assert report.finite_solution == (F(5), F(7))
    assert report.injected_pivots == 0
    assert report.solution == (gn(5), gn(7))
    assert report.residual_leading_power is None


def test_no_injection_path_is_exact():
    system = LinearSystem.from_rows([[2, 1, 1], [1, 3, 2], [1, 0, 0]], [4, 5, 6])
    report = solve_grossone(system)
    assert report.injected_pivots == 0
    assert report.residual_leading_power is None
    assert report.finite_solution == solve_exact_oracle(system)
    assert all(x.is_rational() for x in report.solution)


def test_exact_tail_of_2x2_solution():
    # Untruncated, the components are -1 + 1/(1-G) and 2 - 1/(1-G); check by
    # recomposition.  x2 solves (2-2G) x = 2-4G, and truncation at G**-1
    # leaves exactly the remainder below:
    division = divide(gn(2) - 4 * G, gn(2) - 2 * G, -1)
    assert division.quotient == gn(2) + G**-1
    assert division.remainder == -2 * G**-1
    assert division.quotient * (gn(2) - 2 * G) + division.remainder == gn(2) - 4 * G

    report = solve_grossone(ZERO_PIVOT_2X2)
    one_minus_g = gn(1) - G
    # (2 - 1/(1-G)) * (1-G) = 1 - 2G; the truncated component reproduces it
    # up to the dropped tail re-amplified by (1-G), which is exactly G**-1:
    assert report.solution[1] * one_minus_g == gn(1) - 2 * G + G**-1
    # (-1 + 1/(1-G)) * (1-G) = G; the truncated x1 = -1 differs by exactly -1:
    assert report.solution[0] * one_minus_g == gn(-1) + G
    for component, exact_product in ((1, gn(1) - 2 * G), (0, G)):
        error = report.solution[component] * one_minus_g - exact_product
        assert error.infinite_part() == ZERO  # amplified error stays below G


def test_oracle_on_reference_systems():
    assert solve_exact_oracle(ZERO_PIVOT_2X2) == (F(-1), F(2))
    assert solve_exact_oracle(DOUBLE_ZERO_3X3) == (F(2), F(-2), F(1))
    identity = LinearSystem.from_rows([[1, 0], [0, 1]], [5, 7])
    assert solve_exact_oracle(identity) == (F(5), F(7))


def test_singular_system_detected():
    singular = LinearSystem.from_rows([[1, 1], [1, 1]], [1, 2])
    with pytest.raises(SingularSystem):
        solve_grossone(singular)
    with pytest.raises(SingularSystem):
        solve_exact_oracle(singular)


def test_finite_solution_is_finite_parts():
    report = solve_grossone(DOUBLE_ZERO_3X3)
    assert report.finite_solution == tuple(x.finite_part() for x in report.solution)


def test_random_systems_match_oracle():
    rng = random.Random(101)
    for case in range(30):
        n = rng.randint(2, 6)
        zero_minors = case % 3
        system = random_system_with_zero_minors(rng, n, zero_minors)
        report = solve_grossone(system)
        assert report.finite_solution == solve_exact_oracle(system)
        assert_residual_infinitesimal(report)


def test_five_by_five_matches_oracle():
    rng = random.Random(55)
    system = random_system_with_zero_minors(rng, 5, 1)
    report = solve_grossone(system)
    assert report.finite_solution == solve_exact_oracle(system)


def test_from_rows_validation():
    with pytest.raises(ValueError):
        LinearSystem.from_rows([[1, 2]], [1])
    with pytest.raises(ValueError):
        LinearSystem.from_rows([[1, 2], [3, 4]], [1])
    with pytest.raises(ValueError):
        LinearSystem.from_rows([], [])
