from __future__ import annotations

import math

import pytest

from hfg.budget import DEFAULT_BUDGET
from hfg.errors import BudgetExceededError, DomainError
from hfg.fatgrid import abstract_grid, expand_pattern
from hfg.invariants import generator_patterns
from hfg.polycore import PLANE, Polynomial, ideal_equal, ideal_power, variables
from hfg.projective import Point, point_ideal
from hfg.verify import (
    check_grid_end_to_end,
    check_join_symbolic,
    check_lemma_irrelevant,
    check_point_power_product,
    exact_rank,
    hilbert_function_oracle,
    vanishing_order,
)

X0, X1, X2 = variables(PLANE)


def test_vanishing_order_basics():
    assert vanishing_order(X1 * X2, Point((1, 0, 0))) == 2
    assert vanishing_order(X0 + X1 + X2, Point((1, 1, 1))) == 0
    assert vanishing_order(X0 - X1, Point((1, 1, 1))) == 1
    assert vanishing_order(Polynomial.zero(PLANE), Point((1, 1, 1))) == math.inf


def test_vanishing_order_rejects_inhomogeneous_input():
    with pytest.raises(DomainError):
        vanishing_order(X0 + X1 * X2, Point((1, 1, 1)))


def test_vanishing_order_is_additive():
    p = Point((1, 2, 3))
    f = (2 * X0 - X1) ** 2 * (3 * X0 - X2)
    g = X1 - 2 * X0
    assert vanishing_order(f, p) == 3
    assert vanishing_order(g, p) == 1
    assert vanishing_order(f * g, p) == 4


def test_vanishing_order_at_points_with_zero_coordinates():
    # Dehomogenization must pick a chart where the point is visible.
    assert vanishing_order(X0 ** 3, Point((0, 1, 2))) == 3
    assert vanishing_order((X1 - 2 * X0) ** 2, Point((0, 0, 1))) == 2


def test_exact_rank():
    assert exact_rank([[1, 0], [0, 1]]) == 2
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2, 3], [4, 5, 6]]) == 2
    assert exact_rank([]) == 0
    with pytest.raises(BudgetExceededError):
        exact_rank([[0] * 3000])


def test_hilbert_oracle_single_point():
    simple = abstract_grid((1,), (1,))
    assert hilbert_function_oracle(simple, 0) == 0
    assert hilbert_function_oracle(simple, 1) == 2
    double = abstract_grid((2,), (1,))
    assert hilbert_function_oracle(double, 1) == 0
    assert hilbert_function_oracle(double, 2) == 3


def test_hilbert_oracle_example_initial_degrees(example_grid, example_budget):
    assert hilbert_function_oracle(example_grid, 15, example_budget) == 0
    assert hilbert_function_oracle(example_grid, 16, example_budget) == 2


def test_point_power_product_off_the_coordinate_lines():
    report = check_point_power_product(Point((1, 2, 3)), Point((2, 1, 1)), 2, 2)
    assert report.passed
    assert any("m+n-1" in inst.label for inst in report.instances)


def test_point_power_product_case_b_pure_powers():
    report = check_point_power_product(Point((1, 0, 1)), Point((1, 1, 0)), 2, 3)
    assert report.passed
    labels = " | ".join(inst.label for inst in report.instances)
    assert "x_1^2" in labels and "x_2^3" in labels
    assert "universal containment" in labels


def test_point_power_product_case_a_coordinate_vertex():
    report = check_point_power_product(Point((1, 2, 3)), Point((1, 0, 0)), 1, 3)
    assert report.passed
    # m > 1 falls outside the stated scope and must carry a visible flag.
    flagged = check_point_power_product(Point((1, 2, 3)), Point((1, 0, 0)), 2, 2)
    assert flagged.passed
    assert any(inst.flag for inst in flagged.instances)


def test_point_power_product_rejects_undefined_product():
    with pytest.raises(DomainError):
        check_point_power_product(Point((1, 0, 0)), Point((0, 1, 0)), 1, 1)
    with pytest.raises(DomainError):
        check_point_power_product(Point((1, 2, 3)), Point((2, 1, 1)), 0, 1)


def test_lemma_irrelevant_off_coordinate_lines():
    report = check_lemma_irrelevant(Point((1, 2, 3)), 3)
    assert report.passed


def test_lemma_irrelevant_one_zero_coordinate():
    report = check_lemma_irrelevant(Point((0, 1, 2)), 2)
    assert report.passed
    labels = " | ".join(inst.label for inst in report.instances)
    assert "(x_0)" in labels
    # Containment of the irrelevant power is strict for t > 1.
    assert any("strict" in inst.label for inst in report.instances)


def test_lemma_irrelevant_two_zero_coordinates():
    report = check_lemma_irrelevant(Point((0, 0, 1)), 2)
    assert report.passed


def test_join_symbolic_power_examples():
    for point, t in [
        (Point((1, 1, 1)), 1),
        (Point((1, 1, 1)), 2),
        (Point((1, 2, 3)), 3),
    ]:
        report = check_join_symbolic(point, t)
        assert report.passed


def test_grid_end_to_end_small_cases():
    for m, n in [((1,), (1,)), ((1, 1), (1, 1)), ((1, 2), (1, 2))]:
        report = check_grid_end_to_end(abstract_grid(m, n))
        assert report.passed, report.failures()


def test_grid_end_to_end_confirms_alpha():
    report = check_grid_end_to_end(abstract_grid((1, 2), (1, 2)))
    inst = [i for i in report.instances if "initial degree" in i.label]
    assert len(inst) == 1
    assert inst[0].passed


def test_pattern_vanishing_orders_meet_multiplicities(example_grid):
    g = example_grid
    patterns = generator_patterns(g)
    for pat in (patterns[0], patterns[3], patterns[-1]):
        f = expand_pattern(g, pat)
        for i in range(g.shape[0]):
            for j in range(g.shape[1]):
                assert vanishing_order(f, g.grid_points[i][j]) >= g.mult[i][j]


def test_point_power_product_matches_direct_elimination():
    p, q = Point((1, 2, 3)), Point((2, 1, 1))
    report = check_point_power_product(p, q, 1, 2)
    assert report.passed
    from hfg.polycore import hadamard_ideals
    from hfg.projective import hadamard_point

    product = hadamard_ideals(
        ideal_power(point_ideal(p), 1), ideal_power(point_ideal(q), 2)
    )
    target = ideal_power(point_ideal(hadamard_point(p, q)), 2)
    assert ideal_equal(product, target)
