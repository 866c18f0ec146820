import itertools
import math
import random
from fractions import Fraction

import pytest

from geored.maxfs import (
    EquationSystem,
    LinearEquation,
    LinearInequality,
    build_system,
    count_satisfied,
    decide,
    depth,
    edge_equation,
    edge_system,
    equalities_to_inequalities,
    scaffold_system,
    solve_exact,
    solve_grid,
    verify_against_oracle,
)

from _util import all_graphs, complete_graph, graph, path_graph


def test_scaffold_system():
    eqs = scaffold_system(3, 2)
    assert len(eqs) == 6
    assert eqs[1] == LinearEquation((1, 0), 2)  # x_1 = 2
    assert len(set(eqs)) == len(eqs)


def test_edge_system_triangle():
    eqs = edge_system(complete_graph(3), 2)
    assert len(eqs) == 6  # 2|E| per plane pair, one pair for k=2
    # all equations of the (1, 2) family share the coefficient vector (1, n)
    assert {eq.coeffs for eq in eqs} == {(1, 3)}
    assert len(set(eqs)) == len(eqs)


def test_edge_hyperplane_grid_membership():
    # (u, v) lies on its own hyperplane; shifting one coordinate leaves it
    eq = edge_equation(1, 2, 2, 3, 4, 2)
    assert depth((2, 3), [eq]) == 1
    assert depth((3, 3), [eq]) == 0


def test_edge_membership_exhaustive():
    # a grid point lies on the (u, v) edge hyperplane iff its (i, j)
    # components equal (u, v) exactly
    for n in (2, 3, 4, 5, 6):
        for u, v in itertools.product(range(1, n + 1), repeat=2):
            eq = edge_equation(1, 2, u, v, n, 2)
            for x in itertools.product(range(1, n + 1), repeat=2):
                on = sum(c * xi for c, xi in zip(eq.coeffs, x)) == eq.rhs
                assert on == (x == (u, v))


def test_build_system():
    sys = build_system(complete_graph(3), 2)
    assert len(sys.equations) == 12
    assert len(sys.labels) == 12
    assert sys.target == 3
    kinds = {lab[0] for lab in sys.labels}
    assert kinds == {"scaffold", "edge"}
    assert sum(lab[0] == "scaffold" for lab in sys.labels) == 6
    empty = build_system(graph(3), 2)
    assert len(empty.equations) == 6


def test_rejects_all_zero_rows():
    with pytest.raises(ValueError):
        LinearEquation((0, 0), 1)
    with pytest.raises(ValueError):
        LinearInequality((0, 0), 1, "<=")
    with pytest.raises(ValueError):
        LinearInequality((1, 0), 1, "<")


def test_depth_examples():
    h0 = scaffold_system(3, 2)
    assert depth((2, 2), h0) == 2
    assert depth((Fraction(1, 2), 2), h0) == 1
    assert depth((-1, 3), [edge_equation(1, 2, 2, 2, 3, 2)]) == 1  # (-1-2)+3(3-2)=0


def test_depth_dimension_mismatch():
    with pytest.raises(ValueError):
        depth((1, 2, 3), scaffold_system(3, 2))


def test_scaffold_depth_full_quantification():
    # depth k exactly on the grid, at most k-1 off it
    for n, k in ((3, 2), (5, 3), (4, 3)):
        sys = EquationSystem(
            equations=tuple(scaffold_system(n, k)),
            labels=(),
            n=n,
            k=k,
            target=k,
        )
        for x in itertools.product(range(1, n + 1), repeat=k):
            assert depth(x, sys) == k
        rng = random.Random(n * 10 + k)
        for _ in range(1000 // 3):
            x = [Fraction(rng.randint(-4 * n, 4 * n), rng.choice([3, 7, 11])) for _ in range(k)]
            if all(xi.denominator == 1 and 1 <= xi <= n for xi in x):
                continue
            assert depth(x, sys) <= k - 1


def test_edge_depth_bound():
    # the hyperplanes of one plane pair are parallel: at most one holds
    rng = random.Random(77)
    for g in (complete_graph(4), path_graph(4)):
        for k in (2, 3):
            eqs = edge_system(g, k)
            bound = math.comb(k, 2)
            for _ in range(100):
                x = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(k))
                assert depth(x, eqs) <= bound
            _, witness = solve_exact(build_system(g, k))
            assert depth(witness, eqs) <= bound


def test_solve_grid_triangle():
    best, maximizers = solve_grid(build_system(complete_graph(3), 2))
    assert best == 3  # k + C(k,2)
    assert maximizers == [(1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2)]


def test_solve_grid_empty_graph():
    best, maximizers = solve_grid(build_system(graph(3), 2))
    assert best == 2  # scaffold depth only
    assert len(maximizers) == 9  # every grid point


def test_solve_grid_bound():
    for g in all_graphs(4):
        for k in (2, 3):
            best, _ = solve_grid(build_system(g, k))
            assert best <= k + math.comb(k, 2)


def test_solve_exact_simple_lists():
    best, witness = solve_exact([LinearEquation((1, 0), 5)], k=2)
    assert best == 1
    assert witness[0] == 5
    # two parallel distinct hyperplanes never meet
    best, _ = solve_exact(
        [LinearEquation((1, 2), 0), LinearEquation((1, 2), 7)], k=2
    )
    assert best == 1


def test_solve_exact_matches_grid_on_graph_systems():
    for g in all_graphs(4):
        sys = build_system(g, 2)
        grid_best, _ = solve_grid(sys)
        exact_best, witness = solve_exact(sys)
        assert exact_best == grid_best
        assert depth(witness, sys) == exact_best


def test_solve_exact_beats_grid_off_grid():
    # an intersection outside the grid is found by the exact solver
    eqs = [
        LinearEquation((1, 0), -3),
        LinearEquation((0, 1), -4),
        LinearEquation((1, 1), -7),
    ]
    best, witness = solve_exact(eqs, k=2)
    assert best == 3
    assert witness == (Fraction(-3), Fraction(-4))


def test_doubling_counts():
    sys = build_system(complete_graph(3), 2)
    doubled = equalities_to_inequalities(sys)
    assert len(doubled) == 24
    assert equalities_to_inequalities([]) == []
    x = (1, 2)  # on two scaffold hyperplanes and one edge hyperplane
    assert count_satisfied(x, doubled) == len(sys.equations) + depth(x, sys)


def test_doubling_identity_random_points():
    rng = random.Random(13)
    for g in (complete_graph(3), path_graph(4), graph(4, (1, 3))):
        sys = build_system(g, 2)
        doubled = equalities_to_inequalities(sys)
        for _ in range(100):
            x = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(2))
            assert count_satisfied(x, doubled) == len(sys.equations) + depth(x, sys)


def test_count_satisfied_point_on_and_off():
    ineqs = equalities_to_inequalities([LinearEquation((1, 0), 2)])
    assert count_satisfied((2, 9), ineqs) == 2  # on: both directions hold
    assert count_satisfied((3, 9), ineqs) == 1  # off: exactly one holds
    with pytest.raises(ValueError):
        count_satisfied((1,), ineqs)


def test_decide_equations():
    ok, witness = decide(complete_graph(3), 2, 3, "equations")
    assert ok
    assert witness is not None
    assert len(set(witness)) == 2  # distinct components name the clique
    ok, witness = decide(graph(3), 2, 3, "equations")
    assert not ok and witness is None


def test_decide_inequalities():
    k3 = complete_graph(3)
    m = 12
    ok, witness = decide(k3, 2, m + 3, "inequalities")
    assert ok
    assert count_satisfied(witness, equalities_to_inequalities(build_system(k3, 2))) >= m + 3
    ok, _ = decide(graph(3), 2, 6 + 3, "inequalities")
    assert not ok
    # l = #equations is always reachable: any point on one hyperplane
    ok, _ = decide(graph(3), 2, 6, "inequalities")
    assert ok


def test_decide_rejects_bad_arguments():
    with pytest.raises(ValueError):
        decide(complete_graph(3), 2, -1)
    with pytest.raises(ValueError):
        decide(complete_graph(3), 2, 1, "strict")


def test_verify_k4():
    report = verify_against_oracle(complete_graph(4), 3)
    assert report.equal
    assert report.max_depth_grid == 6
    assert report.max_depth_exact == 6
    assert len(report.maximizers) == 24
    assert report.clique_exists
    assert report.witness_clique == (1, 2, 3)


def test_verify_no_clique():
    report = verify_against_oracle(graph(4, (1, 2)), 3)
    assert report.equal
    assert not report.clique_exists
    assert report.max_depth_grid < report.target
    assert report.witness_clique is None
