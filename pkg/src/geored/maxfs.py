"""Integer hyperplane systems over R^k whose maximum point depth detects the
k-cliques of a graph; all arithmetic is exact.

The scaffold holds the nk hyperplanes x_i = v, so a point lies on at most k
of them, with equality exactly on the integer grid [n]^k.  For each plane
pair i < j and each ordered vertex pair (u, v) of an edge, the hyperplane
x_i + n x_j = u + n v contains a grid point exactly when (x_i, x_j) = (u, v)
(a divisibility argument), and the hyperplanes of one pair (i, j) are
parallel, so edge depth is at most C(k,2): total depth k + C(k,2) is reached
exactly at orderings of k-cliques.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphs import Graph, enumerate_solutions


@dataclass(frozen=True)
class LinearEquation:
    """sum(coeffs[i] * x[i]) = rhs with integer data."""

    coeffs: tuple[int, ...]
    rhs: int

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("all-zero coefficient vector")


@dataclass(frozen=True)
class LinearInequality:
    """sum(coeffs[i] * x[i]) <= rhs or >= rhs with integer data."""

    coeffs: tuple[int, ...]
    rhs: int
    sense: str

    def __post_init__(self):
        if not any(self.coeffs):
            raise ValueError("all-zero coefficient vector")
        if self.sense not in ("<=", ">="):
            raise ValueError(f"sense must be '<=' or '>=', got {self.sense!r}")


@dataclass(frozen=True)
class EquationSystem:
    """Labeled equations: ("scaffold", i, v) or ("edge", i, j, u, v); target
    is the depth k + C(k,2) that witnesses a k-clique."""

    equations: tuple[LinearEquation, ...]
    labels: tuple[tuple, ...]
    n: int
    k: int
    target: int


def scaffold_equation(i: int, v: int, k: int) -> LinearEquation:
    coeffs = tuple(1 if m == i else 0 for m in range(1, k + 1))
    return LinearEquation(coeffs, v)


def edge_equation(i: int, j: int, u: int, v: int, n: int, k: int) -> LinearEquation:
    """x_i + n x_j = u + n v, i.e. (x_i - u) + n (x_j - v) = 0."""
    coeffs = tuple(1 if m == i else n if m == j else 0 for m in range(1, k + 1))
    return LinearEquation(coeffs, u + n * v)


def scaffold_system(n: int, k: int) -> list[LinearEquation]:
    """The nk hyperplanes x_i = v, i in [k], v in [n]."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return [scaffold_equation(i, v, k) for i in range(1, k + 1) for v in range(1, n + 1)]


def edge_system(g: Graph, k: int) -> list[LinearEquation]:
    """For every plane pair i < j and both orders (u, v), (v, u) of each
    edge: x_i + n x_j = u + n v; 2|E| C(k,2) equations in total."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    out = []
    for a, b in sorted(g.edges):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            out.append(edge_equation(i, j, a, b, g.n, k))
            out.append(edge_equation(i, j, b, a, g.n, k))
    return out


def build_system(g: Graph, k: int) -> EquationSystem:
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    equations = []
    labels = []
    for i in range(1, k + 1):
        for v in range(1, g.n + 1):
            equations.append(scaffold_equation(i, v, k))
            labels.append(("scaffold", i, v))
    for a, b in sorted(g.edges):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            equations.append(edge_equation(i, j, a, b, g.n, k))
            labels.append(("edge", i, j, a, b))
            equations.append(edge_equation(i, j, b, a, g.n, k))
            labels.append(("edge", i, j, b, a))
    target = k + math.comb(k, 2)
    return EquationSystem(
        equations=tuple(equations), labels=tuple(labels), n=g.n, k=k, target=target
    )


def _equations_of(sys) -> list[LinearEquation]:
    if isinstance(sys, EquationSystem):
        return list(sys.equations)
    return list(sys)


def depth(x: Sequence, sys) -> int:
    """How many equations x satisfies, in exact rational arithmetic."""
    equations = _equations_of(sys)
    count = 0
    for eq in equations:
        if len(eq.coeffs) != len(x):
            raise ValueError(f"dimension mismatch: {len(eq.coeffs)} vs {len(x)}")
        value = sum(Fraction(c) * Fraction(xi) for c, xi in zip(eq.coeffs, x))
        if value == eq.rhs:
            count += 1
    return count


def solve_grid(sys: EquationSystem) -> tuple[int, list[tuple[int, ...]]]:
    """Maximum depth over the grid [n]^k and all grid maximizers, in
    lexicographic order."""
    points = list(itertools.product(range(1, sys.n + 1), repeat=sys.k))
    if not sys.equations:
        return 0, points
    a = np.array([eq.coeffs for eq in sys.equations], dtype=np.int64)
    b = np.array([eq.rhs for eq in sys.equations], dtype=np.int64)
    grid = np.array(points, dtype=np.int64)
    depths = (a @ grid.T == b[:, np.newaxis]).sum(axis=0)
    best = int(depths.max())
    return best, [points[idx] for idx in np.flatnonzero(depths == best)]


# -- exact maximization over all of R^k ------------------------------------
#
# Any point of maximum depth lies on the solution flat of a linearly
# independent subset of at most k equations, and the whole flat (hence its
# canonical particular solution, free variables pinned to 0) attains at
# least that depth.  Flats are enumerated level by level and deduplicated by
# the canonical integer row-reduced form of their defining system.


def _primitive_row(row: tuple[int, ...]) -> tuple[int, ...]:
    g = 0
    for value in row:
        g = math.gcd(g, value)
    if g > 1:
        row = tuple(value // g for value in row)
    lead = next((value for value in row[:-1] if value), 0)
    if lead < 0:
        row = tuple(-value for value in row)
    return row


def _eliminate(row: tuple[int, ...], col: int, pivot_row: tuple[int, ...]) -> tuple[int, ...]:
    f, p = row[col], pivot_row[col]
    return _primitive_row(tuple(p * a - f * b for a, b in zip(row, pivot_row)))


def _extend_rref(pivots, row, k):
    """Adjoin one equation to a canonical reduced system; None if the flat
    would be empty or unchanged."""
    for col, pivot_row in pivots:
        if row[col]:
            row = _eliminate(row, col, pivot_row)
    col = next((c for c in range(k) if row[c]), None)
    if col is None:
        return None  # dependent (0 = 0) or inconsistent (0 = c): no new flat
    row = _primitive_row(row)
    updated = []
    for c, pivot_row in pivots:
        if pivot_row[col]:
            pivot_row = _eliminate(pivot_row, col, row)
        updated.append((c, pivot_row))
    updated.append((col, row))
    updated.sort()
    return updated


def _particular(pivots, k) -> tuple[tuple[int, ...], int]:
    """Free variables pinned to 0; returned scaled as (numerators, denominator)."""
    coords = [Fraction(0)] * k
    for col, row in pivots:
        coords[col] = Fraction(row[-1], row[col])
    den = math.lcm(*(c.denominator for c in coords)) if coords else 1
    return tuple(int(c * den) for c in coords), den


def _candidate_points(equations: list[LinearEquation], k: int):
    """Scaled particular solutions of every intersection flat of at most k
    of the hyperplanes (the origin included, as the empty intersection)."""
    base = []
    seen_rows = set()
    for eq in equations:
        row = _primitive_row(tuple(eq.coeffs) + (eq.rhs,))
        if row not in seen_rows:
            seen_rows.add(row)
            base.append(row)
    points = {((0,) * k, 1): None}
    level = {(): []}
    for _ in range(k):
        nxt = {}
        for pivots in level.values():
            for row in base:
                extended = _extend_rref(pivots, row, k)
                if extended is None:
                    continue
                key = tuple(extended)
                if key not in nxt:
                    nxt[key] = extended
                    points[_particular(extended, k)] = None
        if not nxt:
            break
        level = nxt
    return list(points)


def _depths_at(equations: list[LinearEquation], candidates) -> list[int]:
    """Exact depth of each scaled candidate (nums, den): a . nums == rhs * den."""
    a_bound = max(max(abs(c) for c in eq.coeffs + (eq.rhs,)) for eq in equations)
    x_bound = max(max((abs(v) for v in nums + (den,)), default=0) for nums, den in candidates)
    k = len(equations[0].coeffs)
    if a_bound * x_bound * (k + 1) < 2**62:
        a = np.array([eq.coeffs for eq in equations], dtype=np.int64)
        b = np.array([eq.rhs for eq in equations], dtype=np.int64)
        nums = np.array([c[0] for c in candidates], dtype=np.int64)
        dens = np.array([c[1] for c in candidates], dtype=np.int64)
        return [int(d) for d in (a @ nums.T == np.outer(b, dens)).sum(axis=0)]
    return [  # unbounded Python integers for out-of-range data
        sum(
            sum(c * v for c, v in zip(eq.coeffs, nums)) == eq.rhs * den
            for eq in equations
        )
        for nums, den in candidates
    ]


def _ineq_counts(equations: list[LinearEquation], candidates) -> list[int]:
    """Satisfied-relation counts in the doubled system for each scaled
    candidate: (a . nums <= rhs * den) plus (a . nums >= rhs * den), exact."""
    a_bound = max(max(abs(c) for c in eq.coeffs + (eq.rhs,)) for eq in equations)
    x_bound = max(max((abs(v) for v in nums + (den,)), default=0) for nums, den in candidates)
    k = len(equations[0].coeffs)
    if a_bound * x_bound * (k + 1) < 2**62:
        a = np.array([eq.coeffs for eq in equations], dtype=np.int64)
        b = np.array([eq.rhs for eq in equations], dtype=np.int64)
        nums = np.array([c[0] for c in candidates], dtype=np.int64)
        dens = np.array([c[1] for c in candidates], dtype=np.int64)
        vals = a @ nums.T
        rhs = np.outer(b, dens)
        return [int(c) for c in (vals <= rhs).sum(axis=0) + (vals >= rhs).sum(axis=0)]
    doubled = equalities_to_inequalities(equations)
    return [
        count_satisfied(tuple(Fraction(v, den) for v in nums), doubled)
        for nums, den in candidates
    ]


def solve_exact(sys, k: int | None = None) -> tuple[int, tuple[Fraction, ...]]:
    """Maximum depth over all of R^k with one rational witness point."""
    equations = _equations_of(sys)
    if k is None:
        if isinstance(sys, EquationSystem):
            k = sys.k
        elif equations:
            k = len(equations[0].coeffs)
        else:
            raise ValueError("cannot infer dimension from an empty equation list")
    if not equations:
        return 0, tuple([Fraction(0)] * k)
    candidates = _candidate_points(equations, k)
    depths = _depths_at(equations, candidates)
    best = max(range(len(candidates)), key=lambda idx: depths[idx])
    nums, den = candidates[best]
    return depths[best], tuple(Fraction(v, den) for v in nums)


def equalities_to_inequalities(sys) -> list[LinearInequality]:
    """Each equation a.x = b becomes the pair a.x <= b, a.x >= b; a point
    then satisfies (#equations + its depth) of the doubled relations."""
    out = []
    for eq in _equations_of(sys):
        out.append(LinearInequality(eq.coeffs, eq.rhs, "<="))
        out.append(LinearInequality(eq.coeffs, eq.rhs, ">="))
    return out


def count_satisfied(x: Sequence, ineqs: list[LinearInequality]) -> int:
    """How many inequalities x satisfies, in exact rational arithmetic."""
    count = 0
    for ineq in ineqs:
        if len(ineq.coeffs) != len(x):
            raise ValueError(f"dimension mismatch: {len(ineq.coeffs)} vs {len(x)}")
        value = sum(Fraction(c) * Fraction(xi) for c, xi in zip(ineq.coeffs, x))
        if value <= ineq.rhs if ineq.sense == "<=" else value >= ineq.rhs:
            count += 1
    return count


def decide(
    g: Graph, k: int, l: int, relations: str = "equations"
) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Is there a point satisfying at least l of the system's relations?

    relations="equations" decides against the raw system; "inequalities"
    decides against the doubled system, scanning the exact solver's
    candidate points (complete for doubled systems, where the satisfied
    count is #equations plus the depth)."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    sys = build_system(g, k)
    if relations == "equations":
        best, witness = solve_exact(sys)
        return (best >= l, witness if best >= l else None)
    if relations != "inequalities":
        raise ValueError(f"relations must be 'equations' or 'inequalities', got {relations!r}")
    candidates = _candidate_points(list(sys.equations), k)
    counts = _ineq_counts(list(sys.equations), candidates)
    best = max(range(len(candidates)), key=lambda idx: counts[idx])
    nums, den = candidates[best]
    witness = tuple(Fraction(v, den) for v in nums)
    return (counts[best] >= l, witness if counts[best] >= l else None)


@dataclass(frozen=True)
class MaxfsReport:
    equal: bool
    max_depth_grid: int
    max_depth_exact: int
    target: int
    clique_exists: bool
    maximizers: tuple[tuple[int, ...], ...]
    cliques: tuple[tuple[int, ...], ...]
    witness_clique: tuple[int, ...] | None


def verify_against_oracle(g: Graph, k: int) -> MaxfsReport:
    """Check that grid and exact maxima agree, that the target depth
    k + C(k,2) is reached exactly when a k-clique exists, and that the grid
    maximizers at the target are exactly the ordered k-cliques."""
    sys = build_system(g, k)
    grid_max, maximizers = solve_grid(sys)
    exact_max, _ = solve_exact(sys)
    cliques = enumerate_solutions(g, k, "clique", ordered=True)
    at_target = grid_max == sys.target
    equal = (
        exact_max == grid_max
        and at_target == bool(cliques)
        and (not at_target or maximizers == cliques)
    )
    return MaxfsReport(
        equal=equal,
        max_depth_grid=grid_max,
        max_depth_exact=exact_max,
        target=sys.target,
        clique_exists=bool(cliques),
        maximizers=tuple(maximizers),
        cliques=tuple(cliques),
        witness_clique=cliques[0] if cliques else None,
    )
