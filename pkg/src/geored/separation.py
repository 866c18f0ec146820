"""Two point sets in R^{2k} separable by two hyperplanes exactly when the
(vertex-duplicated) graph has an independent set of size k.

The vertex set is duplicated first (n = 2 n0), so every index u in [n] has
an antipodal partner u' = u + n/2 on the n-point circles.  P holds n points
per plane, regularly spaced; Q starts as the origin alone.  Any hyperplane
separating part of P from the origin must cut, per plane, the n/2
consecutive spokes ending at some index u_i, so the separating pairs of
hyperplanes are classified by tuples in [n]^k (a class and its antipodal
complement encode the same vertex choice).  Constraint points added to Q sit
on a sphere that the boundary hyperplane of each class touches at exactly
one point per plane pair: placing the touching point for (u, v) into Q kills
precisely the classes whose (i, j) components are (u, v).
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .geometry import DEFAULT_TOL, Hyperplane, Vec, dot, plane_embed
from .graphs import Graph, duplicate_vertices, enumerate_solutions, wrap_index

# Floating slack for "lies on the boundary hyperplane" checks; the defining
# dot products are exact sums of unit-circle coordinates, so observed
# residuals are ~1e-15.
BOUNDARY_RESIDUAL = 1e-9


@dataclass(frozen=True)
class SeparationParams:
    n0: int  # original vertex count
    n: int   # duplicated vertex count, 2 * n0
    k: int

    @property
    def dim(self) -> int:
        return 2 * self.k


@dataclass(frozen=True)
class LabeledPoint:
    """label is ("scaffold", i, u) for P points, ("origin",) or
    ("constraint", i, j, u, v) with i < j for Q points."""

    point: Vec
    label: tuple


@dataclass(frozen=True)
class SeparationInstance:
    params: SeparationParams
    p_points: tuple[LabeledPoint, ...]
    q_points: tuple[LabeledPoint, ...]


def make_params(n0: int, k: int) -> SeparationParams:
    if n0 < 2:
        raise ValueError(f"need n0 >= 2, got {n0}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    return SeparationParams(n0=n0, n=2 * n0, k=k)


def antipodal(u: int, n: int) -> int:
    """The index opposite u on the n-point circle (n even): u + n/2."""
    if n % 2 != 0:
        raise ValueError(f"antipodal partner needs even n, got {n}")
    return wrap_index(u + n // 2, n)


def almost_antipodal(u: int, n: int) -> int:
    """One step past the antipode: u + n/2 + 1 (n even)."""
    if n % 2 != 0:
        raise ValueError(f"almost-antipodal partner needs even n, got {n}")
    return wrap_index(u + n // 2 + 1, n)


def circle_angle(n: int, u: int) -> float:
    return (u - 1) * 2.0 * math.pi / n


def scaffold_point(params: SeparationParams, i: int, u: int) -> Vec:
    a = circle_angle(params.n, u)
    return plane_embed(params.k, i, math.cos(a), math.sin(a))


def scaffold(g0: Graph, k: int) -> tuple[list[LabeledPoint], list[LabeledPoint]]:
    """The nk unit P points (n = 2 n0 per plane) and the one-point Q0 = {o}."""
    params = make_params(g0.n, k)
    p_points = [
        LabeledPoint(scaffold_point(params, i, u), ("scaffold", i, u))
        for i in range(1, k + 1)
        for u in range(1, params.n + 1)
    ]
    origin = LabeledPoint(tuple([0.0] * params.dim), ("origin",))
    return p_points, [origin]


def constraint_point(i: int, j: int, u: int, v: int, n: int, k: int) -> Vec:
    """Centroid of the four P points at u and its almost-antipode on plane i,
    and v and its almost-antipode on plane j; norm sqrt(1/2) sin(pi/n)."""
    if i == j:
        raise ValueError("plane indices must differ")
    params = SeparationParams(n0=n // 2, n=n, k=k)
    total = [0.0] * (2 * k)
    for plane, idx in ((i, u), (j, v)):
        for w in (idx, almost_antipodal(idx, n)):
            pt = scaffold_point(params, plane, w)
            total = [a + b for a, b in zip(total, pt)]
    return tuple(a / 4.0 for a in total)


def complement_tuple(t: tuple[int, ...], n: int) -> tuple[int, ...]:
    """The paired class: every component replaced by its antipodal partner."""
    return tuple(antipodal(u, n) for u in t)


def _defining_points(params: SeparationParams, t: tuple[int, ...]) -> list[Vec]:
    pts = []
    for i, u in enumerate(t, start=1):
        pts.append(scaffold_point(params, i, u))
        pts.append(scaffold_point(params, i, almost_antipodal(u, params.n)))
    return pts


def boundary_hyperplane(params: SeparationParams, t: tuple[int, ...]) -> Hyperplane:
    """The unique hyperplane through the 2k points p_{i, t_i}, p_{i, t_i-bar},
    written as normal . x = 1 (it never passes through the origin)."""
    if len(t) != params.k:
        raise ValueError(f"tuple length {len(t)} != k={params.k}")
    for u in t:
        if not 1 <= u <= params.n:
            raise ValueError(f"index {u} out of range [1, {params.n}]")
    pts = _defining_points(params, t)
    a = np.array(pts)
    normal = np.linalg.solve(a, np.ones(len(pts)))
    residual = np.max(np.abs(a @ normal - 1.0))
    if residual > BOUNDARY_RESIDUAL:
        raise RuntimeError(f"boundary hyperplane residual {residual} (internal bug)")
    return Hyperplane(tuple(normal), 1.0)


def arc_indices(params: SeparationParams, u: int) -> list[int]:
    """The n/2 consecutive circle indices from the almost-antipode of u up to
    u itself: the plane-i members of the P side selected by component u."""
    half = params.n // 2
    return [wrap_index(u + half + m, params.n) for m in range(1, half + 1)]


def tangency_check(params: SeparationParams, t: tuple[int, ...], i: int, j: int) -> bool:
    """The constraint point for (t_i, t_j) lies on the boundary hyperplane of
    t (within 1e-9) and every other constraint point of the (i, j) pair lies
    strictly on the origin side."""
    if not 1 <= i < j <= params.k:
        raise ValueError(f"need 1 <= i < j <= k, got ({i}, {j})")
    h = boundary_hyperplane(params, t)
    n, k = params.n, params.k
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            value = dot(h.normal, constraint_point(i, j, u, v, n, k))
            if (u, v) == (t[i - 1], t[j - 1]):
                if abs(value - 1.0) > BOUNDARY_RESIDUAL:
                    return False
            elif value >= 1.0:
                return False
    return True


def build_instance(g0: Graph, k: int) -> SeparationInstance:
    """Duplicate the graph, then add to Q the touching points for every
    repeated-vertex pair (u, u) with i < j and for both orders of every
    duplicated edge; |Q| = 1 + n C(k,2) + 2|E| C(k,2)."""
    params = make_params(g0.n, k)
    g = duplicate_vertices(g0)
    p_points, q_points = scaffold(g0, k)
    n = params.n

    def q_point(i: int, j: int, u: int, v: int) -> LabeledPoint:
        return LabeledPoint(constraint_point(i, j, u, v, n, k), ("constraint", i, j, u, v))

    for u in range(1, n + 1):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            q_points.append(q_point(i, j, u, u))

    for a, b in sorted(g.edges):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            # q for ordered (j, i) and vertices (a, b) is the same point as
            # (i, j) with vertices (b, a), so both orders appear with i < j
            q_points.append(q_point(i, j, a, b))
            q_points.append(q_point(i, j, b, a))

    return SeparationInstance(
        params=params, p_points=tuple(p_points), q_points=tuple(q_points)
    )


class _Prepared:
    """Instance data unpacked into arrays for the per-class checks."""

    def __init__(self, inst: SeparationInstance):
        self.params = inst.params
        self.q_matrix = np.array([lp.point for lp in inst.q_points])
        self.p_by_index = {
            (lp.label[1], lp.label[2]): np.array(lp.point) for lp in inst.p_points
        }

    def side_margins(self, t: tuple[int, ...], tol: float):
        """For one class tuple: (separates, margin_p, margin_q) for the
        boundary hyperplane of t translated to offset 1 - delta."""
        params = self.params
        h = boundary_hyperplane(params, t)
        normal = np.array(h.normal)
        q_values = self.q_matrix @ normal
        q_max = float(q_values.max())

        p_min = math.inf
        for i, u in enumerate(t, start=1):
            for w in arc_indices(params, u):
                value = float(self.p_by_index[(i, w)] @ normal)
                # the selected arc lies on or beyond the boundary hyperplane
                assert value >= 1.0 - BOUNDARY_RESIDUAL, (t, i, w, value)
                p_min = min(p_min, value)

        if q_max >= 1.0 - tol:  # some Q point on or beyond the boundary: no strict translate
            return False, 0.0, 0.0
        delta = (1.0 - q_max) / 2.0
        return True, p_min - (1.0 - delta), (1.0 - delta) - q_max


def class_margins(
    inst: SeparationInstance, t: tuple[int, ...], tol: float = DEFAULT_TOL
) -> tuple[bool, float, float]:
    """Whether class t separates, with the worst P-side and Q-side margins
    over the two translated hyperplanes (t's and its complement's)."""
    prep = _Prepared(inst)
    return _class_margins_prepared(prep, t, tol)


def _class_margins_prepared(prep: _Prepared, t: tuple[int, ...], tol: float):
    ok_a, p_a, q_a = prep.side_margins(t, tol)
    ok_b, p_b, q_b = prep.side_margins(complement_tuple(t, prep.params.n), tol)
    return ok_a and ok_b, min(p_a, p_b), min(q_a, q_b)


def class_separates(inst: SeparationInstance, t: tuple[int, ...], tol: float = DEFAULT_TOL) -> bool:
    """True iff every Q point is strictly inside both boundary hyperplanes
    (t's and its complement's), so that translates toward the origin realize
    a strict two-hyperplane separation of P from Q."""
    return class_margins(inst, t, tol)[0]


def kill_predicate(inst: SeparationInstance, t: tuple[int, ...]) -> bool:
    """Combinatorial counterpart of class_separates, from the constraint
    labels alone: the class dies iff some constraint point (i, j, u, v) has
    (t_i, t_j) = (u, v) or the complement tuple does."""
    n = inst.params.n
    tc = complement_tuple(t, n)
    for lp in inst.q_points:
        if lp.label[0] != "constraint":
            continue
        _, i, j, u, v = lp.label
        if (t[i - 1], t[j - 1]) == (u, v) or (tc[i - 1], tc[j - 1]) == (u, v):
            return True
    return False


def _tuple_space(params: SeparationParams):
    return itertools.product(range(1, params.n + 1), repeat=params.k)


def _solve_chunk(args):
    inst, chunk, tol = args
    prep = _Prepared(inst)
    return [t for t in chunk if _class_margins_prepared(prep, t, tol)[0]]


def solve(inst: SeparationInstance, tol: float = DEFAULT_TOL, jobs: int = 1) -> list[tuple[int, ...]]:
    """All separating class tuples in [n]^k, sorted lexicographically; they
    always come in complement pairs."""
    tuples = list(_tuple_space(inst.params))
    if jobs <= 1 or len(tuples) < 2 * jobs:
        return _solve_chunk((inst, tuples, tol))
    chunks = [tuples[i::jobs] for i in range(jobs)]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        parts = pool.map(_solve_chunk, [(inst, c, tol) for c in chunks])
    return sorted(t for part in parts for t in part)


@dataclass(frozen=True)
class SeparationReport:
    equal: bool
    classes: tuple[tuple[int, ...], ...]
    oracle_tuples: tuple[tuple[int, ...], ...]
    solver_only: tuple[tuple[int, ...], ...]
    oracle_only: tuple[tuple[int, ...], ...]
    margins: dict  # class -> (p-side margin, q-side margin), both > 0
    original_projection: tuple[tuple[int, ...], ...]  # classes mod n0


def verify_against_oracle(g0: Graph, k: int, tol: float = DEFAULT_TOL) -> SeparationReport:
    """Compare separating classes with the ordered independent k-tuples of
    the duplicated graph (the two sets must match exactly; note the
    duplicated graph may have independent sets mixing the two copies of one
    original vertex, so existence can differ from the original graph's)."""
    inst = build_instance(g0, k)
    prep = _Prepared(inst)
    classes = []
    margins = {}
    for t in _tuple_space(inst.params):
        ok, p_margin, q_margin = _class_margins_prepared(prep, t, tol)
        if ok:
            classes.append(t)
            margins[t] = (p_margin, q_margin)
    oracle = enumerate_solutions(duplicate_vertices(g0), k, "independent-set", ordered=True)
    solver_only = sorted(set(classes) - set(oracle))
    oracle_only = sorted(set(oracle) - set(classes))
    projection = sorted({tuple(wrap_index(u, g0.n) for u in t) for t in classes})
    return SeparationReport(
        equal=classes == oracle,
        classes=tuple(classes),
        oracle_tuples=tuple(oracle),
        solver_only=tuple(solver_only),
        oracle_only=tuple(oracle_only),
        margins=margins,
        original_projection=tuple(projection),
    )
