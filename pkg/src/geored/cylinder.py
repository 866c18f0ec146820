"""Equal-radius balls in R^{2k} whose common stabbing lines encode the
independent sets of a graph.

Per coordinate plane, 2n scaffold balls sit on the unit circle; a line
through the origin can pierce all of them only if its projection on each
plane lands on one of 2n wedge apices, all of norm 1/sqrt(k).  Since the
direction is unit length, each projection must be exactly an apex, which
pins the line to one of n^k * 2^(k-1) candidates indexed by apex tuples.
Constraint balls are then placed on a direction orthogonal to exactly one
projected candidate line per plane pair, close enough to the origin that
every other candidate still pierces them: a four-ball set removes precisely
the candidate classes whose (i, j) components name a given vertex pair.
"""

from __future__ import annotations

import itertools
import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from .geometry import DEFAULT_TOL, Ball, OriginLine, Vec, antipode, plane_embed
from .graphs import Graph, enumerate_solutions, wrap_index


@dataclass(frozen=True)
class CylinderParams:
    n: int
    k: int
    r: float    # shared ball radius, sqrt(1 - (1 - cos(pi/n)) / (2k))
    lam: float  # apex circle radius, 1/sqrt(k)
    mu: float   # unit normalization of constraint directions

    @property
    def dim(self) -> int:
        return 2 * self.k


@dataclass(frozen=True)
class LabeledBall:
    """label is ("scaffold", i, u) with u in [2n], or
    ("constraint", i, j, u, v, sign) with u in [n], v in [2n], sign '+'/'-'."""

    ball: Ball
    label: tuple


@dataclass(frozen=True)
class CylinderInstance:
    params: CylinderParams
    balls: tuple[LabeledBall, ...]


def make_params(n: int, k: int) -> CylinderParams:
    """The radius is chosen so that the apex circles have radius 1/sqrt(k),
    forcing unit stabbing directions to split their norm evenly over the k
    planes.  n >= 4 is required: the alignment bound for constraint balls
    fails below that."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    r = math.sqrt(1.0 - (1.0 - math.cos(math.pi / n)) / (2 * k))
    lam = 1.0 / math.sqrt(k)
    mu = 1.0 / math.sqrt(9.0 * n**2 + 36.0 * n**4 + 2.0)
    return CylinderParams(n=n, k=k, r=r, lam=lam, mu=mu)


def scaffold_angle(n: int, u: int) -> float:
    """Direction angle of scaffold center u in [2n]: (u-1) * pi/n."""
    return (u - 1) * math.pi / n


def candidate_angle(n: int, u: int) -> float:
    """Direction angle of apex u in [2n] on a plane.

    For even n the feasible wedge apices sit halfway between adjacent
    scaffold centers.  For odd n those halfway directions are perpendicular
    to one of the 2n centers and cannot pierce its ball; the actual wedge
    apices sit on the center directions themselves (rotated by pi/(2n)).
    Apex u+n is always antipodal to apex u.
    """
    if n % 2 == 0:
        return (2 * u - 1) * math.pi / (2 * n)
    return (u - 1) * math.pi / n


def scaffold_balls(p: CylinderParams) -> list[LabeledBall]:
    """The 2nk scaffold balls; ball (i, u+n) is the antipode of (i, u)."""
    out = []
    for i in range(1, p.k + 1):
        for u in range(1, 2 * p.n + 1):
            a = scaffold_angle(p.n, u)
            center = plane_embed(p.k, i, math.cos(a), math.sin(a))
            out.append(LabeledBall(Ball(center, p.r), ("scaffold", i, u)))
    return out


def apex_set(p: CylinderParams, i: int) -> list[Vec]:
    """The 2n wedge apices on plane i, all of norm lam = 1/sqrt(k)."""
    if not 1 <= i <= p.k:
        raise ValueError(f"plane index {i} out of range for k={p.k}")
    out = []
    for u in range(1, 2 * p.n + 1):
        a = candidate_angle(p.n, u)
        out.append(plane_embed(p.k, i, p.lam * math.cos(a), p.lam * math.sin(a)))
    return out


def line_from_tuple(p: CylinderParams, t: tuple[int, ...]) -> OriginLine:
    """The candidate line whose plane-i projection is apex t[i-1]."""
    if len(t) != p.k:
        raise ValueError(f"tuple length {len(t)} != k={p.k}")
    coords = []
    scale = 1.0 / math.sqrt(p.k)
    for u in t:
        if not 1 <= u <= 2 * p.n:
            raise ValueError(f"apex index {u} out of range [1, {2 * p.n}]")
        a = candidate_angle(p.n, u)
        coords += [scale * math.cos(a), scale * math.sin(a)]
    return OriginLine(tuple(coords))


def enumerate_candidate_lines(p: CylinderParams) -> list[tuple[int, ...]]:
    """One canonical tuple per candidate line that can stab the scaffold:
    u_1 in [n] (fixing a representative of each +-direction pair), the rest
    in [2n]; exactly n^k * 2^(k-1) tuples."""
    first = range(1, p.n + 1)
    rest = range(1, 2 * p.n + 1)
    return [
        (u1,) + tail
        for u1 in first
        for tail in itertools.product(rest, repeat=p.k - 1)
    ]


def line_class(t: tuple[int, ...], n: int) -> tuple[int, ...]:
    """The equivalence class of a candidate tuple: components reduced mod n."""
    return tuple(wrap_index(u, n) for u in t)


def constraint_direction(p: CylinderParams, i: int, j: int, u: int, v: int) -> Vec:
    """Unit vector supported on planes i and j, orthogonal to the projected
    candidate line with components (u, v) there but misaligned with every
    other candidate (see constraint_alignment)."""
    if i == j:
        raise ValueError("plane indices must differ")
    for idx in (i, j):
        if not 1 <= idx <= p.k:
            raise ValueError(f"plane index {idx} out of range for k={p.k}")
    for w in (u, v):
        if not 1 <= w <= 2 * p.n:
            raise ValueError(f"apex index {w} out of range [1, {2 * p.n}]")
    n, mu = p.n, p.mu
    th_i = candidate_angle(n, u)
    th_j = candidate_angle(n, v)
    coords = [0.0] * p.dim
    coords[2 * i - 2] = mu * (math.cos(th_i) - 3 * n * math.sin(th_i))
    coords[2 * i - 1] = mu * (math.sin(th_i) + 3 * n * math.cos(th_i))
    coords[2 * j - 2] = mu * (-math.cos(th_j) - 6 * n**2 * math.sin(th_j))
    coords[2 * j - 1] = mu * (-math.sin(th_j) + 6 * n**2 * math.cos(th_j))
    return tuple(coords)


def constraint_alignment(p: CylinderParams, u_i: int, u_j: int) -> float:
    """Scaled alignment between candidate components (u_i, u_j) and the
    constraint direction built for components (1, 1): the candidate's dot
    product with that direction equals mu/sqrt(k) times this value.

    It is zero exactly for (1, 1) and its antipode (n+1, n+1) (those two
    pairs raise ValueError); for every other pair its magnitude exceeds 1,
    which is what lets a constraint ball sit close enough to the origin to
    be pierced by all non-excluded candidates.  Only the index differences
    u_i - 1 and u_j - 1 enter, so the value is the same for a constraint
    direction built at any (u, v) with the candidate shifted accordingly.
    """
    n = p.n
    if (u_i, u_j) in ((1, 1), (n + 1, n + 1)):
        raise ValueError(f"excluded pair {(u_i, u_j)} is orthogonal by construction")
    d_i = (u_i - 1) * math.pi / n
    d_j = (u_j - 1) * math.pi / n
    return (
        math.cos(d_i) + 3 * n * math.sin(d_i)
        - math.cos(d_j) + 6 * n**2 * math.sin(d_j)
    )


def _center_norm_bounds(p: CylinderParams) -> tuple[float, float]:
    return p.r, math.sqrt(p.k / (p.k - p.mu**2)) * p.r


def constraint_ball(p: CylinderParams, i: int, j: int, u: int, v: int) -> Ball:
    """Ball of radius r centered on the constraint direction for (i, j, u, v),
    at the midpoint of the admissible norm window (r, sqrt(k/(k-mu^2)) r):
    missed by candidates with components (u, v) on (i, j), pierced by all
    others."""
    lo, hi = _center_norm_bounds(p)
    rho = (lo + hi) / 2.0
    direction = constraint_direction(p, i, j, u, v)
    return Ball(tuple(rho * x for x in direction), p.r)


def build_instance(g: Graph, k: int) -> CylinderInstance:
    """The full ball set: scaffold, then one four-ball set per vertex and
    plane pair i<j (killing repeated components), then one four-ball set per
    edge and ordered plane pair (killing adjacent components); total
    2nk + 4 C(k,2) (n + 2|E|) balls."""
    p = make_params(g.n, k)
    n = p.n
    balls = scaffold_balls(p)

    def four_ball_set(i: int, j: int, u: int, v: int) -> list[LabeledBall]:
        # the set {+-B, +-B'} where B excludes components (u, v) and B'
        # excludes (u, v+n): together they kill the whole class mod n
        out = []
        for vv in (v, v + n):
            base = constraint_ball(p, i, j, u, vv)
            out.append(LabeledBall(base, ("constraint", i, j, u, vv, "+")))
            out.append(LabeledBall(antipode(base), ("constraint", i, j, u, vv, "-")))
        return out

    for u in range(1, n + 1):
        for i, j in itertools.combinations(range(1, k + 1), 2):
            balls += four_ball_set(i, j, u, u)

    for a, b in sorted(g.edges):
        for i, j in itertools.permutations(range(1, k + 1), 2):
            balls += four_ball_set(i, j, a, b)

    return CylinderInstance(params=p, balls=tuple(balls))


def _stab_survivors(
    inst: CylinderInstance, tuples: list[tuple[int, ...]], tol: float
) -> list[tuple[int, ...]]:
    """Candidate tuples whose lines pierce every ball of the instance."""
    centers = np.array([lb.ball.center for lb in inst.balls])
    radii = np.array([lb.ball.radius for lb in inst.balls])
    rhs = np.einsum("ij,ij->i", centers, centers) - radii**2 - tol

    n, k = inst.params.n, inst.params.k
    angles = np.array([[candidate_angle(n, u) for u in t] for t in tuples])
    dirs = np.empty((len(tuples), 2 * k))
    dirs[:, 0::2] = np.cos(angles) / math.sqrt(k)
    dirs[:, 1::2] = np.sin(angles) / math.sqrt(k)

    proj = dirs @ centers.T
    ok = (proj * proj >= rhs[np.newaxis, :]).all(axis=1)
    return [t for t, good in zip(tuples, ok) if good]


def _survivor_chunk(args):
    inst, chunk, tol = args
    return _stab_survivors(inst, chunk, tol)


def _surviving_lines(
    inst: CylinderInstance, tol: float, jobs: int = 1
) -> list[tuple[int, ...]]:
    tuples = enumerate_candidate_lines(inst.params)
    if jobs <= 1 or len(tuples) < 2 * jobs:
        return _stab_survivors(inst, tuples, tol)
    chunks = [tuples[i::jobs] for i in range(jobs)]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        parts = pool.map(_survivor_chunk, [(inst, c, tol) for c in chunks])
    return sorted(t for part in parts for t in part)


def solve(inst: CylinderInstance, tol: float = DEFAULT_TOL, jobs: int = 1) -> list[tuple[int, ...]]:
    """The classes (tuples in [n]^k) with a candidate line stabbing every
    ball of the instance, sorted lexicographically."""
    survivors = _surviving_lines(inst, tol, jobs)
    return sorted({line_class(t, inst.params.n) for t in survivors})


@dataclass(frozen=True)
class CylinderReport:
    equal: bool
    classes: tuple[tuple[int, ...], ...]
    oracle_tuples: tuple[tuple[int, ...], ...]
    solver_only: tuple[tuple[int, ...], ...]
    oracle_only: tuple[tuple[int, ...], ...]
    witnesses: dict  # class -> one stabbing candidate tuple


def verify_against_oracle(g: Graph, k: int, tol: float = DEFAULT_TOL) -> CylinderReport:
    """Compare the solver's surviving classes with the ordered independent
    k-tuples of the graph; they must match exactly."""
    inst = build_instance(g, k)
    survivors = _surviving_lines(inst, tol)
    witnesses: dict = {}
    for t in survivors:
        witnesses.setdefault(line_class(t, g.n), t)
    classes = sorted(witnesses)
    oracle = enumerate_solutions(g, k, "independent-set", ordered=True)
    solver_only = sorted(set(classes) - set(oracle))
    oracle_only = sorted(set(oracle) - set(classes))
    return CylinderReport(
        equal=classes == oracle,
        classes=tuple(classes),
        oracle_tuples=tuple(oracle),
        solver_only=tuple(solver_only),
        oracle_only=tuple(oracle_only),
        witnesses=witnesses,
    )
