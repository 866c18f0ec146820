"""Vectors organized as k orthogonal coordinate planes, plus the toleranced
predicates shared by the floating-point reductions.

A vector in R^{2k} is a plain tuple (x_1, y_1, ..., x_k, y_k); plane i holds
coordinates 2i-2 and 2i-1.  All predicates take an explicit tolerance
(default 1e-9) because coordinates are 64-bit floats built from sines and
cosines; there is no exact-arithmetic path here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

Vec = tuple[float, ...]

DEFAULT_TOL = 1e-9

NEGATIVE = "negative"
ON = "on"
POSITIVE = "positive"


def dot(a: Vec, b: Vec) -> float:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def norm(a: Vec) -> float:
    return math.sqrt(dot(a, a))


def plane_project(v: Vec, i: int) -> tuple[float, float]:
    """The two components of v on coordinate plane i (1-indexed)."""
    if len(v) % 2 != 0:
        raise ValueError(f"odd dimension {len(v)}")
    if not 1 <= i <= len(v) // 2:
        raise ValueError(f"plane index {i} out of range for dimension {len(v)}")
    return v[2 * i - 2], v[2 * i - 1]


def plane_embed(k: int, i: int, x: float, y: float) -> Vec:
    """The vector of R^{2k} supported on plane i only, with components (x, y)."""
    if not 1 <= i <= k:
        raise ValueError(f"plane index {i} out of range for k={k}")
    coords = [0.0] * (2 * k)
    coords[2 * i - 2] = x
    coords[2 * i - 1] = y
    return tuple(coords)


@dataclass(frozen=True)
class Ball:
    center: Vec
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if len(self.center) == 0 or len(self.center) % 2 != 0:
            raise ValueError(f"center dimension must be even and positive, got {len(self.center)}")


@dataclass(frozen=True)
class OriginLine:
    """A line through the origin, named by a unit direction vector."""

    direction: Vec

    def __post_init__(self):
        if abs(norm(self.direction) - 1.0) > 1e-9:
            raise ValueError(f"direction must be unit length, |d| = {norm(self.direction)!r}")


@dataclass(frozen=True)
class Hyperplane:
    """The point set {x : normal . x = offset}."""

    normal: Vec
    offset: float

    def __post_init__(self):
        if norm(self.normal) == 0.0:
            raise ValueError("normal must be nonzero")


def line_stabs_ball(line: OriginLine, ball: Ball, tol: float = DEFAULT_TOL) -> bool:
    """True iff the line meets the ball: the center's projection onto the
    line captures all but at most r of its norm, (c.d)^2 >= |c|^2 - r^2,
    tested with slack tol on the right-hand side."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    c = ball.center
    s = dot(c, line.direction)
    return s * s >= dot(c, c) - ball.radius**2 - tol


def point_side(h: Hyperplane, p: Vec, tol: float = DEFAULT_TOL) -> str:
    """Which side of the hyperplane p lies on; within tol counts as ON."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    value = dot(h.normal, p) - h.offset
    if abs(value) <= tol:
        return ON
    return POSITIVE if value > 0 else NEGATIVE


def antipode(obj):
    """Negate a ball's center (radius unchanged) or negate a point."""
    if isinstance(obj, Ball):
        return Ball(tuple(-x for x in obj.center), obj.radius)
    return tuple(-x for x in obj)
