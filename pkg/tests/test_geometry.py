import math
import random

import pytest

from geored.geometry import (
    NEGATIVE,
    ON,
    POSITIVE,
    Ball,
    Hyperplane,
    OriginLine,
    antipode,
    dot,
    line_stabs_ball,
    plane_embed,
    plane_project,
    point_side,
)


def test_dot():
    assert dot((1.0, 0.0), (0.0, 1.0)) == 0.0
    assert dot((1.0, 2.0), (3.0, 4.0)) == 11.0


def test_dot_self_nonnegative():
    rng = random.Random(7)
    for _ in range(50):
        v = tuple(rng.uniform(-5, 5) for _ in range(6))
        assert dot(v, v) >= 0.0


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        dot((1.0, 2.0), (1.0, 2.0, 3.0))


def test_plane_project():
    assert plane_project((1.0, 2.0, 3.0, 4.0), 2) == (3.0, 4.0)
    assert plane_project((0.0, 0.0, 0.0, 0.0), 1) == (0.0, 0.0)
    with pytest.raises(ValueError, match="out of range"):
        plane_project((1.0, 2.0, 3.0, 4.0), 3)


def test_plane_decomposition_pythagoras():
    rng = random.Random(11)
    for _ in range(50):
        v = tuple(rng.uniform(-3, 3) for _ in range(8))
        parts = sum(x * x + y * y for x, y in (plane_project(v, i) for i in range(1, 5)))
        assert math.isclose(parts, dot(v, v), rel_tol=1e-12)


def test_plane_embed_reassembles_bit_exactly():
    rng = random.Random(13)
    for _ in range(20):
        v = tuple(rng.uniform(-3, 3) for _ in range(6))
        rebuilt = [0.0] * 6
        for i in range(1, 4):
            x, y = plane_project(v, i)
            e = plane_embed(3, i, x, y)
            rebuilt = [a + b for a, b in zip(rebuilt, e)]
        assert tuple(rebuilt) == v


def test_stab_through_center_and_perpendicular():
    e1 = OriginLine((1.0, 0.0))
    e2 = OriginLine((0.0, 1.0))
    b = Ball((1.0, 0.0), 0.5)
    assert line_stabs_ball(e1, b)
    assert not line_stabs_ball(e2, b)


def test_stab_at_sixty_degrees():
    # line at 60 degrees to the center direction: captures cos(60)^2 = 0.25
    # of the unit center norm, so the verdict flips between r = 0.87
    # (1 - r^2 = 0.2431) and r = 0.86 (1 - r^2 = 0.2604)
    line = OriginLine((math.cos(math.radians(60)), math.sin(math.radians(60))))
    assert line_stabs_ball(line, Ball((1.0, 0.0), 0.87))
    assert not line_stabs_ball(line, Ball((1.0, 0.0), 0.86))


def test_stab_rejects_negative_tol():
    with pytest.raises(ValueError):
        line_stabs_ball(OriginLine((1.0, 0.0)), Ball((1.0, 0.0), 0.5), tol=-1.0)


def test_point_side():
    h = Hyperplane((1.0, 0.0), 1.0)
    assert point_side(h, (0.0, 0.0)) == NEGATIVE
    assert point_side(h, (1.0, 0.0)) == ON
    assert point_side(h, (2.0, 0.0)) == POSITIVE


def test_point_side_antisymmetry():
    rng = random.Random(17)
    for _ in range(100):
        h = Hyperplane(tuple(rng.uniform(-2, 2) for _ in range(4)), rng.uniform(-2, 2))
        flipped = Hyperplane(tuple(-x for x in h.normal), -h.offset)
        p = tuple(rng.uniform(-5, 5) for _ in range(4))
        side = point_side(h, p)
        if side != ON:
            assert point_side(flipped, p) == (NEGATIVE if side == POSITIVE else POSITIVE)


def test_antipode():
    b = antipode(Ball((1.0, 0.0), 0.3))
    assert b.center == (-1.0, 0.0)
    assert b.radius == 0.3
    assert antipode((0.0, 0.0)) == (0.0, 0.0)  # the origin is the fixed point


def test_antipodal_balls_share_stabbers():
    rng = random.Random(19)
    for _ in range(1000):
        raw = [rng.gauss(0, 1) for _ in range(4)]
        scale = math.sqrt(sum(x * x for x in raw))
        line = OriginLine(tuple(x / scale for x in raw))
        ball = Ball(tuple(rng.uniform(-2, 2) for _ in range(4)), rng.uniform(0.1, 1.5))
        verdict = line_stabs_ball(line, ball)
        assert line_stabs_ball(line, antipode(ball)) == verdict
        flipped = OriginLine(tuple(-x for x in line.direction))
        assert line_stabs_ball(flipped, ball) == verdict


def test_type_invariants():
    with pytest.raises(ValueError):
        Ball((1.0, 0.0), 0.0)
    with pytest.raises(ValueError):
        Ball((1.0, 0.0, 0.0), 1.0)
    with pytest.raises(ValueError):
        OriginLine((1.0, 1.0))
    with pytest.raises(ValueError):
        Hyperplane((0.0, 0.0), 1.0)
