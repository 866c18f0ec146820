"""On-disk instance files: a line-oriented text format.

    problem <cylinder|separation|maxfs>
    <name> <value>        header parameters, one per line
    <objects> <count>     object count, then one object per line:

    ball scaffold <i> <u> <radius> <2k coords>
    ball constraint <i> <j> <u> <v> <+|-> <radius> <2k coords>
    p scaffold <i> <u> <2k coords>
    q origin <2k coords>
    q constraint <i> <j> <u> <v> <2k coords>
    eq scaffold <i> <v> coeffs <k ints> rhs <int>
    eq edge <i> <j> <u> <v> coeffs <k ints> rhs <int>

Floats are written with 17 significant digits, so parsing returns them
bit-exactly; integers are plain decimal.  '#' starts a comment line.
Serialization order follows instance construction order, which is fully
deterministic, so identical inputs give byte-identical files.
"""

from __future__ import annotations

from .cylinder import CylinderInstance, CylinderParams, LabeledBall
from .geometry import Ball
from .maxfs import EquationSystem, LinearEquation
from .separation import LabeledPoint, SeparationInstance, SeparationParams


class InstanceFormatError(ValueError):
    """Malformed instance file; the message names the offending line."""


def format_float(x: float) -> str:
    return format(x, ".17g")


def serialize_instance(inst) -> str:
    if isinstance(inst, CylinderInstance):
        return _serialize_cylinder(inst)
    if isinstance(inst, SeparationInstance):
        return _serialize_separation(inst)
    if isinstance(inst, EquationSystem):
        return _serialize_maxfs(inst)
    raise TypeError(f"not an instance type: {type(inst).__name__}")


def parse_instance(text: str):
    lines = _content_lines(text)
    if not lines:
        raise InstanceFormatError("line 1: empty instance file")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "problem":
        raise InstanceFormatError(f"line {lineno}: expected 'problem <name>', got {first!r}")
    problem = parts[1]
    body = lines[1:]
    if problem == "cylinder":
        return _parse_cylinder(body)
    if problem == "separation":
        return _parse_separation(body)
    if problem == "maxfs":
        return _parse_maxfs(body)
    raise InstanceFormatError(f"line {lineno}: unknown problem {problem!r}")


def write_instance(path, inst) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_instance(inst))


def read_instance(path):
    with open(path) as fh:
        return parse_instance(fh.read())


# -- helpers ----------------------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((lineno, stripped))
    return out


def _coords(vec) -> str:
    return " ".join(format_float(x) for x in vec)


def _take_header(body, names, lineno_hint):
    """Read the fixed header fields in order; returns (values, rest)."""
    if len(body) < len(names):
        raise InstanceFormatError(f"line {lineno_hint}: truncated header")
    values = {}
    for (lineno, line), name in zip(body, names):
        parts = line.split()
        if len(parts) != 2 or parts[0] != name:
            raise InstanceFormatError(f"line {lineno}: expected '{name} <value>', got {line!r}")
        values[name] = parts[1]
    return values, body[len(names):]


def _parse_int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: expected integer, got {token!r}") from None


def _parse_float(token, lineno):
    try:
        return float(token)
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: expected float, got {token!r}") from None


def _check_count(kind, body, count, lineno):
    if len(body) != count:
        raise InstanceFormatError(
            f"line {lineno}: expected {count} {kind} lines, found {len(body)}"
        )


# -- cylinder ---------------------------------------------------------------


def _serialize_cylinder(inst: CylinderInstance) -> str:
    p = inst.params
    lines = [
        "problem cylinder",
        f"n {p.n}",
        f"k {p.k}",
        f"r {format_float(p.r)}",
        f"lambda {format_float(p.lam)}",
        f"mu {format_float(p.mu)}",
        f"balls {len(inst.balls)}",
    ]
    for lb in inst.balls:
        if lb.label[0] == "scaffold":
            _, i, u = lb.label
            head = f"ball scaffold {i} {u}"
        else:
            _, i, j, u, v, sign = lb.label
            head = f"ball constraint {i} {j} {u} {v} {sign}"
        lines.append(f"{head} {format_float(lb.ball.radius)} {_coords(lb.ball.center)}")
    return "\n".join(lines) + "\n"


def _parse_cylinder(body) -> CylinderInstance:
    header, rest = _take_header(body, ["n", "k", "r", "lambda", "mu", "balls"], 2)
    n = _parse_int(header["n"], 2)
    k = _parse_int(header["k"], 2)
    params = CylinderParams(
        n=n,
        k=k,
        r=_parse_float(header["r"], 2),
        lam=_parse_float(header["lambda"], 2),
        mu=_parse_float(header["mu"], 2),
    )
    count = _parse_int(header["balls"], 2)
    _check_count("ball", rest, count, 2)
    dim = 2 * k
    balls = []
    for lineno, line in rest:
        parts = line.split()
        if parts[0] != "ball" or len(parts) < 2:
            raise InstanceFormatError(f"line {lineno}: expected 'ball ...', got {line!r}")
        if parts[1] == "scaffold":
            if len(parts) != 4 + 1 + dim:
                raise InstanceFormatError(f"line {lineno}: bad scaffold ball line")
            i, u = (_parse_int(t, lineno) for t in parts[2:4])
            label = ("scaffold", i, u)
            tail = parts[4:]
        elif parts[1] == "constraint":
            if len(parts) != 7 + 1 + dim:
                raise InstanceFormatError(f"line {lineno}: bad constraint ball line")
            i, j, u, v = (_parse_int(t, lineno) for t in parts[2:6])
            sign = parts[6]
            if sign not in ("+", "-"):
                raise InstanceFormatError(f"line {lineno}: bad sign {sign!r}")
            label = ("constraint", i, j, u, v, sign)
            tail = parts[7:]
        else:
            raise InstanceFormatError(f"line {lineno}: unknown ball kind {parts[1]!r}")
        radius = _parse_float(tail[0], lineno)
        center = tuple(_parse_float(t, lineno) for t in tail[1:])
        balls.append(LabeledBall(Ball(center, radius), label))
    return CylinderInstance(params=params, balls=tuple(balls))


# -- separation ---------------------------------------------------------------


def _serialize_separation(inst: SeparationInstance) -> str:
    p = inst.params
    lines = [
        "problem separation",
        f"n0 {p.n0}",
        f"n {p.n}",
        f"k {p.k}",
        f"p_points {len(inst.p_points)}",
        f"q_points {len(inst.q_points)}",
    ]
    for lp in inst.p_points:
        _, i, u = lp.label
        lines.append(f"p scaffold {i} {u} {_coords(lp.point)}")
    for lp in inst.q_points:
        if lp.label[0] == "origin":
            lines.append(f"q origin {_coords(lp.point)}")
        else:
            _, i, j, u, v = lp.label
            lines.append(f"q constraint {i} {j} {u} {v} {_coords(lp.point)}")
    return "\n".join(lines) + "\n"


def _parse_separation(body) -> SeparationInstance:
    header, rest = _take_header(body, ["n0", "n", "k", "p_points", "q_points"], 2)
    params = SeparationParams(
        n0=_parse_int(header["n0"], 2),
        n=_parse_int(header["n"], 2),
        k=_parse_int(header["k"], 2),
    )
    p_count = _parse_int(header["p_points"], 2)
    q_count = _parse_int(header["q_points"], 2)
    _check_count("point", rest, p_count + q_count, 2)
    dim = 2 * params.k
    p_points, q_points = [], []
    for lineno, line in rest:
        parts = line.split()
        if parts[0] == "p" and parts[1] == "scaffold":
            if len(parts) != 4 + dim:
                raise InstanceFormatError(f"line {lineno}: bad P point line")
            i, u = (_parse_int(t, lineno) for t in parts[2:4])
            point = tuple(_parse_float(t, lineno) for t in parts[4:])
            p_points.append(LabeledPoint(point, ("scaffold", i, u)))
        elif parts[0] == "q" and parts[1] == "origin":
            if len(parts) != 2 + dim:
                raise InstanceFormatError(f"line {lineno}: bad origin line")
            point = tuple(_parse_float(t, lineno) for t in parts[2:])
            q_points.append(LabeledPoint(point, ("origin",)))
        elif parts[0] == "q" and parts[1] == "constraint":
            if len(parts) != 6 + dim:
                raise InstanceFormatError(f"line {lineno}: bad Q constraint line")
            i, j, u, v = (_parse_int(t, lineno) for t in parts[2:6])
            point = tuple(_parse_float(t, lineno) for t in parts[6:])
            q_points.append(LabeledPoint(point, ("constraint", i, j, u, v)))
        else:
            raise InstanceFormatError(f"line {lineno}: unknown point line {line!r}")
    if len(p_points) != p_count or len(q_points) != q_count:
        raise InstanceFormatError("line 2: point counts do not match header")
    return SeparationInstance(
        params=params, p_points=tuple(p_points), q_points=tuple(q_points)
    )


# -- maxfs --------------------------------------------------------------------


def _serialize_maxfs(sys: EquationSystem) -> str:
    lines = [
        "problem maxfs",
        f"n {sys.n}",
        f"k {sys.k}",
        f"target {sys.target}",
        f"equations {len(sys.equations)}",
    ]
    for eq, label in zip(sys.equations, sys.labels):
        coeffs = " ".join(str(c) for c in eq.coeffs)
        lines.append(f"eq {' '.join(str(t) for t in label)} coeffs {coeffs} rhs {eq.rhs}")
    return "\n".join(lines) + "\n"


def _parse_maxfs(body) -> EquationSystem:
    header, rest = _take_header(body, ["n", "k", "target", "equations"], 2)
    n = _parse_int(header["n"], 2)
    k = _parse_int(header["k"], 2)
    target = _parse_int(header["target"], 2)
    count = _parse_int(header["equations"], 2)
    _check_count("equation", rest, count, 2)
    equations, labels = [], []
    for lineno, line in rest:
        parts = line.split()
        if parts[0] != "eq":
            raise InstanceFormatError(f"line {lineno}: expected 'eq ...', got {line!r}")
        if parts[1] == "scaffold":
            label = ("scaffold",) + tuple(_parse_int(t, lineno) for t in parts[2:4])
            tail = parts[4:]
        elif parts[1] == "edge":
            label = ("edge",) + tuple(_parse_int(t, lineno) for t in parts[2:6])
            tail = parts[6:]
        else:
            raise InstanceFormatError(f"line {lineno}: unknown equation label {parts[1]!r}")
        if len(tail) != 1 + k + 2 or tail[0] != "coeffs" or tail[k + 1] != "rhs":
            raise InstanceFormatError(f"line {lineno}: bad equation line {line!r}")
        coeffs = tuple(_parse_int(t, lineno) for t in tail[1 : k + 1])
        rhs = _parse_int(tail[k + 2], lineno)
        equations.append(LinearEquation(coeffs, rhs))
        labels.append(label)
    return EquationSystem(
        equations=tuple(equations), labels=tuple(labels), n=n, k=k, target=target
    )
