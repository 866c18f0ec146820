"""Command-line front end: generate, solve and verify reduction instances.

Exit codes: 0 = solution found / all checks passed, 1 = no solution / some
check failed, 2 = error (bad input, violated precondition).
"""

from __future__ import annotations

import argparse
import random
import sys

from . import cylinder, maxfs, separation
from .geometry import DEFAULT_TOL
from .graphs import Graph, GraphParseError, enumerate_solutions, make_graph, parse_graph
from .instances import (
    CylinderInstance,
    EquationSystem,
    InstanceFormatError,
    SeparationInstance,
    read_instance,
    write_instance,
)

PROBLEMS = ("cylinder", "separation", "maxfs")

_MODES = {"is": "independent-set", "clique": "clique"}


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with each edge included independently."""
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return make_graph(n, edges)


def _load_graph(args) -> Graph:
    if getattr(args, "random", None) is not None:
        return random_graph(args.random, args.edge_prob, args.seed)
    with open(args.graph) as fh:
        return parse_graph(fh.read())


def _build(problem: str, g: Graph, k: int):
    if problem == "cylinder":
        return cylinder.build_instance(g, k)
    if problem == "separation":
        return separation.build_instance(g, k)
    return maxfs.build_system(g, k)


def _summary(problem: str, inst) -> str:
    if problem == "cylinder":
        p = inst.params
        return (
            f"cylinder: {len(inst.balls)} balls"
            f" (n={p.n} k={p.k} r={p.r:.12g} lambda={p.lam:.12g} mu={p.mu:.12g})"
        )
    if problem == "separation":
        p = inst.params
        return (
            f"separation: {len(inst.p_points)} P points, {len(inst.q_points)} Q points"
            f" (n0={p.n0} n={p.n} k={p.k})"
        )
    return f"maxfs: {len(inst.equations)} equations (n={inst.n} k={inst.k} target={inst.target})"


def cmd_gen(args) -> int:
    g = _load_graph(args)
    inst = _build(args.problem, g, args.k)
    write_instance(args.out, inst)
    print(f"{_summary(args.problem, inst)} -> {args.out}")
    return 0


_INSTANCE_TYPES = {
    "cylinder": CylinderInstance,
    "separation": SeparationInstance,
    "maxfs": EquationSystem,
}


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    expected = _INSTANCE_TYPES[args.problem]
    if not isinstance(inst, expected):
        raise ValueError(
            f"instance file holds a {type(inst).__name__}, not a {args.problem} instance"
        )
    if args.problem == "cylinder":
        tuples = cylinder.solve(inst, tol=args.tol, jobs=args.jobs)
    elif args.problem == "separation":
        tuples = separation.solve(inst, tol=args.tol, jobs=args.jobs)
    else:
        best, witness = maxfs.solve_exact(inst)
        _, maximizers = maxfs.solve_grid(inst)
        print(f"max_depth {best}")
        print("witness " + " ".join(str(x) for x in witness))
        for t in maximizers:
            print(" ".join(str(u) for u in t))
        return 0 if best >= inst.target else 1
    for t in tuples:
        print(" ".join(str(u) for u in t))
    return 0 if tuples else 1


def _verify_one(problem: str, g: Graph, k: int, tol: float) -> tuple[bool, str]:
    if problem == "cylinder":
        report = cylinder.verify_against_oracle(g, k, tol)
        counts = f"classes={len(report.classes)} oracle={len(report.oracle_tuples)}"
    elif problem == "separation":
        report = separation.verify_against_oracle(g, k, tol)
        counts = f"classes={len(report.classes)} oracle={len(report.oracle_tuples)}"
    else:
        report = maxfs.verify_against_oracle(g, k)
        counts = (
            f"max_depth={report.max_depth_grid} target={report.target}"
            f" maximizers={len(report.maximizers)} cliques={len(report.cliques)}"
        )
    return report.equal, counts


def cmd_verify(args) -> int:
    g = _load_graph(args)
    problems = PROBLEMS if args.problem == "all" else (args.problem,)
    all_ok = True
    for problem in problems:
        ok, counts = _verify_one(problem, g, args.k, args.tol)
        all_ok = all_ok and ok
        print(f"{problem} {'PASS' if ok else 'FAIL'} {counts}")
    return 0 if all_ok else 1


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    tuples = enumerate_solutions(g, args.k, _MODES[args.mode], ordered=args.ordered)
    for t in tuples:
        print(" ".join(str(u) for u in t))
    return 0 if tuples else 1


def _add_graph_source(parser, allow_random=False):
    parser.add_argument("--graph", help="graph file ('n m' header, then edge lines)")
    if allow_random:
        parser.add_argument("--random", type=int, metavar="N",
                            help="use a random graph on N vertices instead of --graph")
        parser.add_argument("--edge-prob", type=float, default=0.5,
                            help="edge probability for --random (default 0.5)")
        parser.add_argument("--seed", type=int, default=0,
                            help="random seed for --random (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geored",
        description="Generate, solve and verify graph-to-geometry reduction instances.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="build an instance file from a graph")
    p_gen.add_argument("problem", choices=PROBLEMS)
    _add_graph_source(p_gen)
    p_gen.add_argument("--k", type=int, required=True, help="solution size parameter")
    p_gen.add_argument("--out", required=True, help="instance file to write")
    p_gen.set_defaults(func=cmd_gen)

    p_solve = sub.add_parser("solve", help="solve an instance file")
    p_solve.add_argument("problem", choices=PROBLEMS)
    p_solve.add_argument("--instance", required=True, help="instance file to read")
    p_solve.add_argument("--tol", type=float, default=DEFAULT_TOL,
                         help="tolerance for geometric predicates (default 1e-9)")
    p_solve.add_argument("--jobs", type=int, default=1,
                         help="parallel workers for candidate enumeration")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="generate, solve and compare with the oracle")
    p_verify.add_argument("problem", choices=PROBLEMS + ("all",))
    _add_graph_source(p_verify, allow_random=True)
    p_verify.add_argument("--k", type=int, required=True)
    p_verify.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="brute-force solutions of a graph")
    _add_graph_source(p_oracle)
    p_oracle.add_argument("--k", type=int, required=True)
    p_oracle.add_argument("--mode", choices=sorted(_MODES), required=True,
                          help="is = independent set, clique = clique")
    p_oracle.add_argument("--ordered", action="store_true",
                          help="emit every ordering of each solution set")
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "graph") and args.graph is None and getattr(args, "random", None) is None:
            parser.error(f"{args.command}: one of --graph or --random is required"
                         if hasattr(args, "random") else f"{args.command}: --graph is required")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphParseError, InstanceFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
