"""
Command-line interface.

    kvcover gen --n 12 --p 0.4 --seed 1 --output g.wvc
    kvcover solve max-kvc --input g.wvc --k 3 --epsilon 0.3 --oracle --json
    kvcover solve min-kvc --input g.wvc --k 3 --epsilon 0.5 --seed 7
    kvcover kernelize --mode weighted --input g.wvc --k 3 --epsilon 0.5
    kvcover export-2sat --input g.wvc --k 3 --epsilon 0.5
    kvcover oracle multicolored-min --input g.wvc --k 3 --coloring chi.txt
    kvcover bench --random 20 --n 10 --algorithms fptas-max,min-kvc --k 1,2,3 --epsilon 0.5

Exit codes: 0 success, 2 parse/validation error, 3 infeasible, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from .errors import Infeasible, KVCError
from .graph import Solution, WeightedGraph, covered_weight
from .instances import format_graph, gen_random, parse_coloring, parse_graph
from .maxkvc import (
    fptas_max,
    format_wcnf_cc,
    greedy_max,
    kernel_unweighted,
    kernel_weighted,
    lift_solution,
    solve_via_2sat_pipeline,
    to_max2sat_cc,
)
from .minkvc import auto_trials, greedy_min, min_kvc_fptas, multicolored_min_kvc
from .oracle import brute_max_kvc, brute_min_kvc, brute_multicolored_min_kvc

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_INTERNAL = 0, 2, 3, 4


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load(args) -> WeightedGraph:
    return parse_graph(_read_text(args.input))


def _floats(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t]


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def _report(args, algorithm: str, sense: str, G: WeightedGraph, sol: Solution, elapsed: float, **extra) -> None:
    record = {
        "algorithm": algorithm,
        "sense": sense,
        "n": G.n,
        "k": args.k,
        "epsilon": getattr(args, "epsilon", None),
        "seed": getattr(args, "seed", None),
        "trials": extra.pop("trials", None),
        "value": sol.value,
        "witness": list(sol.members),
        "wall_time": elapsed,
    }
    if sol.estimate is not None:
        record["estimate"] = sol.estimate
    record.update(extra)
    if getattr(args, "oracle", False):
        brute = brute_max_kvc if sense == "max" else brute_min_kvc
        opt = brute(G, args.k).value
        record["oracle_value"] = opt
        record["ratio"] = bench_mod.realized_ratio(sol.value, opt)
    if args.json:
        text = json.dumps(record) + "\n"
    else:
        lines = [f"value {sol.value!r}", "set " + " ".join(map(str, sol.members))]
        if sol.estimate is not None:
            lines.append(f"estimate {sol.estimate!r}")
        if "oracle_value" in record:
            lines.append(f"oracle {record['oracle_value']!r}")
            lines.append(f"ratio {record['ratio']!r}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)


def cmd_gen(args) -> int:
    G = gen_random(args.n, args.p, args.weights, args.loop_prob, args.seed, args.unweighted)
    comment = f"gen n={args.n} p={args.p} weights={'unit' if args.unweighted else args.weights} seed={args.seed}"
    _emit(format_graph(G, [comment]), args.output)
    return EXIT_OK


def _need_eps(args, default=None):
    if args.epsilon is None:
        if default is None:
            raise argparse.ArgumentTypeError("--epsilon is required for this method")
        return default
    return args.epsilon


def cmd_solve(args) -> int:
    G = _load(args)
    start = time.perf_counter()
    extra = {}
    if args.problem == "max-kvc":
        sense = "max"
        if args.method == "fptas":
            sol = fptas_max(G, args.k, _need_eps(args))
        elif args.method == "greedy":
            sol = greedy_max(G, args.k)
        elif args.method == "pipeline":
            sol = solve_via_2sat_pipeline(G, args.k, _need_eps(args))
        elif args.method == "kernel-unweighted":
            kr = kernel_unweighted(G, args.k, _need_eps(args))
            inner = brute_max_kvc(kr.reduced, kr.reduced_k)
            members = lift_solution(kr, inner.members)
            sol = Solution(members, covered_weight(G, members))
            extra["kernel_n"] = kr.reduced.n
        else:
            raise argparse.ArgumentTypeError(f"method {args.method!r} does not solve max-kvc")
    else:
        sense = "min"
        if args.coloring is not None:
            colors = parse_coloring(Path(args.coloring).read_text())
            sol = multicolored_min_kvc(G, args.k, colors, _need_eps(args))
        elif args.method == "greedy":
            sol = greedy_min(G, args.k)
        elif args.method == "fptas":
            trials = args.trials if args.trials is not None else auto_trials(args.k, args.p_fail)
            sol = min_kvc_fptas(G, args.k, _need_eps(args), trials=trials, seed=args.seed, p_fail=args.p_fail)
            extra["trials"] = trials
            extra["p_fail"] = args.p_fail
        else:
            raise argparse.ArgumentTypeError(f"method {args.method!r} does not solve min-kvc")
    elapsed = time.perf_counter() - start
    name = "multicolored-min" if args.problem == "min-kvc" and args.coloring else f"{args.method}-{sense}"
    _report(args, name, sense, G, sol, elapsed, **extra)
    return EXIT_OK


def cmd_kernelize(args) -> int:
    G = _load(args)
    if args.mode == "weighted":
        kr = kernel_weighted(G, args.k, args.epsilon)
    else:
        kr = kernel_unweighted(G, args.k, args.epsilon)
    meta = {
        "mode": args.mode,
        "k": kr.k,
        "reduced_k": kr.reduced_k,
        "epsilon": kr.epsilon,
        "original_n": kr.original_n,
        "reduced_n": kr.reduced.n,
        "num_padded": kr.num_padded,
        "committed": list(kr.committed),
        "id_map": list(kr.id_map),
    }
    if args.json:
        meta["edges"] = [[u, v, w] for u, v, w in kr.reduced.edges()]
        _emit(json.dumps(meta) + "\n", args.output)
        return EXIT_OK
    comments = [f"kernel mode={args.mode} k={kr.k} reduced_k={kr.reduced_k} epsilon={kr.epsilon!r}"]
    comments.append("committed " + " ".join(map(str, kr.committed)))
    comments += [f"map {i} {'pad' if v is None else v}" for i, v in enumerate(kr.id_map)]
    _emit(format_graph(kr.reduced, comments), args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    G = _load(args)
    k = args.k
    if args.epsilon is not None:
        kr = kernel_weighted(G, k, args.epsilon)
        G, k = kr.reduced, kr.k
    _emit(format_wcnf_cc(to_max2sat_cc(G, k)), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _load(args)
    start = time.perf_counter()
    if args.problem == "max":
        sol, sense = brute_max_kvc(G, args.k), "max"
    elif args.problem == "min":
        sol, sense = brute_min_kvc(G, args.k), "min"
    else:
        if args.coloring is None:
            raise argparse.ArgumentTypeError("multicolored-min needs --coloring")
        colors = parse_coloring(Path(args.coloring).read_text())
        sol, sense = brute_multicolored_min_kvc(G, args.k, colors), "min"
    args.oracle = False
    _report(args, f"oracle-{args.problem}", sense, G, sol, time.perf_counter() - start)
    return EXIT_OK


def cmd_bench(args) -> int:
    instances = []
    for path in args.input or []:
        instances.append((path, parse_graph(Path(path).read_text())))
    for i in range(args.random):
        G = gen_random(args.n, args.p, args.weights, args.loop_prob, args.seed + i, args.unweighted)
        instances.append((f"random-{args.seed + i}", G))
    oracle = {"auto": "auto", "on": True, "off": False}[args.oracle]
    reports = []
    lines = []
    for r in bench_mod.bench(
        instances, args.algorithms.split(","), _ints(args.k), _floats(args.epsilon), args.seed, oracle
    ):
        reports.append(r)
        lines.append(json.dumps(r.to_dict()))
    summary = bench_mod.summarize(reports)
    lines.append(json.dumps({"summary": summary}))
    _emit("\n".join(lines) + "\n", args.output)
    print(f"{'algorithm':<24}{'cells':>7}{'worst ratio':>14}{'time [s]':>10}", file=sys.stderr)
    for name, s in summary.items():
        worst = "-" if s["worst_ratio"] is None else f"{s['worst_ratio']:.4f}"
        print(f"{name:<24}{s['cells']:>7}{worst:>14}{s['wall_time']:>10.3f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    outputs = argparse.ArgumentParser(add_help=False)
    outputs.add_argument("--output", help="output file (default: stdout)")
    outputs.add_argument("--json", action="store_true", help="emit a JSON record")
    outputs.add_argument("--seed", type=int, default=0)
    common = argparse.ArgumentParser(add_help=False, parents=[outputs])
    common.add_argument("--input", help="instance file ('-' or omitted: stdin)")

    parser = argparse.ArgumentParser(prog="kvcover", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a seeded random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.3, help="edge density")
    g.add_argument("--weights", default="uniform", choices=["uniform", "int", "unit"])
    g.add_argument("--loop-prob", type=float, default=0.0)
    g.add_argument("--unweighted", action="store_true", help="unit weights, no self-loops")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="run an approximation algorithm")
    ssub = s.add_subparsers(dest="problem", required=True)
    for problem, methods, default in (
        ("max-kvc", ["fptas", "greedy", "pipeline", "kernel-unweighted"], "fptas"),
        ("min-kvc", ["fptas", "greedy"], "fptas"),
    ):
        p = ssub.add_parser(problem, parents=[common])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--epsilon", type=float)
        p.add_argument("--method", choices=methods, default=default)
        p.add_argument("--oracle", action="store_true", help="also run brute force and report the ratio")
        if problem == "min-kvc":
            p.add_argument("--trials", type=int, help="number of random colorings (default: auto)")
            p.add_argument("--p-fail", type=float, default=1e-3)
            p.add_argument("--coloring", help="coloring file: run the multicolored variant directly")
        p.set_defaults(func=cmd_solve)

    kz = sub.add_parser("kernelize", parents=[common], help="write an approximate kernel")
    kz.add_argument("--mode", choices=["weighted", "unweighted"], default="weighted")
    kz.add_argument("--k", type=int, required=True)
    kz.add_argument("--epsilon", type=float, required=True)
    kz.set_defaults(func=cmd_kernelize)

    ex = sub.add_parser("export-2sat", parents=[common], help="write the Max 2SAT-CC formulation")
    ex.add_argument("--k", type=int, required=True)
    ex.add_argument("--epsilon", type=float, help="kernelize with this epsilon first")
    ex.set_defaults(func=cmd_export)

    o = sub.add_parser("oracle", help="exact brute-force solvers")
    osub = o.add_subparsers(dest="problem", required=True)
    for problem in ("max", "min", "multicolored-min"):
        p = osub.add_parser(problem, parents=[common])
        p.add_argument("--k", type=int, required=True)
        if problem == "multicolored-min":
            p.add_argument("--coloring", required=True)
        p.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", parents=[outputs], help="JSON-lines benchmark over a grid")
    b.add_argument("--input", nargs="*", help="instance files")
    b.add_argument("--random", type=int, default=0, help="also generate this many random instances")
    b.add_argument("--n", type=int, default=10)
    b.add_argument("--p", type=float, default=0.4)
    b.add_argument("--weights", default="uniform", choices=["uniform", "int", "unit"])
    b.add_argument("--loop-prob", type=float, default=0.0)
    b.add_argument("--unweighted", action="store_true")
    b.add_argument("--algorithms", default="fptas-max,greedy-max,min-kvc,greedy-min")
    b.add_argument("--k", default="1,2,3")
    b.add_argument("--epsilon", default="0.5")
    b.add_argument("--oracle", choices=["auto", "on", "off"], default="auto")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (KVCError, argparse.ArgumentTypeError, KeyError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
