"""Command-line interface: generate, analyze, verify, bench, random.

Exit codes: 0 success, 1 verification failure, 2 usage/input error.
JSON output is the stable contract; text output is human-oriented.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .errors import GrowTreeError
from .graph import build_path, build_star, parse_edge_list, validate_tree
from .hitting import (
    SPECTRAL_MAX_VERTICES,
    WalkConfig,
    default_max_steps,
    mean_hitting_time_spectral,
    mean_hitting_time_tree,
)
from .kernels import BACKEND
from .models import ModelParams, model_mht, model_size
from .ops import Family, apply_pipeline, parse_pipeline
from .randgrow import expectation_report
from .report import analyze_graph, json_value
from .verify import SUITES, run_suites


def _load_seed(args) -> "Tree":
    if args.seed_file:
        text = Path(args.seed_file).read_text()
        return validate_tree(parse_edge_list(text))
    name = args.seed
    if name == "edge":
        return build_path(2)
    kind, sep, num = name.partition(":")
    if sep and kind in ("path", "star"):
        n = int(num)
        return build_path(n) if kind == "path" else build_star(n)
    raise GrowTreeError(f"unknown seed {name!r}; use edge, path:n, star:n")


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    tree = _load_seed(args)
    ops = parse_pipeline(args.ops) if args.ops else []
    for _ in range(args.gens):
        tree = apply_pipeline(tree, ops)
    if args.format == "dot":
        _emit(args, tree.graph.to_dot())
    else:
        _emit(args, tree.graph.to_edge_list())
    print(f"vertices={tree.n} edges={tree.num_edges}", file=sys.stderr)
    return 0


def cmd_analyze(args) -> int:
    if args.input:
        graph = parse_edge_list(Path(args.input).read_text())
    else:
        graph = _load_seed(args).graph
    walk_cfg = None
    if args.simulate:
        trials, seed = args.simulate
        walk_cfg = WalkConfig(int(trials), int(seed), default_max_steps(graph.n))
    report = analyze_graph(
        graph,
        label=args.input or args.seed,
        spectral=args.spectral,
        walk_config=walk_cfg,
        threads=args.threads,
    )
    _emit(args, json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.trees is not None:
        kwargs["trees"] = args.trees
    if args.max_n is not None:
        kwargs["max_n"] = args.max_n
    if args.max_t is not None:
        kwargs["max_t"] = args.max_t
    if args.max_m is not None:
        kwargs["max_m"] = args.max_m
    if args.rng is not None:
        kwargs["rng_seed"] = args.rng
    passed, checks = run_suites(names, **kwargs)
    _emit(args, json.dumps({"passed": passed, "checks": checks}, indent=2) + "\n")
    return 0 if passed else 1


def cmd_bench(args) -> int:
    family = Family.parse(args.family)
    seed = _load_seed(args)
    rows = []
    for t in range(1, args.max_gens + 1):
        params = ModelParams.from_seed(family, args.m, seed, t)
        start = time.perf_counter()
        value = model_mht(params)
        rows.append({
            "method": "closed-form",
            "t": t,
            "n": model_size(params),
            "millis": (time.perf_counter() - start) * 1e3,
            "mht": float(value),
        })
        n_t = model_size(params)
        try:
            start = time.perf_counter()
            tree = seed
            from .ops import OpSpec, apply_op

            for _ in range(t):
                tree = apply_op(tree, OpSpec(family, args.m))
            exact = mean_hitting_time_tree(tree)
            rows.append({
                "method": "construct+tree-formula",
                "t": t,
                "n": tree.n,
                "millis": (time.perf_counter() - start) * 1e3,
                "mht": float(exact),
            })
        except GrowTreeError:
            rows.append({"method": "construct+tree-formula", "t": t, "n": n_t,
                         "skipped": True})
            tree = None
        if tree is not None and tree.n <= SPECTRAL_MAX_VERTICES:
            start = time.perf_counter()
            spectral = mean_hitting_time_spectral(tree.graph)
            rows.append({
                "method": "spectral",
                "t": t,
                "n": tree.n,
                "millis": (time.perf_counter() - start) * 1e3,
                "mht": spectral,
            })
        else:
            rows.append({"method": "spectral", "t": t, "n": n_t, "skipped": True})
    _emit(args, json.dumps({"backend": BACKEND, "rows": rows}, indent=2) + "\n")
    return 0


def cmd_random(args) -> int:
    report = expectation_report(args.kind, args.t, args.trials, args.rng)
    out = {
        "kind": report.kind,
        "t": report.t,
        "note": report.note,
    }
    if report.closed_form_mean_path is not None:
        out["closed_form_mean_path"] = json_value(report.closed_form_mean_path)
    if report.recurrence_wiener is not None:
        out["recurrence_wiener"] = json_value(report.recurrence_wiener)
    if report.enumeration_wiener is not None:
        out["enumeration_wiener"] = json_value(report.enumeration_wiener)
        out["enumeration_mean_path"] = json_value(
            2 * report.enumeration_wiener
            / ((report.t + 2) * (report.t + 1))
        )
    if report.monte_carlo is not None:
        mean, se, trials = report.monte_carlo
        out["monte_carlo_wiener"] = {"mean": mean, "std_error": se, "trials": trials}
    _emit(args, json.dumps(out, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="growtree",
        description="Recursive growth tree networks: exact Wiener-index and "
                    "mean-hitting-time formulas with independent oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", default="edge",
                       help="builtin seed: edge, path:n, star:n")
        p.add_argument("--seed-file", help="edge-list file to use as seed")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap; never changes results")

    p_gen = sub.add_parser("generate", help="grow a tree and write it out")
    add_common(p_gen)
    p_gen.add_argument("--ops", default="",
                       help="pipeline, e.g. 'subdiv:2,type2:1'")
    p_gen.add_argument("--gens", type=int, default=1,
                       help="times to apply the pipeline")
    p_gen.add_argument("--format", choices=["edgelist", "dot"],
                       default="edgelist")
    p_gen.set_defaults(func=cmd_generate)

    p_an = sub.add_parser("analyze", help="compute all metrics for a graph")
    add_common(p_an)
    p_an.add_argument("input", nargs="?", help="edge-list file (or use --seed)")
    p_an.add_argument("--spectral", action="store_true",
                      help="add the Laplacian-spectrum mean hitting time")
    p_an.add_argument("--simulate", nargs=2, metavar=("TRIALS", "SEED"),
                      help="add a Monte Carlo estimate")
    p_an.set_defaults(func=cmd_analyze)

    p_ver = sub.add_parser("verify", help="run formula-vs-oracle suites")
    add_common(p_ver)
    p_ver.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p_ver.add_argument("--trees", type=int)
    p_ver.add_argument("--max-n", type=int, dest="max_n")
    p_ver.add_argument("--max-t", type=int, dest="max_t")
    p_ver.add_argument("--max-m", type=int, dest="max_m")
    p_ver.add_argument("--rng", type=int)
    p_ver.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time closed form vs construction "
                                           "vs spectral over a size ladder")
    add_common(p_bench)
    p_bench.add_argument("--family", default="subdiv")
    p_bench.add_argument("--m", type=int, default=1)
    p_bench.add_argument("--max-gens", type=int, default=10, dest="max_gens")
    p_bench.set_defaults(func=cmd_bench)

    p_rand = sub.add_parser("random", help="stochastic growth tree expectations")
    add_common(p_rand)
    p_rand.add_argument("--kind", choices=["ba", "uniform"], required=True)
    p_rand.add_argument("--t", type=int, required=True)
    p_rand.add_argument("--trials", type=int, default=0)
    p_rand.add_argument("--rng", type=int, default=0)
    p_rand.set_defaults(func=cmd_random)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GrowTreeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
