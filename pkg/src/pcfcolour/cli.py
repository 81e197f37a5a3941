"""Command-line front end.

Commands: gen, colour, precolour, nibble, pipeline, verify, oracle, prob,
bench. Every randomized command logs its effective seed (flag beats the
PCF_SEED environment variable, which beats a time-derived seed), so a run
can be replayed byte-identically. Exit codes: 0 success, 1 verification
failure, 2 bad input, 3 exhausted restarts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings

import numpy as np

from . import graphs
from .colouring import Colouring, ThresholdSpec, check_conflict_free, check_h_odd
from .errors import RestartsExhausted
from .greedy import degeneracy_ordering, greedy_hpcf, greedy_hpcf_degenerate, partial_greedy
from .mindeg import precolour_mindeg
from .nibble import make_params, restart_driver
from .oracle import SearchBudget, exact_chi_odd, exact_chi_pcf
from .pipeline import PipelineConfig, bound_value, hpcf_colour, hpcf_colour_mindeg
from .probtools import (
    binomial_cdf,
    binomial_tail_upper,
    boost_after_failure_process,
    certain_process,
    chernoff_lower,
    chernoff_upper,
    dominance_mc,
    independent_process,
)
from .rng import mix

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_BAD_INPUT = 2
EXIT_RESTARTS = 3


def _effective_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PCF_SEED")
    if env is not None:
        return int(env)
    derived = mix(time.time_ns(), 0)
    print(f"# derived seed {derived}", file=sys.stderr)
    return derived


def _emit(args, payload: dict, text_lines=None) -> None:
    if args.format == "json":
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        lines = text_lines if text_lines is not None else [f"{k}: {payload[k]}" for k in sorted(payload)]
        out = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _load_graph(path: str) -> graphs.Graph:
    return graphs.read_col(path)


# -- gen ----------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.family == "cycle":
        g = graphs.gen_cycle(args.n)
    elif args.family == "complete":
        g = graphs.gen_complete(args.n)
    elif args.family == "subdivided":
        sel = graphs.ALL_EDGES
        if args.subdivide not in (None, "all"):
            if args.subdivide == "none":
                sel = []
            else:
                sel = [tuple(int(x) for x in pair.split("-")) for pair in args.subdivide.split(",")]
        g = graphs.gen_subdivided_complete(args.n, sel)
    elif args.family == "random":
        g = graphs.gen_random_graph(args.n, args.p, _effective_seed(args))
    elif args.family == "regular":
        g = graphs.gen_random_regular(args.n, args.d, _effective_seed(args))
    else:
        raise ValueError(f"unknown family {args.family!r}")
    text = graphs.graph_to_col_text(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- colour -------------------------------------------------------------------


def cmd_colour(args) -> int:
    g = _load_graph(args.graph)
    if args.algo == "greedy":
        col, trace = greedy_hpcf(g, args.h)
    elif args.algo == "degenerate":
        col, trace = greedy_hpcf_degenerate(g, args.h, degeneracy_ordering(g))
    elif args.algo == "partial":
        col, trace, _spec = partial_greedy(g, args.h)
    else:
        raise ValueError(f"unknown algorithm {args.algo!r}")
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(trace.to_json_obj(), fh, indent=2)
    payload = {"n": col.n, "colours": [int(c) for c in col.colours]}
    _emit(args, payload, [f"colours_used: {col.colours_used}", f"max_colour: {col.max_colour}"])
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    with open(args.colouring, "r", encoding="utf-8") as fh:
        col = Colouring.from_json(fh.read())
    if args.odd:
        report = check_h_odd(g, col, args.h if args.h is not None else 1)
    else:
        if args.inside is not None or args.outside is not None:
            if args.inside is None or args.outside is None or args.degree_threshold is None:
                raise ValueError("--inside, --outside and --degree-threshold go together")
            spec = ThresholdSpec.degree_split(g, args.degree_threshold, args.inside, args.outside)
        else:
            spec = ThresholdSpec.constant(args.h if args.h is not None else 1)
        report = check_conflict_free(g, col, spec)
    payload = json.loads(report.to_json())
    _emit(
        args,
        payload,
        [
            f"mode: {report.mode}",
            f"proper: {report.proper}",
            f"witnesses_ok: {report.witnesses_ok}",
            f"all_pass: {report.all_pass}",
            f"min_margin: {report.min_margin}",
        ],
    )
    return EXIT_OK if report.all_pass else EXIT_VERIFY


# -- precolour ----------------------------------------------------------------


def cmd_precolour(args) -> int:
    g = _load_graph(args.graph)
    seed = _effective_seed(args)
    try:
        col, _spec, attempts = precolour_mindeg(
            g, args.h, args.d, seed, max_restarts=args.max_restarts, strict=args.strict
        )
    except RestartsExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESTARTS
    payload = {"n": col.n, "colours": [int(c) for c in col.colours], "seed": seed, "attempts": attempts}
    _emit(args, payload, [f"max_colour: {col.max_colour}", f"attempts: {attempts}", f"seed: {seed}"])
    return EXIT_OK


# -- nibble -------------------------------------------------------------------


def cmd_nibble(args) -> int:
    g = _load_graph(args.graph)
    seed = _effective_seed(args)
    if args.precolour and args.precolour not in ("greedy", "partial"):
        with open(args.precolour, "r", encoding="utf-8") as fh:
            sigma0 = Colouring.from_json(fh.read())
    elif args.precolour == "partial" and args.variant == "A":
        sigma0, _, _ = partial_greedy(g, args.h)
    else:
        need = args.h if args.variant == "A" else max(args.h0, 1)
        sigma0, _ = greedy_hpcf(g, need)
    k = sigma0.max_colour
    params = make_params(args.variant, args.h, args.h0, args.d, args.eta, g, k)
    if args.variant == "A":
        f0 = ThresholdSpec.degree_split(g, args.d, args.h, args.h0)
    else:
        f0 = ThresholdSpec.degree_split(g, args.d, args.h0, 0)
    out = restart_driver(g, sigma0, f0, params, args.max_restarts, seed)
    payload = out.to_json_obj()
    payload["seed"] = seed
    _emit(
        args,
        payload,
        [
            f"success: {out.success}",
            f"attempts: {out.attempts}",
            f"i0: {out.i0}",
            f"failsafe_triggers: {out.failsafe_triggers}",
            f"max_colour: {out.colouring.max_colour}",
            f"seed: {seed}",
        ],
    )
    return EXIT_OK if out.success else EXIT_RESTARTS


# -- pipeline -------------------------------------------------------------------


def cmd_pipeline(args) -> int:
    g = _load_graph(args.graph)
    seed = _effective_seed(args)
    config = PipelineConfig(
        mode="strict" if args.strict else "desk",
        eta=args.eta,
        max_restarts=args.max_restarts,
    )
    try:
        if args.which == "cor13":
            col, report = hpcf_colour(g, args.h, seed, config)
        else:
            col, report = hpcf_colour_mindeg(g, args.h, seed, config)
    except RestartsExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESTARTS
    payload = {
        "colouring": {"n": col.n, "colours": [int(c) for c in col.colours]},
        "report": report.to_json_obj(),
        "seed": seed,
    }
    _emit(
        args,
        payload,
        [
            f"algorithm: {report.algorithm}",
            f"colours: {report.achieved_colours}",
            f"bound [{report.bound_name}]: {report.bound_value:.2f}",
            f"within_bound: {report.within_bound}",
            f"strict_hypotheses_met: {report.strict_hypotheses_met}",
            f"attempts: {report.attempts}",
            f"seed: {seed}",
        ],
    )
    return EXIT_OK


# -- oracle ---------------------------------------------------------------------


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    budget = SearchBudget(max_nodes=args.max_nodes, time_limit=args.timeout)
    fn = exact_chi_pcf if args.target == "pcf" else exact_chi_odd
    result = fn(g, args.h, budget)
    payload = result.to_json_obj()
    _emit(
        args,
        payload,
        [
            f"status: {result.status}",
            f"value: {result.value}",
            f"nodes_used: {result.nodes_used}",
            f"elapsed: {result.elapsed:.3f}",
        ],
    )
    return EXIT_OK if result.status == "exact" else EXIT_VERIFY


# -- prob -----------------------------------------------------------------------


def cmd_prob(args) -> int:
    if args.prob_cmd == "tail":
        bound = binomial_tail_upper(args.n, args.p, args.t)
        payload = {
            "n": args.n,
            "p": args.p,
            "t": args.t,
            "union_bound": bound,
            "union_bound_clamped": min(1.0, bound),
            "vacuous": bound > 1.0,
            "cdf_below_t": binomial_cdf(args.n, args.p, args.t - 1),
        }
        mu = args.n * args.p
        if 0 < args.t < mu:
            payload["chernoff_lower"] = chernoff_lower(mu, 1.0 - args.t / mu)
        elif args.t > mu > 0:
            payload["chernoff_upper"] = chernoff_upper(mu, args.t / mu - 1.0)
        _emit(args, payload)
        return EXIT_OK
    if args.prob_cmd == "check-dominance":
        seed = _effective_seed(args)
        procs = [
            independent_process(args.p),
            boost_after_failure_process(args.p),
            certain_process(args.p),
        ]
        reports = [dominance_mc(proc, args.n, args.trials, mix(seed, i)) for i, proc in enumerate(procs)]
        payload = {"seed": seed, "results": [r.to_json_obj() for r in reports]}
        _emit(
            args,
            payload,
            [f"{r.process}: pass={r.passed} worst_excess={r.worst_excess:.2e}" for r in reports]
            + [f"seed: {seed}"],
        )
        return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
    raise ValueError(f"unknown prob subcommand {args.prob_cmd!r}")


# -- bench ----------------------------------------------------------------------


def _bench_row(name, g, h, algorithm, colours, bound_name, bound, verified):
    return {
        "graph": name,
        "n": g.n,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "h": h,
        "algorithm": algorithm,
        "colours": colours,
        "bound_name": bound_name,
        "bound": bound,
        "within_bound": None if colours is None or bound is None else colours <= int(bound),
        "verified": verified,
    }


def _bench_greedy_rows(name, g, h):
    rows = []
    col, _ = greedy_hpcf(g, h)
    ok = check_conflict_free(g, col, ThresholdSpec.constant(h)).all_pass
    rows.append(_bench_row(name, g, h, "greedy", col.colours_used, "greedy", bound_value("greedy", h, g.max_degree), ok))
    col2, _, spec2 = partial_greedy(g, h)
    ok2 = check_conflict_free(g, col2, spec2).all_pass
    rows.append(_bench_row(name, g, h, "partial", col2.colours_used, None, None, ok2))
    return rows


def cmd_bench(args) -> int:
    seed = _effective_seed(args)
    h = args.h
    rows = []
    budget = SearchBudget(max_nodes=args.max_nodes, time_limit=args.timeout)
    if args.suite == "cycles":
        for n in range(4, 13):
            g = graphs.gen_cycle(n)
            res = exact_chi_pcf(g, h, budget)
            rows.append(
                _bench_row(f"C{n}", g, h, "oracle", res.value, None, None, res.status == "exact")
            )
            rows.extend(_bench_greedy_rows(f"C{n}", g, h))
    elif args.suite == "subdivisions":
        for n in range(4, 7):
            g = graphs.gen_subdivided_complete(n)
            name = f"K{n}sub"
            if n <= 5:
                res = exact_chi_pcf(g, h, budget)
                bound = g.max_degree + 1  # tight family: value equals maxdeg+1
                rows.append(_bench_row(name, g, h, "oracle", res.value, "maxdeg+1", bound, res.status == "exact"))
            rows.extend(_bench_greedy_rows(name, g, h))
    elif args.suite == "random":
        for i in range(args.instances):
            g = graphs.gen_random_graph(args.n, args.p, mix(seed, i))
            rows.extend(_bench_greedy_rows(f"G{i}", g, h))
    elif args.suite == "regular":
        for i in range(args.instances):
            g = graphs.gen_random_regular(args.n, args.d, mix(seed, i))
            rows.extend(_bench_greedy_rows(f"R{i}", g, h))
    else:
        raise ValueError(f"unknown suite {args.suite!r}")
    rows.sort(key=lambda r: (r["graph"], r["h"], r["algorithm"]))
    payload = {"suite": args.suite, "seed": seed, "rows": rows}
    header = f"{'graph':<10}{'n':>5}{'maxd':>6}{'mind':>6}{'h':>3}  {'algorithm':<10}{'colours':>8}  {'bound':>8}  {'within':>7}  {'ok':>3}"
    lines = [header, "-" * len(header)]
    for r in rows:
        bound = "-" if r["bound"] is None else f"{r['bound']:.1f}"
        within = "-" if r["within_bound"] is None else str(r["within_bound"])
        colours = "-" if r["colours"] is None else str(r["colours"])
        lines.append(
            f"{r['graph']:<10}{r['n']:>5}{r['max_degree']:>6}{r['min_degree']:>6}{r['h']:>3}  "
            f"{r['algorithm']:<10}{colours:>8}  {bound:>8}  {within:>7}  {str(r['verified']):>3}"
        )
    lines.append(f"seed: {seed}")
    _emit(args, payload, lines)
    return EXIT_OK if all(r["verified"] for r in rows) else EXIT_VERIFY


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pcf", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--out", default=None)

    p = sub.add_parser("gen", help="generate a graph as .col text")
    common(p)
    p.add_argument("--family", choices=["cycle", "complete", "subdivided", "random", "regular"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--subdivide", default=None, help="'all', 'none', or pairs like 0-1,2-3")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("colour", help="deterministic greedy colourings")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--algo", choices=["greedy", "partial", "degenerate"], default="greedy")
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--trace", default=None, help="write the run trace as JSON")
    p.set_defaults(fn=cmd_colour)

    p = sub.add_parser("verify", help="check a colouring against witness demands")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--inside", type=int, default=None)
    p.add_argument("--outside", type=int, default=None)
    p.add_argument("--degree-threshold", type=float, default=None)
    p.add_argument("--odd", action="store_true", help="gate on odd-multiplicity counts")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("precolour", help="large-min-degree randomized precolouring")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--mindeg", action="store_true", help="accepted for symmetry; this is the only mode")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-restarts", type=int, default=20)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(fn=cmd_precolour)

    p = sub.add_parser("nibble", help="randomized recolouring rounds with restarts")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--variant", choices=["A", "B"], required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--h0", type=int, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--max-restarts", type=int, default=20)
    p.add_argument("--precolour", default=None, help="'greedy', 'partial', or a colouring JSON path")
    p.set_defaults(fn=cmd_nibble)

    p = sub.add_parser("pipeline", help="composed colouring pipelines")
    common(p)
    p.add_argument("which", choices=["cor13", "cor17"])
    p.add_argument("--graph", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--eta", type=int, default=None)
    p.add_argument("--max-restarts", type=int, default=20)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--desk", action="store_true", default=True)
    mode.add_argument("--strict", action="store_true", default=False)
    p.set_defaults(fn=cmd_pipeline)

    p = sub.add_parser("oracle", help="exact minimum colour count on small graphs")
    common(p)
    p.add_argument("--graph", required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--target", choices=["pcf", "odd"], default="pcf")
    p.add_argument("--max-nodes", type=int, default=50_000_000)
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("prob", help="probability bounds and validators")
    common(p)
    psub = p.add_subparsers(dest="prob_cmd", required=True)
    pt = psub.add_parser("tail")
    common(pt)
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--p", type=float, required=True)
    pt.add_argument("--t", type=int, required=True)
    pt.set_defaults(fn=cmd_prob)
    pd = psub.add_parser("check-dominance")
    common(pd)
    pd.add_argument("--n", type=int, default=60)
    pd.add_argument("--p", type=float, default=0.3)
    pd.add_argument("--trials", type=int, default=100_000)
    pd.set_defaults(fn=cmd_prob)

    p = sub.add_parser("bench", help="bound-comparison tables over graph suites")
    common(p)
    p.add_argument("--suite", choices=["cycles", "subdivisions", "random", "regular"], required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--n", type=int, default=80)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--d", type=int, default=6)
    p.add_argument("--instances", type=int, default=5)
    p.add_argument("--max-nodes", type=int, default=50_000_000)
    p.add_argument("--timeout", type=float, default=None)
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.fn(args)
    except (ValueError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
