"""Command-line front end: generate, propagate, solve, reduce, verify.

Exit codes: 0 success, 1 a verification property failed, 2 usage or input
error.  All randomized subcommands are reproducible from --seed; --threads
(default from TSSLAB_THREADS) controls solver parallelism.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import verify
from .circuits import parse_circuit
from .instance import (
    GeneratorConfig,
    Instance,
    ParseError,
    generate_random,
    parse_instance,
    write_instance,
)
from .gadgets import ReducedInstance, reduce_thresholds_to_two
from .propagation import PropagationTrace, activate
from .reductions import (
    choose_gap_padding,
    clique_to_max_influence,
    is_to_influence_decision,
    is_to_min_closed_influence,
    mcs_to_tss,
    rho_preset,
)
from .solvers import (
    SolveResult,
    greedy_target_set,
    k_influence,
    min_open_influence_unanimity,
    optimal_target_set,
    unanimity_target_set_2approx,
)

SOLVE_PROBLEMS = (
    "target-set",
    "greedy-target-set",
    "unanimity-2approx",
    "k-influence",
    "unanimity-min-open",
)

REDUCTIONS = ("mcs", "thresholds-to-two", "clique", "is-decision", "is-min-closed")


def format_trace(trace: PropagationTrace) -> str:
    lines = ["seed " + " ".join(map(str, sorted(trace.seed)))]
    for i, newly in enumerate(trace.rounds[1:], start=1):
        lines.append(f"round {i} " + " ".join(map(str, sorted(newly))))
    lines.append(f"rounds {trace.round_count}")
    lines.append(f"closed {trace.closed_influence}")
    lines.append(f"open {trace.open_influence}")
    return "\n".join(lines) + "\n"


def format_result(res: SolveResult) -> str:
    lines = [f"problem {res.problem}"]
    if res.k is not None:
        lines.append(f"k {res.k}")
    if res.goal is not None:
        lines.append(f"goal {res.goal}")
    if res.mode is not None:
        lines.append(f"mode {res.mode}")
    if res.seed is None:
        lines.append("seed none")
    else:
        lines.append("seed " + " ".join(map(str, sorted(res.seed))))
    lines.append(f"value {res.value if res.value is not None else 'none'}")
    lines.append(f"optimal {'true' if res.optimal else 'false'}")
    lines.append(f"explored {res.explored}")
    return "\n".join(lines) + "\n"


def format_params(r: ReducedInstance) -> str:
    lines = [f"reduction {r.kind}"]
    if r.k is not None:
        lines.append(f"k {r.k}")
    if r.ell is not None:
        lines.append(f"ell {r.ell}")
    p = r.params
    if p is not None:
        lines.append(f"g {p.g}")
        lines.append(f"h {p.h}")
        if p.x is not None:
            lines.append(f"x {p.x}")
        if p.rho_label is not None:
            lines.append(f"rho {p.rho_label}")
    lines.append(f"vertices {r.instance.n}")
    lines.append(f"edges {r.instance.m}")
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _parse_seeds(raw: str) -> list[int]:
    if not raw.strip():
        return []
    try:
        return [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise ParseError(f"bad seed list {raw!r}; expected comma-separated integers")


def _default_threads() -> int:
    raw = os.environ.get("TSSLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsslab",
        description="Threshold-activation instances: generate, propagate, solve, "
        "reduce, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance")
    gen.add_argument("-n", type=int, required=True, help="vertex count")
    gen.add_argument("-p", type=float, required=True, help="edge probability")
    gen.add_argument(
        "--thresholds",
        default="constant:1",
        help="constant:<c>, majority, unanimity, or uniform",
    )
    gen.add_argument("--seed", type=int, default=0, help="rng seed")
    gen.add_argument("-o", "--output", default=None)

    prop = sub.add_parser("propagate", help="run the activation process")
    prop.add_argument("-i", "--input", required=True)
    prop.add_argument("-s", "--seeds", default="", help="comma-separated vertex ids")
    prop.add_argument("-o", "--output", default=None)

    solve = sub.add_parser("solve", help="run a solver")
    solve.add_argument("-i", "--input", required=True)
    solve.add_argument("--problem", choices=SOLVE_PROBLEMS, default="target-set")
    solve.add_argument("-k", type=int, default=None)
    solve.add_argument(
        "-l", "--ell", type=int, default=None, help="decision bound on the value"
    )
    solve.add_argument("--mode", choices=("open", "closed"), default="closed")
    solve.add_argument("--goal", choices=("max", "min"), default="max")
    solve.add_argument("--cap", type=int, default=None, help="target-set size cap")
    solve.add_argument("--threads", type=int, default=_default_threads())
    solve.add_argument("-o", "--output", default=None)

    red = sub.add_parser("reduce", help="compile an instance transformation")
    red.add_argument("name", choices=REDUCTIONS)
    red.add_argument("-i", "--input", required=True)
    red.add_argument("-o", "--output", required=True, help="output directory")
    red.add_argument("-k", type=int, default=None)
    red.add_argument("--h", type=int, default=None, dest="h")
    red.add_argument("--rho", default=None, help="const:<c>, linear:<c>, poly:<c>,<d>")
    red.add_argument("--mode", choices=("open", "closed"), default="closed")

    ver = sub.add_parser("verify", help="run a property suite")
    ver.add_argument("suite", choices=sorted(verify.SUITES))
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--graphs", type=int, default=None)
    ver.add_argument("--n", type=int, default=None, dest="max_n")
    ver.add_argument("--seed", type=int, default=None)
    ver.add_argument("--max-inputs", type=int, default=None)
    ver.add_argument("--max-gates", type=int, default=None)
    ver.add_argument("--peels", type=int, default=None)
    ver.add_argument("--random-seeds", type=int, default=None)
    ver.add_argument("--chains", type=int, default=None, dest="max_chain")
    ver.add_argument("--k-max", type=int, default=None)
    return parser


def _cmd_gen(args: argparse.Namespace) -> int:
    mode, _, const = args.thresholds.partition(":")
    cfg = GeneratorConfig(
        n=args.n,
        edge_probability=args.p,
        threshold_mode=mode,
        rng_seed=args.seed,
        constant=int(const) if const else 1,
    )
    _emit(write_instance(generate_random(cfg)), args.output)
    return 0


def _cmd_propagate(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.input))
    trace = activate(inst, _parse_seeds(args.seeds))
    _emit(format_trace(trace), args.output)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.input))
    if args.problem == "target-set":
        res = optimal_target_set(inst, args.cap, threads=args.threads)
    elif args.problem == "greedy-target-set":
        res = greedy_target_set(inst)
    elif args.problem == "unanimity-2approx":
        res = unanimity_target_set_2approx(inst)
    elif args.problem == "k-influence":
        if args.k is None:
            raise ParseError("k-influence needs -k")
        res = k_influence(
            inst, args.k, args.mode, args.goal, threads=args.threads
        )
    else:
        if args.k is None:
            raise ParseError("unanimity-min-open needs -k")
        res = min_open_influence_unanimity(inst, args.k)
    text = format_result(res)
    if args.ell is not None and res.value is not None:
        goal = res.goal or "min"
        hit = res.value <= args.ell if goal == "min" else res.value >= args.ell
        text += f"decision {'true' if hit else 'false'}\n"
    _emit(text, args.output)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.name == "mcs":
        r = mcs_to_tss(parse_circuit(_read(args.input)))
    elif args.name == "thresholds-to-two":
        r = reduce_thresholds_to_two(parse_instance(_read(args.input)))
    elif args.name == "clique":
        if args.k is None:
            raise ParseError("the clique reduction needs -k")
        g = parse_instance(_read(args.input)).graph
        if args.rho is not None:
            params = choose_gap_padding(
                args.k, rho_preset(args.rho), "clique", rho_label=args.rho
            )
            r = clique_to_max_influence(g, args.k, params)
        else:
            r = clique_to_max_influence(g, args.k, h=args.h)
    elif args.name == "is-decision":
        if args.k is None:
            raise ParseError("the is-decision reduction needs -k")
        g = parse_instance(_read(args.input)).graph
        r = is_to_influence_decision(g, args.k, args.mode)
    else:
        if args.k is None:
            raise ParseError("the is-min-closed reduction needs -k")
        g = parse_instance(_read(args.input)).graph
        if args.rho is not None:
            params = choose_gap_padding(
                args.k, rho_preset(args.rho), "min-closed", rho_label=args.rho
            )
            r = is_to_min_closed_influence(g, args.k, params)
        else:
            r = is_to_min_closed_influence(g, args.k, h=args.h)
    (outdir / "instance.tss").write_text(write_instance(r.instance), encoding="utf-8")
    (outdir / "provenance.txt").write_text(r.provenance_text(), encoding="utf-8")
    (outdir / "params.txt").write_text(format_params(r), encoding="utf-8")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suite = verify.SUITES[args.suite]
    kwargs = {}
    for name in (
        "trials",
        "graphs",
        "max_n",
        "seed",
        "max_inputs",
        "max_gates",
        "peels",
        "random_seeds",
        "max_chain",
        "k_max",
    ):
        value = getattr(args, name, None)
        if value is not None:
            kwargs[name] = value
    import inspect

    accepted = set(inspect.signature(suite).parameters)
    unknown = set(kwargs) - accepted
    if unknown:
        raise ParseError(
            f"suite {args.suite!r} does not take {sorted(unknown)}; "
            f"it accepts {sorted(accepted)}"
        )
    outcomes = suite(**kwargs)
    failed = False
    for oc in outcomes:
        if oc.passed:
            print(f"PASS {oc.name}" + (f" - {oc.detail}" if oc.detail else ""))
        else:
            failed = True
            print(f"FAIL {oc.name}")
            for line in oc.detail.splitlines():
                print(f"  {line}")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "propagate": _cmd_propagate,
        "solve": _cmd_solve,
        "reduce": _cmd_reduce,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
