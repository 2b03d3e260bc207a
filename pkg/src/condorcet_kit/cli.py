"""Command-line interface.

Subcommands: exact, recursive, bound, series, curve, simulate, verify, decide,
serve. All numeric output is emitted with 17 significant digits in csv/json
(lossless double round-trip) and 6 in plain format.

Exit codes: 0 success, 2 usage error, 3 theorem-hypothesis violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bayesvote, curves, simkit, verify
from .errors import HypothesisViolation
from .exactprob import (
    EnsembleConfig,
    brute_force_majority_prob,
    chebyshev_lower_bound,
    exact_majority_prob,
    lemma1_partial_sum,
    recursive_majority_prob,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3
EXIT_VERIFY_FAILED = 4

FORMATS = ("json", "csv", "plain")


def _fmt(x: float | None, fmt: str) -> str:
    if x is None:
        return ""
    if fmt == "plain":
        return f"{x:.6g}"
    return f"{x:.17g}"


def _parse_p_list(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"could not parse p list {text!r}")
    if not values:
        raise ValueError("p list is empty")
    for p in values:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {p}")
    return values


def _parse_votes(text: str) -> bayesvote.VoteVector:
    """Accept '+1,-1,+1', '+1 -1 +1', or the compact '+-+' form."""
    stripped = text.strip()
    if stripped and set(stripped) <= {"+", "-"}:
        return bayesvote.VoteVector([1 if c == "+" else -1 for c in stripped])
    tokens = stripped.replace(",", " ").split()
    try:
        return bayesvote.VoteVector([int(t) for t in tokens])
    except ValueError:
        raise ValueError(f"could not parse vote string {text!r}; expected ±1 entries")


def _emit_record(record: dict, fmt: str, plain_key: str) -> None:
    """Print a single-result record: JSON object, one-row CSV, or one plain value."""
    if fmt == "json":
        print(json.dumps(record))
    elif fmt == "csv":
        keys = list(record)
        print(",".join(keys))
        print(",".join(_fmt(v, fmt) if isinstance(v, float) else str(v) for v in record.values()))
    else:
        value = record[plain_key]
        print(_fmt(value, fmt) if isinstance(value, float) else value)


def cmd_exact(args) -> int:
    result = exact_majority_prob(EnsembleConfig(args.n, args.p))
    _emit_record(
        {"n": args.n, "p": args.p, "value": result.value, "method": result.method.value},
        args.format,
        plain_key="value",
    )
    return EXIT_OK


def cmd_recursive(args) -> int:
    result = recursive_majority_prob(EnsembleConfig(args.n, args.p))
    record = {"n": args.n, "p": args.p, "value": result.value, "method": result.method.value}
    if result.note:
        record["note"] = result.note
    _emit_record(record, args.format, plain_key="value")
    return EXIT_OK


def cmd_brute(args) -> int:
    result = brute_force_majority_prob(EnsembleConfig(args.n, args.p))
    _emit_record(
        {"n": args.n, "p": args.p, "value": result.value, "method": result.method.value},
        args.format,
        plain_key="value",
    )
    return EXIT_OK


def cmd_bound(args) -> int:
    result = chebyshev_lower_bound(EnsembleConfig(args.n, args.p))
    record = {"n": result.n, "p": args.p, "lower": result.lower, "alpha": result.alpha}
    if args.format == "plain":
        print(f"lower={_fmt(result.lower, 'plain')} alpha={_fmt(result.alpha, 'plain')}")
    else:
        _emit_record(record, args.format, plain_key="lower")
    return EXIT_OK


def cmd_series(args) -> int:
    result = lemma1_partial_sum(args.p, args.tolerance)
    record = {
        "p": args.p,
        "tolerance": args.tolerance,
        "partial_sum": result.partial_sum,
        "terms_used": result.terms_used,
        "tail_bound": result.tail_bound,
        "target": result.target,
    }
    if args.format == "plain":
        print(
            f"partial_sum={_fmt(result.partial_sum, 'plain')} "
            f"terms_used={result.terms_used} tail_bound={_fmt(result.tail_bound, 'plain')}"
        )
    else:
        _emit_record(record, args.format, plain_key="partial_sum")
    return EXIT_OK


def cmd_simulate(args) -> int:
    report = simkit.simulate_ensemble(
        EnsembleConfig(args.n, args.p), args.trials, args.seed, confidence_z=args.z
    )
    record = {
        "n": args.n,
        "p": args.p,
        "trials": report.trials,
        "successes": report.successes,
        "estimate": report.estimate,
        "ci_low": report.ci_low,
        "ci_high": report.ci_high,
        "confidence_z": report.confidence_z,
        "seed": report.seed,
    }
    if args.format == "plain":
        print(
            f"estimate={_fmt(report.estimate, 'plain')} "
            f"ci=[{_fmt(report.ci_low, 'plain')}, {_fmt(report.ci_high, 'plain')}] "
            f"successes={report.successes}/{report.trials} seed={report.seed}"
        )
    else:
        _emit_record(record, args.format, plain_key="estimate")
    return EXIT_OK


def cmd_curve(args) -> int:
    p_values = _parse_p_list(args.p)
    points = list(
        curves.generate_curve(
            p_values,
            args.n_max,
            include_simulation=args.simulate,
            trials=args.trials,
            seed=args.seed,
        )
    )
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "n": pt.n,
                        "p": pt.p,
                        "exact": pt.exact,
                        "recursive": pt.recursive,
                        "bound": pt.bound,
                        "simulated": pt.simulated,
                    }
                    for pt in points
                ]
            )
        )
    else:
        fmt = args.format
        print(curves.CSV_HEADER)
        for pt in points:
            print(
                f"{pt.n},{_fmt(pt.p, fmt)},{_fmt(pt.exact, fmt)},"
                f"{_fmt(pt.recursive, fmt)},{_fmt(pt.bound, fmt)},{_fmt(pt.simulated, fmt)}"
            )
    return EXIT_OK


def cmd_verify(args) -> int:
    p_grid = _parse_p_list(args.p)
    summary = verify.run_verification(args.n_max, p_grid, args.trials, args.seed)
    print(json.dumps(summary.to_dict(), indent=2))
    return EXIT_OK if summary.passed else EXIT_VERIFY_FAILED


def cmd_decide(args) -> int:
    votes = _parse_votes(args.votes)
    priors = bayesvote.PriorPair(args.prior_pos, 1.0 - args.prior_pos)
    majority = bayesvote.majority_decide(votes)
    log_ratio = bayesvote.llr(votes, args.p)
    map_result = bayesvote.map_decide(votes, args.p, priors)
    record = {
        "votes": list(votes.votes),
        "tally": bayesvote.tally(votes),
        "majority": majority,
        "llr": log_ratio,
        "map": map_result.label,
        "map_tie": map_result.tie,
    }
    if args.format == "json":
        print(json.dumps(record))
    elif args.format == "csv":
        print("tally,majority,llr,map,map_tie")
        print(
            f"{record['tally']},{record['majority']},{_fmt(log_ratio, 'csv')},"
            f"{map_result.label},{map_result.tie}"
        )
    else:
        print(
            f"majority={majority} llr={_fmt(log_ratio, 'plain')} "
            f"map={map_result.label}" + (" (tie broken toward +1)" if map_result.tie else "")
        )
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_format(parser: argparse.ArgumentParser, default: str = "plain") -> None:
    parser.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condorcet-kit",
        description="Majority-vote reliability: exact probabilities, bounds, simulation, decisions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, doc in (
        ("exact", cmd_exact, "Exact majority-correctness probability (binomial tail)."),
        ("recursive", cmd_recursive, "Majority-correctness probability via the size recursion."),
        ("brute-force", cmd_brute, "Oracle value by enumerating all vote outcomes (small n)."),
    ):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument("--n", type=int, required=True, help="odd ensemble size")
        sp.add_argument("--p", type=float, required=True, help="per-classifier accuracy in [0,1]")
        _add_format(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("bound", help="Chebyshev lower bound 1 - alpha/n (requires p > 1/2).")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    _add_format(sp)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("series", help="Partial sum of the convergence series (limit 1).")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--tolerance", type=float, default=1e-9)
    _add_format(sp)
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("simulate", help="Seeded Monte Carlo estimate with Wilson interval.")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--trials", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--z", type=float, default=1.96, help="Wilson interval z value")
    _add_format(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("curve", help="Probability-vs-n curve data for one or more p values.")
    sp.add_argument("--p", type=str, required=True, help="comma-separated p values")
    sp.add_argument("--n-max", type=int, required=True, help="largest odd ensemble size")
    sp.add_argument("--simulate", action="store_true", help="add a simulated column")
    sp.add_argument("--trials", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    _add_format(sp, default="csv")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("verify", help="Cross-validate all calculators; exit 4 on any failure.")
    sp.add_argument("--n-max", type=int, default=15)
    sp.add_argument("--p", type=str, default="0.5,0.6,0.9", help="comma-separated p grid")
    sp.add_argument("--trials", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decide", help="Majority / LLR / MAP decisions for a ±1 vote string.")
    sp.add_argument("--votes", type=str, required=True, help="e.g. '+1,-1,+1' or '+-+'")
    sp.add_argument("--p", type=float, required=True, help="shared accuracy in (0,1)")
    sp.add_argument("--prior-pos", type=float, default=0.5, help="prior of label +1")
    _add_format(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("serve", help="Run the HTTP service exposing the same operations.")
    sp.add_argument("--host", type=str, default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypothesisViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
