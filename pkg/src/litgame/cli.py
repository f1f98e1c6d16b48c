"""Command-line surface: posterior, scenarios, simulate, sweep, invert.

Exit-code contract: 0 success, 1 domain error (undefined posterior,
unreachable target, oversized grid, failed agreement, I/O failure),
2 usage or parse error, 3 internal invariant violation.  No environment
variables are consulted; a run is fully reproducible from its argv.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .errors import (
    AmbiguousScenario,
    GridTooLarge,
    NoPositives,
    ParseError,
    UndefinedPosterior,
    UnreachableTarget,
    ValidationError,
)
from .inference import (
    PosteriorReport,
    PriorBelief,
    Probability,
    TestCharacteristics,
    full_report,
    required_prior,
)
from .scenarios import Scenario, catalog, evaluate, parse_scenario
from .simulate import SimConfig, agreement_check, simulate
from .sweep import Axis, GridSpec, run_sweep, write_csv

__all__ = ["build_parser", "main", "entrypoint"]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# ---------------------------------------------------------------------------
# Flag parsing
# ---------------------------------------------------------------------------


def _probability_flag(text: str) -> float:
    try:
        return float(Probability(float(text)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def _seed_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {value}")
    return value


def _positive_float_flag(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be a positive number, got {value}")
    return value


def _axis_flag(text: str) -> Axis:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return Axis.fixed(float(parts[0]))
        if len(parts) == 3:
            return Axis(lo=float(parts[0]), hi=float(parts[1]), step=float(parts[2]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad axis {text!r}: {exc}") from None
    raise argparse.ArgumentTypeError(
        f"bad axis {text!r}: expected a single number or LO:HI:STEP"
    )


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="litgame",
        description=(
            "Reliability engine for two-outcome litigation games: exact posterior "
            "verdict probabilities, a built-in scenario catalog, seeded Monte Carlo "
            "verification, parameter sweeps, and prior inversion."
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # posterior -------------------------------------------------------------
    posterior = subparsers.add_parser(
        "posterior",
        help="full posterior report for one (prior, sensitivity, specificity) triple",
    )
    _add_numeric_flags(posterior)
    posterior.add_argument(
        "--config", default=None, help="scenario document supplying defaults for the flags"
    )
    posterior.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    posterior.set_defaults(handler=_cmd_posterior)

    # scenarios ---------------------------------------------------------------
    scenarios_cmd = subparsers.add_parser(
        "scenarios", help="evaluate the four built-in scenarios"
    )
    scenarios_cmd.add_argument(
        "--name", default=None, help="only the scenario with this name (e.g. random/risk-loving)"
    )
    scenarios_cmd.add_argument(
        "--format", choices=("table", "json", "csv"), default="table", help="output format"
    )
    scenarios_cmd.set_defaults(handler=_cmd_scenarios)

    # simulate ----------------------------------------------------------------
    simulate_cmd = subparsers.add_parser(
        "simulate", help="Monte Carlo run with an agreement check against the analytic PPV"
    )
    source = simulate_cmd.add_mutually_exclusive_group()
    source.add_argument("--scenario", default=None, help="built-in scenario name")
    source.add_argument("--config", default=None, help="scenario document path")
    _add_numeric_flags(simulate_cmd)
    simulate_cmd.add_argument(
        "--trials", type=_positive_int_flag, default=100_000, help="number of simulated defendants"
    )
    simulate_cmd.add_argument(
        "--seed", type=_seed_flag, default=42, help="64-bit unsigned generator seed"
    )
    simulate_cmd.add_argument(
        "--z", type=_positive_float_flag, default=4.0, help="agreement threshold in standard errors"
    )
    simulate_cmd.add_argument(
        "--chunk-size", type=_positive_int_flag, default=65536, help="work-partition granularity"
    )
    simulate_cmd.add_argument(
        "--workers", type=_positive_int_flag, default=1, help="thread count for chunk evaluation"
    )
    simulate_cmd.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    simulate_cmd.set_defaults(handler=_cmd_simulate)

    # sweep ---------------------------------------------------------------
    sweep_cmd = subparsers.add_parser(
        "sweep", help="evaluate a parameter grid and export it as CSV"
    )
    sweep_cmd.add_argument(
        "--prior", type=_axis_flag, required=True, help="axis: a number or LO:HI:STEP"
    )
    sweep_cmd.add_argument(
        "--sensitivity", type=_axis_flag, required=True, help="axis: a number or LO:HI:STEP"
    )
    sweep_cmd.add_argument(
        "--specificity", type=_axis_flag, required=True, help="axis: a number or LO:HI:STEP"
    )
    sweep_cmd.add_argument("--out", default=None, help="output path (default: stdout)")
    sweep_cmd.add_argument(
        "--max-cells", type=_positive_int_flag, default=1_000_000, help="grid size cap"
    )
    sweep_cmd.add_argument(
        "--format", choices=("csv",), default="csv", help="output format (csv only)"
    )
    sweep_cmd.set_defaults(handler=_cmd_sweep)

    # invert --------------------------------------------------------------
    invert = subparsers.add_parser(
        "invert", help="prior required for the PPV to reach a target"
    )
    invert.add_argument("--sensitivity", type=_probability_flag, required=True)
    invert.add_argument("--specificity", type=_probability_flag, required=True)
    invert.add_argument(
        "--target", type=_probability_flag, required=True, help="target PPV in (0, 1)"
    )
    invert.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )
    invert.set_defaults(handler=_cmd_invert)

    return parser


def _add_numeric_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--prior", type=_probability_flag, default=None, help="prior guilt probability")
    cmd.add_argument("--sensitivity", type=_probability_flag, default=None)
    cmd.add_argument("--specificity", type=_probability_flag, default=None)


# ---------------------------------------------------------------------------
# Entrypoints
# ---------------------------------------------------------------------------


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its own message (usage error or --help).
        return 0 if exc.code is None else int(exc.code)
    try:
        return args.handler(args)
    except (ParseError, AmbiguousScenario, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UndefinedPosterior, UnreachableTarget, GridTooLarge, NoPositives, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # anything else is a broken invariant, not user error
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    raise SystemExit(main())


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_posterior(args: argparse.Namespace) -> int:
    prior, chars, _ = _resolve_inputs(args, allow_scenario=False)
    report = full_report(prior, chars)
    if report.ppv is None:
        raise UndefinedPosterior(
            "a positive verdict has probability zero for these parameters, "
            "so the posterior given a positive is undefined"
        )
    if args.format == "json":
        _print_json(report.as_dict())
        return EXIT_OK
    _print_kv_table(_report_items(report))
    return EXIT_OK


def _cmd_scenarios(args: argparse.Namespace) -> int:
    cells = catalog()
    if args.name is not None:
        cells = [scenario for scenario in cells if scenario.name == args.name]
        if not cells:
            known = ", ".join(scenario.name for scenario in catalog())
            raise ParseError(f"unknown scenario {args.name!r}; known scenarios: {known}")
    evaluated = [(scenario, evaluate(scenario)) for scenario in cells]

    if args.format == "json":
        _print_json([{"scenario": s.name, **r.as_dict()} for s, r in evaluated])
        return EXIT_OK

    headers = ["scenario", "prior", "sensitivity", "specificity", "p_positive", "ppv"]
    rows = [
        [
            scenario.name,
            _fmt6(report.prior.p_guilty),
            _fmt6(report.chars.sensitivity),
            _fmt6(report.chars.specificity),
            _fmt6(report.p_positive),
            _fmt6(report.ppv),
        ]
        for scenario, report in evaluated
    ]
    if args.format == "csv":
        print(",".join(headers))
        for row in rows:
            print(",".join(row))
        return EXIT_OK
    _print_columns(headers, rows)
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    prior, chars, label = _resolve_inputs(args, allow_scenario=True)
    config = SimConfig(n_trials=args.trials, seed=args.seed, chunk_size=args.chunk_size)
    result = simulate(prior, chars, config, workers=args.workers)
    analytic = full_report(prior, chars)
    verdict = agreement_check(result, analytic, z=args.z)

    if args.format == "json":
        _print_json(
            {
                "scenario": label,
                "trials": config.n_trials,
                "seed": config.seed,
                **result.as_dict(),
                "agreement": verdict.as_dict(),
            }
        )
        return EXIT_OK if verdict.passed else EXIT_DOMAIN

    counts = result.counts
    items = [
        ("scenario", label),
        ("trials", str(config.n_trials)),
        ("seed", str(config.seed)),
        ("true_positive", str(counts.true_positive)),
        ("false_positive", str(counts.false_positive)),
        ("true_negative", str(counts.true_negative)),
        ("false_negative", str(counts.false_negative)),
        ("ppv_hat", _fmt6(result.ppv_hat)),
        ("npv_hat", _fmt6(result.npv_hat)),
        ("standard_error_ppv", _fmt6(result.standard_error_ppv)),
        ("ci95_ppv", _fmt_interval(result.ci95_ppv)),
        ("analytic_ppv", _fmt6(verdict.analytic_ppv)),
        ("delta", _fmt6(verdict.delta)),
        ("z", _fmt6(verdict.z)),
        ("margin", _fmt6(verdict.margin)),
        ("agreement", "PASS" if verdict.passed else "FAIL"),
    ]
    _print_kv_table(items)
    return EXIT_OK if verdict.passed else EXIT_DOMAIN


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = GridSpec(
        prior_axis=args.prior,
        sensitivity_axis=args.sensitivity,
        specificity_axis=args.specificity,
        max_cells=args.max_cells,
    )
    rows = run_sweep(grid)
    if args.out is None:
        write_csv(rows, sys.stdout)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="") as stream:
        write_csv(rows, stream)
    return EXIT_OK


def _cmd_invert(args: argparse.Namespace) -> int:
    chars = TestCharacteristics(Probability(args.sensitivity), Probability(args.specificity))
    prior = required_prior(chars, args.target)
    if args.format == "json":
        _print_json(
            {
                "sensitivity": float(chars.sensitivity),
                "specificity": float(chars.specificity),
                "target_ppv": args.target,
                "required_prior": float(prior),
            }
        )
        return EXIT_OK
    _print_kv_table(
        [
            ("sensitivity", _fmt6(chars.sensitivity)),
            ("specificity", _fmt6(chars.specificity)),
            ("target_ppv", _fmt6(args.target)),
            ("required_prior", _fmt6(prior)),
        ]
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Input resolution
# ---------------------------------------------------------------------------


def _resolve_inputs(
    args: argparse.Namespace, allow_scenario: bool
) -> tuple[PriorBelief, TestCharacteristics, str]:
    """Combine scenario/config defaults with explicit numeric flags.

    Explicit flags always win; the label reverts to "custom" as soon as
    any flag overrides a scenario or config value.
    """
    base_prior: float | None = None
    base_sens: float | None = None
    base_spec: float | None = None
    label = "custom"

    scenario: Scenario | None = None
    if allow_scenario and args.scenario is not None:
        matches = [s for s in catalog() if s.name == args.scenario]
        if not matches:
            known = ", ".join(s.name for s in catalog())
            raise ParseError(f"unknown scenario {args.scenario!r}; known scenarios: {known}")
        scenario = matches[0]
    elif args.config is not None:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read config {args.config!r}: {exc}") from exc
        scenario = parse_scenario(text)

    if scenario is not None:
        prior, chars = scenario.resolve()
        base_prior = float(prior.p_guilty)
        base_sens = float(chars.sensitivity)
        base_spec = float(chars.specificity)
        label = scenario.name
        if any(v is not None for v in (args.prior, args.sensitivity, args.specificity)):
            label = "custom"

    prior_v = args.prior if args.prior is not None else base_prior
    sens_v = args.sensitivity if args.sensitivity is not None else base_sens
    spec_v = args.specificity if args.specificity is not None else base_spec
    missing = [
        flag
        for flag, value in (
            ("--prior", prior_v),
            ("--sensitivity", sens_v),
            ("--specificity", spec_v),
        )
        if value is None
    ]
    if missing:
        raise ParseError(f"missing value(s) for {', '.join(missing)}")
    return (
        PriorBelief(Probability(prior_v)),
        TestCharacteristics(Probability(sens_v), Probability(spec_v)),
        label,
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _fmt6(value) -> str:
    """Six-decimal rendering with explicit markers for absent and infinite."""
    if value is None:
        return "absent"
    v = float(value)
    if v == float("inf"):
        return "inf"
    return f"{v:.6f}"


def _fmt_interval(interval) -> str:
    if interval is None:
        return "absent"
    return f"[{_fmt6(interval[0])}, {_fmt6(interval[1])}]"


def _report_items(report: PosteriorReport) -> list[tuple[str, str]]:
    return [
        ("prior.p_guilty", _fmt6(report.prior.p_guilty)),
        ("chars.sensitivity", _fmt6(report.chars.sensitivity)),
        ("chars.specificity", _fmt6(report.chars.specificity)),
        ("p_positive", _fmt6(report.p_positive)),
        ("ppv", _fmt6(report.ppv)),
        ("p_innocent_given_positive", _fmt6(report.p_innocent_given_positive)),
        ("npv", _fmt6(report.npv)),
        ("p_guilty_given_negative", _fmt6(report.p_guilty_given_negative)),
        ("lr_positive", _fmt6(report.lr_positive)),
        ("lr_negative", _fmt6(report.lr_negative)),
    ]


def _print_kv_table(items: list[tuple[str, str]]) -> None:
    width = max(len(key) for key, _ in items)
    for key, value in items:
        print(f"{key.ljust(width)}  {value}")


def _print_columns(headers: list[str], rows: list[list[str]]) -> None:
    """Fixed-width table: first column left-aligned, the rest right-aligned."""
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [headers] + rows
    for line in lines:
        first = line[0].ljust(widths[0])
        rest = [cell.rjust(widths[i + 1]) for i, cell in enumerate(line[1:])]
        print("  ".join([first, *rest]))


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


if __name__ == "__main__":
    raise SystemExit(main())
