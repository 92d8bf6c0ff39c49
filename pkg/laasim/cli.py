"""Command-line front end: ``laasim {synth,check,run,threshold,sweep}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from loguru import logger
from tabulate import tabulate

from laasim.analysis import (
    STUDIES,
    SweepRow,
    compute_metrics,
    find_min_laa,
    render_table,
    static_dynamic_cells,
    sweep_tables,
)
from laasim.attacks import (
    AttackScenario,
    dynamic_laa,
    feedback_adversary,
    load_scenario_file,
    static_laa,
)
from laasim.dynamics import SimulationConfig, run
from laasim.errors import (
    BracketError,
    NetworkValidationError,
    NumericalInstabilityError,
    ScenarioError,
)
from laasim.grid import (
    GB36_FIXTURE,
    build_check_suites,
    dump_network,
    load_gb36,
    load_network_file,
    parse_network,
    synthesize_gb36,
)
from laasim.grid.model import NetworkModel
from laasim.protection import ProtectionPolicy, classify_excursion
from laasim.reporting import (
    RunRecord,
    metrics_document,
    plot_trace_svg,
    run_id,
    write_events,
    write_metrics,
    write_trace_csv,
)
from laasim.services import FLEET_PRESETS, fleet_preset

OUT_DIR_ENV = "LAASIM_OUT_DIR"
DEFAULT_OUT_DIR = "runs"
BUNDLED_NETWORK = "gb36"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_BREACH = 3
EXIT_NUMERICAL = 4


def _out_dir(args: argparse.Namespace) -> Path:
    out = Path(args.out or os.environ.get(OUT_DIR_ENV) or DEFAULT_OUT_DIR)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _config(args: argparse.Namespace) -> SimulationConfig:
    return SimulationConfig(dt=args.dt, horizon=args.horizon)


def _load_model(args: argparse.Namespace) -> NetworkModel:
    if args.network == BUNDLED_NETWORK:
        model = load_gb36()
    else:
        model = load_network_file(args.network)
    return model.with_fleet(fleet_preset(args.bess)) if args.bess != "none" else model


def _write_json(path: Path, document: object) -> Path:
    text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    path.write_text(text, encoding="utf-8")
    return path


def cmd_synth(args: argparse.Namespace) -> int:
    model = synthesize_gb36(args.seed)
    target = Path(args.output) if args.output else _out_dir(args) / f"{model.name}.json"
    dump_network(model, target)
    print(target)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    path = GB36_FIXTURE if args.network == BUNDLED_NETWORK else Path(args.network)
    document = json.loads(path.read_text(encoding="utf-8"))
    model = parse_network(document, name=Path(str(args.network)).stem)
    status = EXIT_OK
    for suite in build_check_suites(model):
        print(suite.summary_table())
        try:
            suite.validate()
        except NetworkValidationError as e:
            logger.error(str(e))
            status = EXIT_INVALID
    return status


def _scenario(
    args: argparse.Namespace,
    model: NetworkModel,
    config: SimulationConfig,
) -> tuple[AttackScenario, ProtectionPolicy]:
    if args.scenario:
        parsed = load_scenario_file(args.scenario)
        if parsed.adversary is None:
            return parsed.scenario, parsed.protection
        outcome = feedback_adversary(model, parsed.adversary, config, parsed.protection)
        return outcome.scenario, parsed.protection
    if args.magnitude:
        build = dynamic_laa if args.dynamic else static_laa
        return build(args.zone, args.magnitude), ProtectionPolicy()
    return AttackScenario(), ProtectionPolicy()


def cmd_run(args: argparse.Namespace) -> int:
    model = _load_model(args)
    config = _config(args)
    scenario, policy = _scenario(args, model, config)
    identifier = run_id(model, scenario, config, policy)
    record = RunRecord.create(_out_dir(args), identifier)

    logger.info(f"Run {identifier}: '{scenario.label}' on '{model.name}'")
    trace = run(model, scenario, config, policy)
    metrics = compute_metrics(trace)
    report = classify_excursion(trace, policy)

    record.add("trace", write_trace_csv(trace, record.path("trace.csv")))
    record.add("events", write_events(trace, record.path("events.json")))
    document = metrics_document(
        metrics,
        report,
        run_id=identifier,
        scenario=scenario.label,
        network=model.name,
    )
    record.add("metrics", write_metrics(document, record.path("metrics.json")))
    record.add(
        "plot",
        plot_trace_svg(
            trace, record.path("trace.svg"), salt=identifier, title=scenario.label
        ),
    )
    record.finish()

    print(tabulate([{"run_id": identifier, **metrics.as_row()}], headers="keys"))
    if args.fail_on_breach is not None and metrics.breaches(args.fail_on_breach):
        logger.warning(
            f"COI nadir {metrics.nadir:.4f} Hz breached {args.fail_on_breach} Hz",
        )
        return EXIT_BREACH
    return EXIT_OK


def cmd_threshold(args: argparse.Namespace) -> int:
    model = _load_model(args)
    result = find_min_laa(
        model,
        args.zone,
        args.limit,
        (args.bracket[0], args.bracket[1]),
        args.tol,
        _config(args),
        dynamic=args.dynamic,
        max_workers=args.workers,
    )
    row = {"bess": args.bess, **result.as_row()}
    print(tabulate([row], headers="keys", tablefmt="simple_grid"))
    name = f"threshold-{args.zone}-{args.limit:g}-{args.bess}.json"
    _write_json(_out_dir(args) / name, row)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    model = _load_model(args)
    if args.study == "static-dynamic":
        cells = static_dynamic_cells(args.magnitude, zone=args.zone, bess=args.bess)
    elif args.study in {"location", "placement"}:
        cells = STUDIES[args.study](args.magnitude)
    else:
        cells = STUDIES[args.study](args.zone)
    rows: list[SweepRow] = sweep_tables(
        model,
        cells,
        _config(args),
        tol=args.tol,
        max_workers=args.workers,
    )
    table = render_table(rows)
    print(table)
    out = _out_dir(args)
    (out / f"sweep-{args.study}.txt").write_text(table + "\n", encoding="utf-8")
    flat = [r for row in rows for r in row.as_rows()]
    _write_json(out / f"sweep-{args.study}.json", flat)
    return EXIT_OK if all(row.ok for row in rows) else EXIT_INVALID


def _bracket(parser: argparse.ArgumentParser, bracket: Sequence[float]) -> None:
    lo, hi = bracket
    if not lo < hi or lo < 0:
        parser.error(f"--bracket needs 0 <= lo < hi, got {lo:g} {hi:g}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dt", type=float, default=0.01, help="integration step [s]")
    common.add_argument("--horizon", type=float, default=180.0, help="simulated span [s]")
    common.add_argument(
        "--out",
        default=None,
        help=f"output directory (default: ${OUT_DIR_ENV} or ./{DEFAULT_OUT_DIR})",
    )
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    network = argparse.ArgumentParser(add_help=False)
    network.add_argument(
        "network",
        help=f"network JSON file, or '{BUNDLED_NETWORK}' for the bundled synthetic model",
    )
    network.add_argument("--bess", default="none", choices=sorted(FLEET_PRESETS))
    network.add_argument("--zone", default="Z8", help="attacked zone")

    parser = argparse.ArgumentParser(
        prog="laasim",
        description="Grid frequency simulation of load-altering attacks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser(
        "synth", parents=[common], help="write a synthetic 36-zone network"
    )
    synth.add_argument("--seed", type=int, default=1)
    synth.add_argument("--output", default=None, help="target file")
    synth.set_defaults(func=cmd_synth)

    check = sub.add_parser("check", parents=[common], help="run the network checks")
    check.add_argument("network")
    check.set_defaults(func=cmd_check)

    run_p = sub.add_parser("run", parents=[common, network], help="simulate one scenario")
    run_p.add_argument("--scenario", default=None, help="scenario JSON file")
    run_p.add_argument("--magnitude", type=float, default=0.0, help="attack size [MW]")
    run_p.add_argument("--dynamic", action="store_true", help="three-step attack")
    run_p.add_argument("--fail-on-breach", type=float, default=None, metavar="LIMIT_HZ")
    run_p.set_defaults(func=cmd_run)

    threshold = sub.add_parser(
        "threshold", parents=[common, network], help="minimum attack breaching a limit"
    )
    threshold.add_argument("--limit", type=float, default=49.8)
    threshold.add_argument(
        "--bracket", type=float, nargs=2, default=[0.0, 6000.0], metavar=("LO", "HI")
    )
    threshold.add_argument("--tol", type=float, default=1.0)
    threshold.add_argument("--dynamic", action="store_true")
    threshold.add_argument("--workers", type=int, default=1)
    threshold.set_defaults(func=cmd_threshold)

    sweep = sub.add_parser("sweep", parents=[common, network], help="run a study table")
    sweep.add_argument(
        "--study", choices=[*STUDIES, "static-dynamic"], default="threshold"
    )
    sweep.add_argument("--magnitude", type=float, default=880.68)
    sweep.add_argument("--tol", type=float, default=1.0)
    sweep.add_argument("--workers", type=int, default=1)
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "threshold":
        _bracket(parser, args.bracket)

    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if args.verbose else "INFO")

    try:
        return int(args.func(args))
    except NumericalInstabilityError as e:
        logger.error(str(e))
        return EXIT_NUMERICAL
    except (NetworkValidationError, ScenarioError, BracketError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_INVALID
    except (OSError, ValueError) as e:
        logger.error(str(e))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
