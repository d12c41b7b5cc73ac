"""Command-line interface.

Usage: dsair <subcommand> [key=value ...] [--config FILE]

Configuration comes from an optional key=value file plus override pairs on
the command line; overrides win. Output goes to the path named by the
`output` key ('-' meaning stdout). Errors print a single `error: ...` line
on stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import output as out
from .analysis import transition_graph
from .config import RunConfig, parse_config
from .evolution import evolve
from .payoffs import build_payoff_matrix
from .presets import FIGURES
from .sweep import SweepAxis, run_sweep

ZONE_DEFAULT_S = ("s", 1.05, 5.05, 81)
ZONE_DEFAULT_P_R = ("p_r", 0.0, 1.0, 101)


def _single_scenario(cfg: RunConfig, command: str):
    if cfg.compare:
        raise ValueError(
            f"compare=true is not supported by {command}; it applies to sweep"
        )
    return cfg.scenario()


def _cmd_zones(cfg: RunConfig, workers: int) -> str:
    if cfg.axis is None:
        s_values = SweepAxis(*ZONE_DEFAULT_S).grid()
        p_r_values = SweepAxis(*ZONE_DEFAULT_P_R).grid()
    else:
        axes = {cfg.axis.name: cfg.axis.grid()}
        if cfg.axis2 is not None:
            axes[cfg.axis2.name] = cfg.axis2.grid()
        extra = sorted(set(axes) - {"s", "p_r"})
        if extra:
            raise ValueError(
                f"zones supports only the axes s and p_r (got {extra[0]!r})"
            )
        s_values = axes.get("s", (cfg.s,))
        p_r_values = axes.get("p_r", (cfg.p_r,))
    return out.render(out.zone_table(s_values, p_r_values), cfg)


def _cmd_payoffs(cfg: RunConfig, workers: int) -> str:
    scenario = _single_scenario(cfg, "payoffs")
    matrix = build_payoff_matrix(scenario, cfg.race_params())
    return out.render(out.payoff_table(matrix), cfg)


def _cmd_stationary(cfg: RunConfig, workers: int) -> str:
    scenario = _single_scenario(cfg, "stationary")
    result = evolve(scenario, cfg.race_params(), cfg.evo_params())
    return out.render(out.stationary_table(result, scenario, cfg.p_r), cfg)


def _cmd_sweep(cfg: RunConfig, workers: int) -> str:
    result = run_sweep(cfg.sweep_spec(), workers=workers)
    return out.render(out.sweep_table(result), cfg)


def _cmd_transitions(cfg: RunConfig, workers: int) -> str:
    scenario = _single_scenario(cfg, "transitions")
    result = evolve(scenario, cfg.race_params(), cfg.evo_params())
    graph = transition_graph(result, cfg.Z)
    if cfg.format == "json":
        return out.transitions_json(graph, cfg)
    return out.transitions_text(graph)


def _cmd_abm(cfg: RunConfig, workers: int) -> str:
    from .abm import abm_run

    _single_scenario(cfg, "abm")
    result = abm_run(cfg.abm_config())
    return out.render(out.abm_table(result, cfg.steps - cfg.burn_in), cfg)


_DISPATCH = {
    "zones": _cmd_zones,
    "payoffs": _cmd_payoffs,
    "stationary": _cmd_stationary,
    "sweep": _cmd_sweep,
    "transitions": _cmd_transitions,
    "abm": _cmd_abm,
}


def _load_config(args) -> RunConfig:
    text = ""
    if args.config is not None:
        try:
            with open(args.config) as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(
                f"cannot read config file {args.config}: {exc.strerror}"
            ) from None
    return parse_config(text, tuple(args.pairs))


def _run_command(args) -> int:
    cfg = _load_config(args)
    text = _DISPATCH[args.command](cfg, getattr(args, "workers", 1))
    out.write_output(text, cfg.output)
    return 0


def _run_reproduce(args) -> int:
    os.makedirs(args.outdir, exist_ok=True)
    workers = getattr(args, "workers", 1)
    for preset in FIGURES[args.figure]:
        cfg = parse_config(preset.config, tuple(args.pairs))
        text = _DISPATCH[preset.command](cfg, workers)
        path = os.path.join(args.outdir, preset.filename)
        with open(path, "w", newline="") as fh:
            fh.write(text)
        print(path)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsair",
        description="Evolutionary dynamics of an AI development race with "
                    "voluntary safety commitments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = (
        ("zones", "classify the (s, p_r) plane into risk zones"),
        ("payoffs", "print the pairwise race payoff matrix"),
        ("stationary", "stationary distribution at a single point"),
        ("sweep", "stationary distributions over a parameter grid"),
        ("transitions", "fixation-flow graph between monomorphic states"),
        ("abm", "Monte Carlo agent-based run of the imitation dynamics"),
        ("reproduce", "regenerate the data files behind a figure"),
    )
    for name, help_text in specs:
        sp = sub.add_parser(name, help=help_text)
        if name == "reproduce":
            sp.add_argument("figure", choices=sorted(FIGURES),
                            help="figure whose data files to regenerate")
            sp.add_argument("--outdir", default=".",
                            help="directory for the generated files")
            sp.set_defaults(func=_run_reproduce)
        else:
            sp.set_defaults(func=_run_command)
        sp.add_argument("pairs", nargs="*", metavar="key=value",
                        help="config overrides")
        sp.add_argument("--config", metavar="FILE",
                        help="key=value config file")
        if name in ("sweep", "reproduce"):
            sp.add_argument("--workers", type=int, default=1,
                            help="parallel workers for grid evaluation")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
