"""Table builders and CSV/JSON renderers for the CLI subcommands.

Every renderer is deterministic: floats print as their shortest round-trip
repr, lines end with a bare newline, and JSON keys are sorted, so two runs
with the same config produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from .analysis import TransitionGraph, classify_zone, zone_boundaries
from .config import RunConfig
from .evolution import EvoResult, unsafe_frequency
from .payoffs import PayoffMatrix
from .strategies import Scenario
from .sweep import SweepResult


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


def _col(name: str) -> str:
    return name.replace("-", "_")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, (float, np.floating)):
        return float(value)
    return int(value)


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_json(table: Table, config: RunConfig) -> str:
    obj = {
        "config": config.to_pairs(),
        "columns": list(table.columns),
        "rows": [[_json_value(v) for v in row] for row in table.rows],
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def render(table: Table, config: RunConfig) -> str:
    if config.format == "json":
        return render_json(table, config)
    return render_csv(table)


def zone_table(s_values, p_r_values) -> Table:
    """Zone map rows over the (s, p_r) product grid, s outermost."""
    rows = []
    for s in s_values:
        lower, upper = zone_boundaries(s)
        for p_r in p_r_values:
            zone = classify_zone(s, p_r)
            rows.append((float(s), float(p_r), zone.value, lower, upper))
    return Table(("s", "p_r", "zone", "boundary_low", "boundary_high"),
                 tuple(rows))


def payoff_table(matrix: PayoffMatrix) -> Table:
    columns = ("strategy",) + tuple(_col(n) for n in matrix.strategies)
    rows = tuple(
        (matrix.strategies[i],) + tuple(float(v) for v in matrix.values[i])
        for i in range(matrix.n)
    )
    return Table(columns, rows)


def stationary_table(result: EvoResult, scenario: Scenario,
                     p_r: float) -> Table:
    columns = (("p_r",) + tuple(_col(n) for n in result.strategies)
               + ("unsafe_freq",))
    row = ((float(p_r),) + tuple(float(v) for v in result.stationary)
           + (unsafe_frequency(result.stationary, scenario),))
    return Table(columns, (row,))


def sweep_table(result: SweepResult) -> Table:
    spec = result.spec
    prefixes = ("",) if len(spec.scenarios) == 1 else ("commit_", "nocommit_")
    columns = [ax.name for ax in spec.axes]
    for prefix, sc in zip(prefixes, spec.scenarios):
        if "stationary" in spec.outputs:
            columns += [prefix + _col(n) for n in sc.names]
        if "unsafe_frequency" in spec.outputs:
            columns.append(prefix + "unsafe_freq")
    if "zone" in spec.outputs:
        columns.append("zone")
    has_error = any(p.error is not None for p in result.points)
    if has_error:
        columns.append("error")
    n_data = len(columns) - len(spec.axes) - has_error
    rows = []
    for point in result.points:
        row = [float(v) for v in point.coords]
        if point.error is None:
            for k in range(len(spec.scenarios)):
                if "stationary" in spec.outputs:
                    row += [float(v) for v in point.stationary[k]]
                if "unsafe_frequency" in spec.outputs:
                    row.append(float(point.unsafe[k]))
            if "zone" in spec.outputs:
                row.append(point.zone)
            if has_error:
                row.append(None)
        else:
            row += [None] * n_data + [point.error]
        rows.append(tuple(row))
    return Table(tuple(columns), tuple(rows))


def abm_table(result, post_events: int) -> Table:
    """Running-average trace plus a final authoritative frequency row."""
    columns = ("events",) + tuple(_col(n) for n in result.strategies)
    rows = [
        (int(step),) + tuple(float(v) for v in result.trace[k])
        for k, step in enumerate(result.trace_steps)
    ]
    if not rows or rows[-1][0] != post_events:
        rows.append((int(post_events),)
                    + tuple(float(v) for v in result.frequencies))
    return Table(columns, tuple(rows))


def transitions_text(graph: TransitionGraph) -> str:
    return graph.to_text()


def transitions_json(graph: TransitionGraph, config: RunConfig) -> str:
    obj = {
        "config": config.to_pairs(),
        "nodes": list(graph.nodes),
        "masses": [float(m) for m in graph.masses],
        "edges": [
            {"source": e.source, "target": e.target, "rho": float(e.rho),
             "neutral_multiple": float(e.neutral_multiple)}
            for e in graph.edges
        ],
        "neutral_pairs": [list(pair) for pair in graph.neutral_pairs],
    }
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_output(text: str, path: str) -> None:
    """Write to a file path, or to stdout when path is '-'."""
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)
