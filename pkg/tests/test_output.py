"""Renderer determinism and table schema tests."""

import json
from types import SimpleNamespace

import numpy as np
import pytest

from dsair import EvoParams, RaceParams, evolve, make_scenario
from dsair.analysis import transition_graph
from dsair.config import parse_config
from dsair.output import (Table, abm_table, payoff_table, render_csv,
                          render_json, stationary_table, sweep_table,
                          transitions_json, zone_table)
from dsair.payoffs import build_payoff_matrix
from dsair.sweep import (SweepAxis, SweepPoint, SweepResult, SweepSpec,
                         run_sweep)


def test_csv_uses_shortest_round_trip_floats_and_lf():
    table = Table(("a", "b"), ((0.1, 1.5), (1e-300, 3.0)))
    assert render_csv(table) == "a,b\n0.1,1.5\n1e-300,3.0\n"


def test_csv_quotes_cells_containing_commas():
    table = Table(("error",), (("ValueError: bad, very bad",),))
    assert render_csv(table) == 'error\n"ValueError: bad, very bad"\n'


def test_none_cells_render_empty():
    table = Table(("a", "b"), ((None, 2.0),))
    assert render_csv(table) == "a,b\n,2.0\n"


def test_zone_table_schema():
    table = zone_table((1.5,), (0.0, 0.5, 1.0))
    assert table.columns == ("s", "p_r", "zone", "boundary_low",
                             "boundary_high")
    assert [row[2] for row in table.rows] == ["III", "II", "I"]
    assert table.rows[0][3] == pytest.approx(1 / 3)
    assert table.rows[0][4] == 7 / 9


def test_payoff_table_matches_matrix():
    matrix = build_payoff_matrix(make_scenario("none"), RaceParams(p_r=0.5))
    table = payoff_table(matrix)
    assert table.columns == ("strategy", "AS", "AU")
    assert table.rows[0] == ("AS", 51.0, 0.6000000000000001)
    assert table.rows[1][0] == "AU"


def test_stationary_table_header():
    scenario = make_scenario("peer", commitments_enabled=True)
    result = evolve(scenario, RaceParams(p_r=0.5), EvoParams())
    table = stationary_table(result, scenario, 0.5)
    assert table.columns == ("p_r", "AS_in", "AS_out", "AU_in", "AU_out",
                             "PS", "unsafe_freq")
    assert table.rows[0][0] == 0.5
    assert sum(table.rows[0][1:6]) == pytest.approx(1.0)


def test_sweep_table_single_scenario_header():
    spec = SweepSpec(scenarios=(make_scenario("peer", commitments_enabled=True),),
                     axes=(SweepAxis("p_r", 0.0, 1.0, 3),),
                     params=RaceParams(), evo=EvoParams())
    table = sweep_table(run_sweep(spec))
    assert table.columns == ("p_r", "AS_in", "AS_out", "AU_in", "AU_out",
                             "PS", "unsafe_freq")
    assert len(table.rows) == 3


def test_sweep_table_pair_prefixes():
    commit = make_scenario("peer", commitments_enabled=True)
    spec = SweepSpec(scenarios=(commit, make_scenario("peer")),
                     axes=(SweepAxis("p_r", 0.0, 1.0, 2),),
                     params=RaceParams(), evo=EvoParams(),
                     outputs=("unsafe_frequency",))
    table = sweep_table(run_sweep(spec))
    assert table.columns == ("p_r", "commit_unsafe_freq",
                             "nocommit_unsafe_freq")


def test_error_column_appears_only_on_failure():
    scenario = make_scenario("none")
    spec = SweepSpec(scenarios=(scenario,),
                     axes=(SweepAxis("p_r", 0.0, 1.0, 2),),
                     params=RaceParams(), evo=EvoParams(),
                     outputs=("unsafe_frequency",))
    clean = SweepResult(spec, (SweepPoint((0.0,), unsafe=(1.0,)),
                               SweepPoint((1.0,), unsafe=(0.0,))))
    assert sweep_table(clean).columns == ("p_r", "unsafe_freq")
    broken = SweepResult(spec, (SweepPoint((0.0,), unsafe=(1.0,)),
                                SweepPoint((1.0,), error="ValueError: boom")))
    table = sweep_table(broken)
    assert table.columns == ("p_r", "unsafe_freq", "error")
    assert table.rows[0] == (0.0, 1.0, None)
    assert table.rows[1] == (1.0, None, "ValueError: boom")


def test_render_json_sorted_and_embeds_round_trippable_config():
    cfg = parse_config("format = json\n")
    text = render_json(Table(("x",), ((1.0,),)), cfg)
    obj = json.loads(text)
    assert obj["columns"] == ["x"] and obj["rows"] == [[1.0]]
    assert text == json.dumps(obj, sort_keys=True, indent=2) + "\n"
    flat = "".join(f"{k}={v}\n" for k, v in obj["config"].items())
    assert parse_config(flat) == cfg


def test_abm_table_appends_final_frequency_row():
    fake = SimpleNamespace(strategies=("AS", "AU"),
                           trace_steps=np.array([10, 20]),
                           trace=np.array([[0.5, 0.5], [0.6, 0.4]]),
                           frequencies=np.array([0.7, 0.3]))
    table = abm_table(fake, 25)
    assert table.columns == ("events", "AS", "AU")
    assert table.rows[-1] == (25, 0.7, 0.3)
    assert len(table.rows) == 3
    # no duplicate when the last checkpoint is the last event
    assert len(abm_table(fake, 20).rows) == 2


def test_transitions_json_schema():
    scenario = make_scenario("peer", commitments_enabled=True)
    result = evolve(scenario, RaceParams(p_r=0.1), EvoParams())
    graph = transition_graph(result, 100)
    text = transitions_json(graph, parse_config("format = json\n"))
    obj = json.loads(text)
    assert set(obj) == {"config", "nodes", "masses", "edges", "neutral_pairs"}
    assert obj["nodes"] == ["AS-in", "AS-out", "AU-in", "AU-out", "PS"]
    flows = {(e["source"], e["target"]) for e in obj["edges"]}
    assert ("PS", "AU-out") in flows
    for edge in obj["edges"]:
        assert set(edge) == {"source", "target", "rho", "neutral_multiple"}
