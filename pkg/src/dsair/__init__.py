"""Evolutionary dynamics of an AI development race with safety commitments.

The package layers cleanly: `strategies` defines scenarios and strategy
sets, `payoffs` resolves pairwise races, `evolution` runs the
small-mutation imitation dynamics, `analysis` classifies risk zones and
transition structure, `sweep` scans parameter grids, and `abm` provides a
Monte Carlo check of the analytic pipeline. The `abm` names load lazily so
importing the package does not pay the JIT toolchain's startup cost.
"""

from .analysis import (Zone, TransitionEdge, TransitionGraph, classify_zone,
                       risk_dominant, transition_graph, zone_boundaries)
from .config import RunConfig, parse_config
from .evolution import (EvoResult, build_small_mutation_chain, evolve,
                        fixation_matrix, fixation_probability,
                        stationary_distribution, unsafe_frequency)
from .params import EvoParams, RaceParams
from .payoffs import (PairOutcome, PayoffMatrix, build_payoff_matrix,
                      resolve_pair)
from .strategies import (Action, PunishScope, Regime, Scenario,
                         StrategyDescriptor, make_scenario,
                         without_commitments)
from .sweep import SweepAxis, SweepPoint, SweepResult, SweepSpec, run_sweep

__version__ = "0.1.0"

_ABM_NAMES = ("AbmConfig", "AbmResult", "abm_run")

__all__ = [
    "Action", "AbmConfig", "AbmResult", "EvoParams", "EvoResult",
    "PairOutcome", "PayoffMatrix", "PunishScope", "RaceParams", "Regime",
    "RunConfig", "Scenario", "StrategyDescriptor", "SweepAxis", "SweepPoint",
    "SweepResult", "SweepSpec", "TransitionEdge", "TransitionGraph", "Zone",
    "abm_run", "build_payoff_matrix", "build_small_mutation_chain",
    "classify_zone", "evolve", "fixation_matrix", "fixation_probability",
    "make_scenario", "parse_config", "resolve_pair", "risk_dominant",
    "run_sweep", "stationary_distribution", "transition_graph",
    "unsafe_frequency", "without_commitments", "zone_boundaries",
]


def __getattr__(name):
    if name in _ABM_NAMES:
        from . import abm

        return getattr(abm, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
