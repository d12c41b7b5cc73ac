"""Agent-based Monte Carlo oracle for the imitation-with-mutation process.

Simulates the actual finite-population dynamics (no small-mutation limit):
each update event picks a focal agent that either explores a random strategy
or imitates a random co-player with Fermi probability. Time-averaged
strategy counts after a burn-in estimate the long-run distribution, which
should approach the analytic stationary vector as the mutation rate drops.

Runs are reproducible bit for bit: all randomness comes from a single PCG64
stream seeded by the config, consumed at a fixed five draws per event, and
frequencies are accumulated in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .params import EvoParams, RaceParams
from .payoffs import build_payoff_matrix
from .strategies import Scenario

# events per pre-drawn random block; bounds peak memory at ~40 MB
BLOCK_EVENTS = 1 << 20

# running-average checkpoints recorded along the run
TRACE_POINTS = 100


@dataclass(frozen=True)
class AbmConfig:
    """Full description of one simulation run."""

    scenario: Scenario
    params: RaceParams = field(default_factory=RaceParams)
    evo: EvoParams = field(default_factory=EvoParams)
    mu: float = 1e-3
    steps: int = 10**6
    burn_in: int = 0
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.mu <= 1:
            raise ValueError(f"mu must lie in (0, 1] (got {self.mu})")
        if self.burn_in < 0:
            raise ValueError(f"burn_in must be nonnegative (got {self.burn_in})")
        if self.steps <= self.burn_in:
            raise ValueError(
                f"steps must exceed burn_in (got steps={self.steps}, "
                f"burn_in={self.burn_in})"
            )
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative (got {self.seed})")


@dataclass(frozen=True)
class AbmResult:
    """Empirical long-run frequencies plus a convergence trace.

    trace[k] is the running time-average over the first trace_steps[k]
    post-burn-in events, so the last row equals frequencies whenever the
    final checkpoint lands on the last event.
    """

    strategies: tuple[str, ...]
    frequencies: np.ndarray
    trace_steps: np.ndarray
    trace: np.ndarray


@njit(cache=False)
def _run_block(counts, payoff, beta, mu, draws, event_start, burn_in,
               acc, trace, trace_steps, stride):
    Z = 0
    n = counts.shape[0]
    for t in range(n):
        Z += counts[t]
    for i in range(draws.shape[1]):
        # focal agent by cumulative strategy counts
        r = draws[0, i] * Z
        a = n - 1
        cum = 0.0
        for t in range(n):
            cum += counts[t]
            if r < cum:
                a = t
                break
        if draws[1, i] < mu:
            j = int(draws[2, i] * n)
            if j == n:
                j = n - 1
            counts[a] -= 1
            counts[j] += 1
        else:
            # model agent drawn from the other Z - 1 players
            r = draws[3, i] * (Z - 1)
            b = n - 1
            cum = 0.0
            for t in range(n):
                c = counts[t]
                if t == a:
                    c -= 1
                cum += c
                if r < cum:
                    b = t
                    break
            if b != a:
                f_a = -payoff[a, a]
                f_b = -payoff[b, b]
                for t in range(n):
                    f_a += counts[t] * payoff[a, t]
                    f_b += counts[t] * payoff[b, t]
                x = beta * (f_b - f_a) / (Z - 1)
                if x >= 0.0:
                    p = 1.0 / (1.0 + np.exp(-x))
                else:
                    e = np.exp(x)
                    p = e / (1.0 + e)
                if draws[4, i] < p:
                    counts[a] -= 1
                    counts[b] += 1
        event = event_start + i
        if event >= burn_in:
            for t in range(n):
                acc[t] += counts[t]
            post = event - burn_in + 1
            if post % stride == 0:
                row = post // stride - 1
                if row < trace.shape[0]:
                    for t in range(n):
                        trace[row, t] = acc[t] / (post * Z)
                    trace_steps[row] = post


def abm_run(config: AbmConfig) -> AbmResult:
    """Simulate the update process and return time-averaged frequencies.

    Each event draws a focal agent uniformly; with probability mu it adopts
    a uniformly random strategy, otherwise it imitates a uniformly chosen
    co-player with Fermi probability based on expected payoffs against the
    current population (self excluded). Frequencies average the post-event
    state over every event at or past burn_in.
    """
    sc = config.scenario
    n = sc.n_strategies
    Z = config.evo.Z
    payoff = build_payoff_matrix(sc, config.params).values
    # start from the most even split so no strategy is privileged
    counts = np.full(n, Z // n, dtype=np.int64)
    counts[: Z % n] += 1
    post_events = config.steps - config.burn_in
    n_trace = min(TRACE_POINTS, post_events)
    stride = post_events // n_trace
    acc = np.zeros(n, dtype=np.int64)
    trace = np.zeros((n_trace, n), dtype=np.float64)
    trace_steps = np.zeros(n_trace, dtype=np.int64)
    rng = np.random.Generator(np.random.PCG64(config.seed))
    done = 0
    while done < config.steps:
        block = min(BLOCK_EVENTS, config.steps - done)
        draws = rng.random((5, block))
        _run_block(counts, payoff, config.evo.beta, config.mu, draws, done,
                   config.burn_in, acc, trace, trace_steps, stride)
        done += block
    freqs = acc / (post_events * Z)
    return AbmResult(strategies=sc.names, frequencies=freqs,
                     trace_steps=trace_steps, trace=trace)
