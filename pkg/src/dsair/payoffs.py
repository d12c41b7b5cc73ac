"""Race payoffs between strategy pairs, averaged per development round.

The race between two players runs for W rounds on average. Each round the
intermediate benefit b is split in proportion to development speed, safety
compliance costs c, and whoever completes the W steps first collects the
prize B (split on a speed tie). A risk-taker keeps its gains only with
probability p = 1 - p_r. Sanctions act on speeds: a punished player loses
s_beta, a peer punisher additionally gives up s_alpha of its own speed.

``resolve_pair`` composes those pieces for any two strategy descriptors under
any scenario; the two-strategy baseline reproduces the classical race payoff
matrix exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import RaceParams
from .strategies import (
    Action,
    PunishScope,
    Regime,
    Scenario,
    StrategyDescriptor,
)

# Relative tolerance under which two effective speeds count as a tie, so that
# analytically equal speeds reached through different arithmetic still split
# the prize.
SPEED_TIE_RTOL = 1e-9


@dataclass(frozen=True)
class PairOutcome:
    """Fully resolved interaction between a row and a column player."""

    agreement_formed: bool
    action_row: Action
    action_col: Action
    speed_row: float
    speed_col: float
    payoff_row: float
    payoff_col: float


@dataclass(frozen=True)
class PayoffMatrix:
    """Race payoff matrix; entry (i, j) is the row player's averaged payoff."""

    strategies: tuple[str, ...]
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.strategies)

    def index(self, name: str) -> int:
        return self.strategies.index(name)


def as_matrix(payoffs) -> np.ndarray:
    """Accept a PayoffMatrix or any 2-D array-like and return an ndarray."""
    values = getattr(payoffs, "values", payoffs)
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"payoff matrix must be square (got shape {arr.shape})")
    return arr


def _base_speed(action: Action, params: RaceParams) -> float:
    return params.s if action is Action.UNSAFE else 1.0


def _check_regime(descriptor: StrategyDescriptor, regime: Regime) -> None:
    if regime is not Regime.PEER and descriptor.punish_scope is not PunishScope.NONE:
        raise ValueError(
            f"strategy {descriptor.name!r} is a peer punisher, which the "
            f"{regime.value} regime does not support"
        )


def resolve_pair(row: StrategyDescriptor, col: StrategyDescriptor,
                 scenario: Scenario, params: RaceParams) -> PairOutcome:
    """Resolve one pairwise race and return both averaged per-round payoffs.

    Composition order: agreement formation, action selection, sanctions,
    effective speeds (floored at zero), benefit split by speed, prize to the
    strictly faster player (speed ties split), compliance and commitment
    costs, and finally the disaster discount on every unsafe actor's total.
    """
    _check_regime(row, scenario.regime)
    _check_regime(col, scenario.regime)

    agreement = scenario.commitments_enabled and row.commits and col.commits
    act_r = row.action_with_agreement if agreement else row.action_without_agreement
    act_c = col.action_with_agreement if agreement else col.action_without_agreement

    punished_r = punished_c = False
    punishes_r = punishes_c = False
    if scenario.regime is Regime.PEER:
        punishes_r = act_c is Action.UNSAFE and (
            row.punish_scope is PunishScope.ANY_UNSAFE
            or (row.punish_scope is PunishScope.COMMITTED_ONLY and agreement)
        )
        punishes_c = act_r is Action.UNSAFE and (
            col.punish_scope is PunishScope.ANY_UNSAFE
            or (col.punish_scope is PunishScope.COMMITTED_ONLY and agreement)
        )
        punished_r, punished_c = punishes_c, punishes_r
    elif scenario.regime is Regime.INSTITUTIONAL:
        # The institution sanctions every unsafe player in the no-commitment
        # variant, but only agreement violators once commitments exist.
        sanctionable = agreement if scenario.commitments_enabled else True
        punished_r = act_r is Action.UNSAFE and sanctionable
        punished_c = act_c is Action.UNSAFE and sanctionable

    v_r = _base_speed(act_r, params)
    v_c = _base_speed(act_c, params)
    if punishes_r:
        v_r -= params.s_alpha
    if punished_r:
        v_r -= params.s_beta
    if punishes_c:
        v_c -= params.s_alpha
    if punished_c:
        v_c -= params.s_beta
    v_r = max(v_r, 0.0)
    v_c = max(v_c, 0.0)

    total = v_r + v_c
    if total > 0.0:
        ben_r = params.b * v_r / total
        ben_c = params.b * v_c / total
    else:
        ben_r = ben_c = 0.0

    prize_r = prize_c = 0.0
    if total > 0.0:
        if math.isclose(v_r, v_c, rel_tol=SPEED_TIE_RTOL, abs_tol=0.0):
            prize_r = v_r * params.B / (2 * params.W)
            prize_c = v_c * params.B / (2 * params.W)
        elif v_r > v_c:
            prize_r = v_r * params.B / params.W
        else:
            prize_c = v_c * params.B / params.W

    pay_r = ben_r + prize_r
    pay_c = ben_c + prize_c
    if act_r is Action.SAFE:
        pay_r -= params.c
    if act_c is Action.SAFE:
        pay_c -= params.c
    if agreement:
        pay_r -= params.epsilon
        pay_c -= params.epsilon
    if act_r is Action.UNSAFE:
        pay_r *= params.p
    if act_c is Action.UNSAFE:
        pay_c *= params.p

    return PairOutcome(agreement_formed=agreement,
                       action_row=act_r, action_col=act_c,
                       speed_row=v_r, speed_col=v_c,
                       payoff_row=pay_r, payoff_col=pay_c)


def build_payoff_matrix(scenario: Scenario, params: RaceParams) -> PayoffMatrix:
    """Averaged race payoffs between every ordered strategy pair."""
    n = scenario.n_strategies
    if n < 2:
        raise ValueError(f"scenario needs at least 2 strategies (got {n})")
    values = np.empty((n, n), dtype=float)
    for i, row in enumerate(scenario.strategies):
        for j, col in enumerate(scenario.strategies):
            values[i, j] = resolve_pair(row, col, scenario, params).payoff_row
    return PayoffMatrix(strategies=scenario.names, values=values)
