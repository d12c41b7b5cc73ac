"""Strategy descriptors and the canonical scenario catalogue.

A strategy is described by three choices: whether it is willing to enter a
bilateral safety agreement, which action it takes with and without an
agreement in place, and whom it punishes. A scenario bundles a sanctioning
regime with a fixed, ordered strategy set; the order is part of the contract
because it defines payoff-matrix indexing and output column order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Action(enum.Enum):
    SAFE = "SAFE"
    UNSAFE = "UNSAFE"


class PunishScope(enum.Enum):
    """Whom a strategy sanctions for playing UNSAFE."""

    NONE = "none"
    COMMITTED_ONLY = "committed_only"   # only a co-player it holds an agreement with
    ANY_UNSAFE = "any_unsafe"           # any unsafe co-player, agreement or not


class Regime(enum.Enum):
    """Sanctioning regime of a scenario."""

    NONE = "none"
    PEER = "peer"
    INSTITUTIONAL = "institutional"


@dataclass(frozen=True)
class StrategyDescriptor:
    name: str
    commits: bool
    action_with_agreement: Action
    action_without_agreement: Action
    punish_scope: PunishScope = PunishScope.NONE

    def __post_init__(self) -> None:
        if self.punish_scope is PunishScope.COMMITTED_ONLY and not self.commits:
            raise ValueError(
                f"strategy {self.name!r}: punishing commitment violators requires "
                "being willing to commit"
            )

    def self_play_action(self, commitments_enabled: bool) -> Action:
        """Action taken in a monomorphic population of this strategy.

        Against a copy of itself an agreement forms exactly when the strategy
        commits and the scenario allows commitments. This is what decides
        whether the strategy counts as unsafe in aggregate frequencies.
        """
        if commitments_enabled and self.commits:
            return self.action_with_agreement
        return self.action_without_agreement


@dataclass(frozen=True)
class Scenario:
    """A sanctioning regime plus its fixed, ordered strategy set."""

    regime: Regime
    commitments_enabled: bool
    fallback_safe: bool
    strategies: tuple[StrategyDescriptor, ...]

    def __post_init__(self) -> None:
        names = [d.name for d in self.strategies]
        if len(set(names)) != len(names):
            raise ValueError(f"strategy names must be unique (got {names})")
        if self.regime is not Regime.PEER:
            offenders = [d.name for d in self.strategies
                         if d.punish_scope is not PunishScope.NONE]
            if offenders:
                raise ValueError(
                    f"peer punishers {offenders} are not available under the "
                    f"{self.regime.value} regime"
                )
        if self.fallback_safe and not self.commitments_enabled:
            raise ValueError(
                "fallback_safe only applies when commitments are enabled"
            )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.strategies)

    @property
    def n_strategies(self) -> int:
        return len(self.strategies)

    @property
    def label(self) -> str:
        base = {
            Regime.NONE: "baseline",
            Regime.PEER: "peer",
            Regime.INSTITUTIONAL: "institutional",
        }[self.regime]
        if self.regime is not Regime.NONE:
            base += "-commit" if self.commitments_enabled else "-nocommit"
        if self.fallback_safe:
            base += "-safefallback"
        return base

    def unsafe_mask(self) -> tuple[bool, ...]:
        """True for each strategy whose monomorphic self-play action is UNSAFE."""
        return tuple(
            d.self_play_action(self.commitments_enabled) is Action.UNSAFE
            for d in self.strategies
        )


def _plain(name: str, action: Action) -> StrategyDescriptor:
    return StrategyDescriptor(name, commits=False,
                              action_with_agreement=action,
                              action_without_agreement=action)


# Unconditional strategies of the race without commitments.
AS = _plain("AS", Action.SAFE)
AU = _plain("AU", Action.UNSAFE)

# Peer punisher available when no commitments exist: always safe, sanctions
# every unsafe co-player.
PS_PLAIN = StrategyDescriptor("PS", commits=False,
                              action_with_agreement=Action.SAFE,
                              action_without_agreement=Action.SAFE,
                              punish_scope=PunishScope.ANY_UNSAFE)


def _commit_strategies(fallback_safe: bool, with_punisher: bool,
                       ) -> tuple[StrategyDescriptor, ...]:
    # Committers left without a partner default to UNSAFE; the safe-fallback
    # variant has them play SAFE unconditionally instead.
    outside = Action.SAFE if fallback_safe else Action.UNSAFE
    as_in = StrategyDescriptor("AS-in", commits=True,
                               action_with_agreement=Action.SAFE,
                               action_without_agreement=outside)
    as_out = _plain("AS-out", Action.SAFE)
    au_in = StrategyDescriptor("AU-in", commits=True,
                               action_with_agreement=Action.UNSAFE,
                               action_without_agreement=Action.UNSAFE)
    au_out = _plain("AU-out", Action.UNSAFE)
    if with_punisher:
        ps = StrategyDescriptor("PS", commits=True,
                                action_with_agreement=Action.SAFE,
                                action_without_agreement=outside,
                                punish_scope=PunishScope.COMMITTED_ONLY)
        return (as_in, as_out, au_in, au_out, ps)
    return (as_in, au_in, as_out, au_out)


def make_scenario(regime: Regime | str,
                  commitments_enabled: bool = False,
                  fallback_safe: bool = False) -> Scenario:
    """Build one of the five canonical scenarios.

    regime NONE: the two-strategy baseline race, no sanctioning.
    regime PEER without commitments: baseline plus an unconditional peer
        punisher.
    regime PEER with commitments: the five commitment strategies, sanctioning
        by the wronged co-player.
    regime INSTITUTIONAL: sanctioning by an outside body, so no punisher
        strategy exists; without commitments every unsafe player is punished,
        with commitments only agreement violators are.
    """
    if isinstance(regime, str):
        try:
            regime = Regime(regime.lower())
        except ValueError:
            valid = ", ".join(r.value for r in Regime)
            raise ValueError(
                f"regime must be one of {{{valid}}} (got {regime!r})"
            ) from None
    if fallback_safe and not commitments_enabled:
        raise ValueError("fallback_safe only applies when commitments are enabled")

    if regime is Regime.NONE:
        if commitments_enabled:
            raise ValueError(
                "commitments require a sanctioning regime (peer or institutional)"
            )
        strategies = (AS, AU)
    elif regime is Regime.PEER:
        if commitments_enabled:
            strategies = _commit_strategies(fallback_safe, with_punisher=True)
        else:
            strategies = (AS, AU, PS_PLAIN)
    else:  # INSTITUTIONAL
        if commitments_enabled:
            strategies = _commit_strategies(fallback_safe, with_punisher=False)
        else:
            strategies = (AS, AU)

    return Scenario(regime=regime, commitments_enabled=commitments_enabled,
                    fallback_safe=fallback_safe, strategies=strategies)


def without_commitments(scenario: Scenario) -> Scenario:
    """The comparison scenario with the commitment option removed."""
    if scenario.regime is Regime.NONE:
        raise ValueError("the baseline scenario has no commitment variant")
    return make_scenario(scenario.regime, commitments_enabled=False)
