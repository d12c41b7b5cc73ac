"""Parameter containers for the race model and the evolutionary dynamics.

All validation lives here so that every entry point (library calls, config
files, CLI flags) rejects invalid values with the same message, phrased as
``<field> must <domain> (got <value>)``.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RaceParams:
    """Economic constants of the development race.

    b: intermediate benefit generated per round, shared by speed.
    c: per-round cost of complying with safety precautions.
    s: speed of unsafe development (safe speed is normalised to 1).
    B: final prize for reaching the target.
    W: expected number of development rounds.
    p_r: probability that a disaster wipes out a risk-taker's gains.
    epsilon: per-round cost of entering a commitment that forms.
    s_alpha: speed a peer punisher gives up while sanctioning.
    s_beta: speed taken away from a sanctioned player.
    """

    b: float = 4.0
    c: float = 1.0
    s: float = 1.5
    B: float = 1e4
    W: int = 100
    p_r: float = 0.5
    epsilon: float = 0.0
    s_alpha: float = 0.3
    s_beta: float = 1.0

    def __post_init__(self) -> None:
        if not self.b >= 0:
            raise ValueError(f"b must be >= 0 (got {self.b})")
        if not self.c >= 0:
            raise ValueError(f"c must be >= 0 (got {self.c})")
        if not self.s > 1:
            raise ValueError(f"s must exceed 1 (got {self.s})")
        if not self.B >= 0:
            raise ValueError(f"B must be >= 0 (got {self.B})")
        if not (isinstance(self.W, int) and self.W >= 1):
            raise ValueError(f"W must be an integer >= 1 (got {self.W})")
        if not 0 <= self.p_r <= 1:
            raise ValueError(f"p_r must lie in [0, 1] (got {self.p_r})")
        if not self.epsilon >= 0:
            raise ValueError(f"epsilon must be >= 0 (got {self.epsilon})")
        if not self.s_alpha >= 0:
            raise ValueError(f"s_alpha must be >= 0 (got {self.s_alpha})")
        if not self.s_beta >= 0:
            raise ValueError(f"s_beta must be >= 0 (got {self.s_beta})")

    @property
    def p(self) -> float:
        """Survival factor applied to a risk-taker's payoff."""
        return 1.0 - self.p_r


@dataclass(frozen=True)
class EvoParams:
    """Finite-population social-learning parameters.

    Z: population size.
    beta: intensity of selection in the pairwise comparison rule.
    """

    Z: int = 100
    beta: float = 1.0

    def __post_init__(self) -> None:
        if not (isinstance(self.Z, int) and self.Z >= 2):
            raise ValueError(f"Z must be an integer >= 2 (got {self.Z})")
        if not self.beta >= 0:
            raise ValueError(f"beta must be >= 0 (got {self.beta})")
