"""Zone classification, risk dominance, and transition-graph extraction.

The (s, p_r) plane splits into three behavioural zones for the baseline
race: in zone III unsafe development is both collectively preferred and
evolutionarily selected, zone II is the dilemma region where safety would be
preferred but risk-taking is still selected, and in zone I safety is
preferred and selected. Risk dominance between two strategies follows the
large-population pairwise criterion on the payoff matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .evolution import EvoResult
from .payoffs import as_matrix


class Zone(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


def zone_boundaries(s: float) -> tuple[float, float]:
    """The two p_r thresholds separating zones III/II and II/I.

    Below 1 - 1/s risk-taking pays off collectively despite disasters; above
    1 - 1/(3s) safety is also the selected outcome.
    """
    if s <= 1:
        raise ValueError(f"s must exceed 1 (got {s})")
    return 1 - 1 / s, 1 - 1 / (3 * s)


def classify_zone(s: float, p_r: float) -> Zone:
    """Zone of a single (s, p_r) point; boundary points take the safer zone."""
    if not 0 <= p_r <= 1:
        raise ValueError(f"p_r must lie in [0, 1] (got {p_r})")
    lower, upper = zone_boundaries(s)
    if p_r < lower:
        return Zone.III
    if p_r < upper:
        return Zone.II
    return Zone.I


def risk_dominant(a: int, b: int, payoffs) -> bool:
    """Whether strategy a strictly risk-dominates strategy b.

    Ties are not dominance, so both orderings return False on equality.
    """
    if a == b:
        raise ValueError("risk dominance needs two distinct strategies")
    m = as_matrix(payoffs)
    return m[a, a] + m[a, b] > m[b, a] + m[b, b]


@dataclass(frozen=True)
class TransitionEdge:
    """A dominant invasion direction between two monomorphic states."""

    source: str
    target: str
    rho: float
    neutral_multiple: float   # rho expressed in units of the neutral 1/Z


@dataclass(frozen=True)
class TransitionGraph:
    nodes: tuple[str, ...]
    masses: tuple[float, ...]
    edges: tuple[TransitionEdge, ...]
    neutral_pairs: tuple[tuple[str, str], ...]

    def to_text(self) -> str:
        """Render as a graphviz digraph; neutral pairs appear as comments."""
        lines = ["digraph transitions {"]
        for name, mass in zip(self.nodes, self.masses):
            lines.append(f'  "{name}" [mass="{mass!r}"];')
        for e in self.edges:
            lines.append(
                f'  "{e.source}" -> "{e.target}" '
                f'[rho="{e.rho!r}", neutral_multiple="{e.neutral_multiple!r}"];'
            )
        for a, b in self.neutral_pairs:
            lines.append(f'  // neutral: "{a}" -- "{b}"')
        lines.append("}")
        return "\n".join(lines) + "\n"


def transition_graph(result: EvoResult, Z: int,
                     rel_tolerance: float = 0.02) -> TransitionGraph:
    """Directed dominance edges between monomorphic states.

    For each strategy pair the edge points toward the state whose mutants
    invade more easily; pairs whose two fixation probabilities differ by
    less than rel_tolerance (relative to the larger) count as neutral.
    """
    if rel_tolerance <= 0:
        raise ValueError(f"rel_tolerance must be positive (got {rel_tolerance})")
    rho = np.asarray(result.fixation, dtype=float)
    names = result.strategies
    n = len(names)
    edges = []
    neutral = []
    for i in range(n):
        for j in range(i + 1, n):
            forward = float(rho[i, j])    # j-mutant overtakes i-population
            backward = float(rho[j, i])
            strongest = max(forward, backward)
            if abs(forward - backward) <= rel_tolerance * strongest:
                neutral.append((names[i], names[j]))
            elif forward > backward:
                edges.append(TransitionEdge(names[i], names[j], forward,
                                            forward * Z))
            else:
                edges.append(TransitionEdge(names[j], names[i], backward,
                                            backward * Z))
    return TransitionGraph(nodes=names,
                           masses=tuple(float(x) for x in result.stationary),
                           edges=tuple(edges),
                           neutral_pairs=tuple(neutral))
