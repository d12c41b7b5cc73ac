"""Finite-population dynamics in the small-mutation limit.

Strategy competition follows pairwise imitation with Fermi probability and
rare exploration. In the small-mutation limit the population hops between
monomorphic states, so the long-run behaviour reduces to a Markov chain over
strategies whose transition rates are single-mutant fixation probabilities.
The chain's stationary distribution gives the time each strategy dominates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .params import EvoParams, RaceParams
from .payoffs import PayoffMatrix, as_matrix, build_payoff_matrix
from .strategies import Scenario

# Smallest fixation probability ever reported; transitions this unlikely are
# kept at the representable floor instead of collapsing to zero so the chain
# stays irreducible.
RHO_FLOOR = 1e-300

STATIONARY_RESIDUAL_TOL = 1e-10

# Stationary masses are strictly positive for an irreducible chain; entries
# that underflow to zero in float are reported at the floor rather than as
# zero.
STATIONARY_FLOOR = 1e-300


@dataclass(frozen=True)
class EvoResult:
    """Fixation matrix, small-mutation chain, and its stationary distribution.

    fixation[i, j] is the probability that a single j-mutant takes over a
    population of i-players; the diagonal holds the neutral value 1/Z.
    """

    strategies: tuple[str, ...]
    fixation: np.ndarray
    markov: np.ndarray
    stationary: np.ndarray


def avg_payoffs(k: int, pi_AA: float, pi_AB: float, pi_BA: float,
                pi_BB: float, Z: int) -> tuple[float, float]:
    """Expected payoffs of A- and B-players when k of Z agents play A.

    Agents interact with everyone but themselves, so each average runs over
    Z - 1 co-players.
    """
    if not 1 <= k <= Z - 1:
        raise ValueError(f"k must lie in [1, Z-1] (got k={k}, Z={Z})")
    pi_a = ((k - 1) * pi_AA + (Z - k) * pi_AB) / (Z - 1)
    pi_b = (k * pi_BA + (Z - k - 1) * pi_BB) / (Z - 1)
    return pi_a, pi_b


def _log_sum_exp(exponents: np.ndarray) -> float:
    # max-shifted reduction; safe for exponents anywhere in float range
    m = exponents.max()
    if m == -np.inf:
        return -np.inf
    return m + np.log(np.exp(exponents - m).sum())


def fixation_probability(invader: int, resident: int, payoffs,
                         evo: EvoParams) -> float:
    """Probability that a single `invader` mutant overtakes `resident` players.

    Closed form for the birth-death chain under the Fermi rule, where the
    ratio of backward to forward rates collapses to exp(-beta * (Pi_A - Pi_B)).
    The sum runs in log space so huge selection pressures neither overflow
    nor truncate to zero; results are clamped to [1e-300, 1].
    """
    if invader == resident:
        raise ValueError("invader and resident must differ")
    a = as_matrix(payoffs)
    Z, beta = evo.Z, evo.beta
    if beta == 0.0:
        return 1.0 / Z
    k = np.arange(1, Z)
    pi_inv = ((k - 1) * a[invader, invader] + (Z - k) * a[invader, resident]) / (Z - 1)
    pi_res = (k * a[resident, invader] + (Z - k - 1) * a[resident, resident]) / (Z - 1)
    delta = pi_inv - pi_res
    if not delta.any():
        return 1.0 / Z
    # cumulative exponents of the product terms, plus the leading 1 = exp(0)
    exponents = np.concatenate(([0.0], np.cumsum(-beta * delta)))
    rho = float(np.exp(-_log_sum_exp(exponents)))
    return min(max(rho, RHO_FLOOR), 1.0)


def fixation_matrix(payoffs, evo: EvoParams) -> np.ndarray:
    """All pairwise fixation probabilities; [i, j] = j-mutant among i-players."""
    a = as_matrix(payoffs)
    n = a.shape[0]
    rho = np.full((n, n), 1.0 / evo.Z)
    for i in range(n):
        for j in range(n):
            if i != j:
                rho[i, j] = fixation_probability(j, i, a, evo)
    return rho


def build_small_mutation_chain(payoffs, evo: EvoParams,
                               fixation: np.ndarray | None = None) -> np.ndarray:
    """Row-stochastic transition matrix of the monomorphic-state chain.

    Off-diagonal entry (i, j) is the chance that the single mutant appearing
    in an i-population plays j (uniform over the n - 1 alternatives) times
    the chance it fixates.
    """
    a = as_matrix(payoffs)
    n = a.shape[0]
    if n < 2:
        raise ValueError(f"need at least 2 strategies (got {n})")
    rho = fixation_matrix(a, evo) if fixation is None else fixation
    markov = rho / (n - 1)
    np.fill_diagonal(markov, 0.0)
    np.fill_diagonal(markov, 1.0 - markov.sum(axis=1))
    return markov


def stationary_distribution(markov) -> np.ndarray:
    """Stationary distribution of a row-stochastic irreducible chain.

    Solves the left-eigenvector system (M^T - I) x = 0 with one equation
    replaced by the normalization constraint. The elimination runs in exact
    rational arithmetic: transitions pinned at the probability floor sit
    hundreds of orders of magnitude below the diagonal, so in floats the
    chain looks reducible (the diagonal rounds to 1) and a dense solve picks
    an arbitrary corner of the degenerate subspace with a perfect residual.
    Rational arithmetic keeps those ratios, so the returned vector is the
    true stationary distribution of the given chain.
    """
    M = as_matrix(markov)
    if (M < 0).any():
        raise ValueError("transition matrix has negative entries")
    if np.abs(M.sum(axis=1) - 1.0).max() > 1e-8:
        raise ValueError("transition matrix rows must sum to 1")
    n = M.shape[0]
    rows = [[Fraction(v) for v in row] for row in M.tolist()]
    # renormalize each row exactly: float assembly leaves ~1e-16 row-sum
    # defects, enough to swamp transitions near the floor
    rows = [[v / sum(row) for v in row] for row in rows]
    one = Fraction(1)
    a = [[rows[j][i] - (one if i == j else 0) for j in range(n)]
         for i in range(n)]
    a[-1] = [one] * n
    rhs = [Fraction(0)] * n
    rhs[-1] = one
    x = _solve_exact(a, rhs)
    if any(v < 0 for v in x):
        raise ArithmeticError("chain is reducible: stationary mass is not "
                              "nonnegative")
    out = np.array([float(v) for v in x])
    out = np.maximum(out, STATIONARY_FLOOR)
    out /= out.sum()
    resid = _residual(out, M)
    if resid > STATIONARY_RESIDUAL_TOL:
        raise ArithmeticError(
            f"stationary distribution residual {resid:.3e} exceeds "
            f"{STATIONARY_RESIDUAL_TOL:.0e}"
        )
    return out


def _solve_exact(a: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    # Gaussian elimination over the rationals; pivoting only guards against
    # structural zeros since the arithmetic itself is exact
    n = len(a)
    for col in range(n):
        pivot = max(range(col, n), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0:
            raise ArithmeticError("chain is reducible: singular stationary "
                                  "system")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f == 0:
                continue
            a[r][col] = Fraction(0)
            for c in range(col + 1, n):
                a[r][c] -= f * a[col][c]
            rhs[r] -= f * rhs[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = rhs[r]
        for c in range(r + 1, n):
            acc -= a[r][c] * x[c]
        x[r] = acc / a[r][r]
    return x


def _residual(x: np.ndarray, M: np.ndarray) -> float:
    return float(np.abs(x @ M - x).max())


def unsafe_frequency(stationary: np.ndarray, scenario: Scenario) -> float:
    """Long-run share of time spent in unsafe monomorphic states."""
    stationary = np.asarray(stationary, dtype=float)
    if stationary.shape != (scenario.n_strategies,):
        raise ValueError(
            f"stationary shape {stationary.shape} does not match the "
            f"{scenario.n_strategies}-strategy scenario"
        )
    mask = np.array(scenario.unsafe_mask())
    return float(stationary[mask].sum())


def evolve(scenario: Scenario, params: RaceParams, evo: EvoParams,
           payoffs: PayoffMatrix | None = None) -> EvoResult:
    """Full analytic pipeline: payoffs, fixation, chain, stationary vector."""
    if payoffs is None:
        payoffs = build_payoff_matrix(scenario, params)
    rho = fixation_matrix(payoffs.values, evo)
    markov = build_small_mutation_chain(payoffs.values, evo, fixation=rho)
    stationary = stationary_distribution(markov)
    return EvoResult(strategies=scenario.names, fixation=rho,
                     markov=markov, stationary=stationary)
