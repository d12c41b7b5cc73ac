import numpy as np
import pytest

from dsair.evolution import (
    avg_payoffs,
    build_small_mutation_chain,
    evolve,
    fixation_matrix,
    fixation_probability,
    stationary_distribution,
    unsafe_frequency,
)
from dsair.params import EvoParams, RaceParams
from dsair.payoffs import build_payoff_matrix
from dsair.strategies import make_scenario

from oracles import fixation_birth_death, fixation_naive_product


def test_avg_payoffs_constant_game():
    assert avg_payoffs(1, 1, 1, 1, 1, Z=100) == (1, 1)


def test_avg_payoffs_half_population():
    pi_a, pi_b = avg_payoffs(50, 2, 0, 0, 2, Z=100)
    assert pi_a == 98 / 99
    assert pi_b == 98 / 99


def test_avg_payoffs_single_resident():
    pi_a, pi_b = avg_payoffs(2, 0, 5, 0, 0, Z=3)
    assert pi_a == 2.5
    assert pi_b == 0.0


def test_avg_payoffs_rejects_monomorphic_counts():
    with pytest.raises(ValueError):
        avg_payoffs(0, 1, 1, 1, 1, Z=10)
    with pytest.raises(ValueError):
        avg_payoffs(10, 1, 1, 1, 1, Z=10)


def test_neutral_mutant_fixates_at_one_over_z():
    pay = np.ones((2, 2))
    assert fixation_probability(0, 1, pay, EvoParams(Z=100, beta=1.0)) == 0.01


def test_zero_selection_intensity_is_neutral():
    pay = np.array([[5.0, 0.1], [3.0, 2.0]])
    assert fixation_probability(0, 1, pay, EvoParams(Z=50, beta=0.0)) == 0.02


def test_constant_advantage_geometric_value():
    # one-payoff advantage at every mutant count; value frozen from the
    # exact-rational birth-death solve
    pay = np.array([[2.0, 2.0], [1.0, 1.0]])
    rho = fixation_probability(0, 1, pay, EvoParams(Z=10, beta=1.0))
    assert rho == pytest.approx(0.6321492583604867, rel=1e-10)


def test_fixation_rejects_self_invasion():
    with pytest.raises(ValueError):
        fixation_probability(1, 1, np.ones((2, 2)), EvoParams())


def test_fixation_matches_birth_death_oracle():
    rng = np.random.default_rng(7)
    for _ in range(40):
        pay = rng.uniform(0, 1, size=(2, 2))
        Z = int(rng.integers(5, 31))
        beta = float(rng.choice([0.0, 0.1, 1.0, 10.0]))
        got = fixation_probability(0, 1, pay, EvoParams(Z=Z, beta=beta))
        want = fixation_birth_death(pay[0, 0], pay[0, 1],
                                    pay[1, 0], pay[1, 1], Z, beta)
        assert got == pytest.approx(want, rel=1e-8)


def test_log_space_matches_naive_product():
    rng = np.random.default_rng(11)
    for _ in range(40):
        pay = rng.uniform(0, 2, size=(2, 2))
        Z = int(rng.integers(3, 51))
        beta = float(rng.choice([0.1, 1.0, 5.0]))
        got = fixation_probability(0, 1, pay, EvoParams(Z=Z, beta=beta))
        want = fixation_naive_product(pay[0, 0], pay[0, 1],
                                      pay[1, 0], pay[1, 1], Z, beta)
        assert got == pytest.approx(want, rel=1e-10)


def test_extreme_selection_stays_clamped():
    pay = np.array([[0.0, 0.0], [1e4, 1e4]])
    evo = EvoParams(Z=100, beta=10.0)
    doomed = fixation_probability(0, 1, pay, evo)
    favoured = fixation_probability(1, 0, pay, evo)
    assert 1e-300 <= doomed < 1e-12
    assert favoured <= 1.0


def test_fixation_never_decreases_with_uniform_advantage():
    rng = np.random.default_rng(3)
    evo = EvoParams(Z=40, beta=0.5)
    for _ in range(20):
        pay = rng.uniform(0, 2, size=(2, 2))
        last = 0.0
        for delta in np.linspace(0.0, 2.0, 9):
            boosted = pay.copy()
            boosted[0, :] += delta
            rho = fixation_probability(0, 1, boosted, evo)
            assert rho >= last - 1e-15
            last = rho


def test_neutral_chain_two_strategies():
    markov = build_small_mutation_chain(np.ones((2, 2)), EvoParams(Z=100))
    assert np.array_equal(markov, np.array([[0.99, 0.01], [0.01, 0.99]]))


def test_neutral_chain_three_strategies():
    markov = build_small_mutation_chain(np.ones((3, 3)), EvoParams(Z=100))
    off = markov[~np.eye(3, dtype=bool)]
    assert np.allclose(off, 0.005, rtol=0, atol=0)
    assert np.allclose(np.diag(markov), 0.99, rtol=0, atol=0)


def test_chain_rows_are_stochastic():
    sc = make_scenario("peer", commitments_enabled=True)
    pay = build_payoff_matrix(sc, RaceParams(p_r=0.4))
    markov = build_small_mutation_chain(pay.values, EvoParams())
    n = markov.shape[0]
    off = markov[~np.eye(n, dtype=bool)]
    assert (off >= 0).all() and (off <= 1 / (n - 1)).all()
    assert np.abs(markov.sum(axis=1) - 1).max() < 1e-12


def test_baseline_risk_taking_dominates_low_risk():
    # at low disaster probability the unsafe mutant sweeps and the safe
    # mutant cannot reinvade
    sc = make_scenario("none")
    pay = build_payoff_matrix(sc, RaceParams(p_r=0.1))
    markov = build_small_mutation_chain(pay.values, EvoParams())
    t_as_au = markov[0, 1]
    t_au_as = markov[1, 0]
    assert t_as_au > 1e3 * t_au_as


def test_stationary_symmetric_chain():
    M = np.array([[0.7, 0.3], [0.3, 0.7]])
    assert stationary_distribution(M) == pytest.approx((0.5, 0.5), rel=1e-12)


def test_stationary_hand_solved_chain():
    M = np.array([[0.9, 0.1], [0.05, 0.95]])
    x = stationary_distribution(M)
    assert x == pytest.approx((1 / 3, 2 / 3), rel=1e-12)


def test_stationary_neutral_chain_is_uniform():
    markov = build_small_mutation_chain(np.ones((5, 5)), EvoParams(Z=100))
    assert stationary_distribution(markov) == pytest.approx([0.2] * 5, rel=1e-12)


def test_stationary_rejects_malformed_chains():
    with pytest.raises(ValueError, match="negative"):
        stationary_distribution(np.array([[1.1, -0.1], [0.5, 0.5]]))
    with pytest.raises(ValueError, match="sum to 1"):
        stationary_distribution(np.array([[0.5, 0.4], [0.5, 0.5]]))


def test_stationary_resolves_floor_level_transitions():
    # a chain whose slow transitions sit far below the diagonal's ulp: a
    # float dense solve sees an absorbing state and returns a corner, while
    # the exact solve keeps the 2:1 ratio between the tiny rates
    M = np.array([[1.0 - 2e-290, 2e-290], [1e-290, 1.0 - 1e-290]])
    x = stationary_distribution(M)
    assert x == pytest.approx((1 / 3, 2 / 3), rel=1e-12)


def test_stationary_is_fixed_point_across_scenarios():
    evo = EvoParams()
    for regime, commit in (("none", False), ("peer", False), ("peer", True),
                           ("institutional", False), ("institutional", True)):
        sc = make_scenario(regime, commitments_enabled=commit)
        for p_r in (0.1, 0.5, 0.9):
            res = evolve(sc, RaceParams(p_r=p_r), evo)
            resid = np.abs(res.stationary @ res.markov - res.stationary).max()
            assert resid < 1e-10
            assert (res.stationary > 0).all()
            assert res.stationary.sum() == pytest.approx(1.0, abs=1e-12)


def test_unsafe_frequency_sums_unsafe_selfplay_mass():
    sc = make_scenario("peer", commitments_enabled=True)
    stat = np.array([0.1, 0.2, 0.25, 0.35, 0.1])
    assert unsafe_frequency(stat, sc) == pytest.approx(0.6, rel=1e-12)


def test_unsafe_frequency_baseline():
    sc = make_scenario("none")
    assert unsafe_frequency(np.array([0.3, 0.7]), sc) == pytest.approx(0.7)
    assert unsafe_frequency(np.array([0.0, 1.0]), sc) == 1.0


def test_unsafe_frequency_shape_mismatch():
    with pytest.raises(ValueError, match="does not match"):
        unsafe_frequency(np.array([0.5, 0.5]),
                         make_scenario("peer", commitments_enabled=True))


def test_evolve_bundles_consistent_result():
    sc = make_scenario("institutional", commitments_enabled=True)
    res = evolve(sc, RaceParams(p_r=0.6), EvoParams())
    assert res.strategies == sc.names
    n = len(res.strategies)
    assert res.fixation.shape == (n, n)
    assert np.allclose(np.diag(res.fixation), 1 / 100)
    rebuilt = build_small_mutation_chain(
        build_payoff_matrix(sc, RaceParams(p_r=0.6)).values, EvoParams())
    assert np.array_equal(res.markov, rebuilt)


def test_fixation_matrix_orientation():
    # entry (i, j) holds the probability that a j-mutant overtakes a
    # population of i players
    sc = make_scenario("none")
    pay = build_payoff_matrix(sc, RaceParams(p_r=0.1))
    rho = fixation_matrix(pay.values, EvoParams())
    assert rho[0, 1] == fixation_probability(1, 0, pay.values, EvoParams())
    assert rho[1, 0] == fixation_probability(0, 1, pay.values, EvoParams())
