from fractions import Fraction as F

import numpy as np
import pytest

from tasep_lab import chain
from tasep_lab.chain import (
    ChainError,
    ChainSpec,
    Distribution,
    ReducibleChainError,
    check_irreducible,
    marginal_top,
    period,
    simulate,
    simulate_row_density,
    solve_elimination,
    space_size,
    states,
    stationary_exact,
    transition_matrix,
    tv_distance,
)
from tasep_lab.config import parse
from tasep_lab.weights import RateParams, weight

from oracles import dense_stationary, float_stationary, row_chain_matrix

P = RateParams(F(1, 2), F(1, 3), F(2, 5))


def test_row_chain_at_size_one():
    tm = transition_matrix(ChainSpec("s0", 1, P))
    assert tm.states == ["B", "W"]
    d = tm.to_dense()
    assert tm.rows[1][0] == P.beta / 2
    assert tm.rows[0][1] == P.gamma / 2
    assert d[0, 0] == pytest.approx(1 - float(P.gamma) / 2)
    assert all(s == 1 for s in (sum(r.values()) for r in tm.rows))


def test_complete_chain_at_size_one_closed_form():
    d = stationary_exact(ChainSpec("x0", 1, P))
    b, g = P.beta, P.gamma
    assert d[parse("B/W")] == b / (b + g)
    assert d[parse("W/B")] == g / (b + g)


@pytest.mark.parametrize("model", ["s0", "x0", "s", "x"])
def test_rows_are_stochastic(model):
    p = RateParams(F(1, 2), F(1, 3), F(2, 5), F(1, 4) if model in ("s", "x") else 0)
    tm = transition_matrix(ChainSpec(model, 3, p))
    for r in tm.rows:
        assert sum(r.values()) == 1 and all(v > 0 for v in r.values())


def test_state_spaces_sizes():
    assert space_size(ChainSpec("s0", 4)) == len(states(ChainSpec("s0", 4))) == 16
    assert space_size(ChainSpec("x", 3)) == len(states(ChainSpec("x", 3))) == 35
    assert space_size(ChainSpec("s_hat", 4, k=1, l=1, m=2)) == 12
    assert space_size(ChainSpec("x_hat", 4, k=1, l=1, m=2)) == 24


@pytest.mark.parametrize(
    "kw",
    [
        dict(model="x_hat", n=3, k=1, l=0, m=2),
        dict(model="s_hat", n=3),
        dict(model="x0", n=2, params=RateParams(epsilon=F(1, 2))),
        dict(model="x", n=2, params=RateParams(F(1, 4), 1, 1, F(1, 2))),
        dict(model="x0", n=-1),
    ],
)
def test_bad_chain_specs(kw):
    with pytest.raises(ValueError):
        ChainSpec(**kw)


@pytest.mark.parametrize("n", range(1, 5))
def test_row_stationary_matches_dense_oracle(n):
    rows, mat = row_chain_matrix(n, P.alpha, P.beta, P.gamma)
    want = dict(zip(rows, dense_stationary(mat)))
    got = stationary_exact(ChainSpec("s0", n, P)).as_dict()
    assert got == want
    fl = dict(zip(rows, float_stationary(mat)))
    d = stationary_exact(ChainSpec("s0", n, P.as_float()))
    assert all(abs(d[r] - fl[r]) < 1e-10 for r in rows)


@pytest.mark.parametrize("n", range(1, 5))
def test_complete_marginal_equals_row_chain(n):
    full = marginal_top(stationary_exact(ChainSpec("x0", n, P)))
    row = stationary_exact(ChainSpec("s0", n, P))
    assert full.as_dict() == row.as_dict()


@pytest.mark.parametrize("n", range(1, 5))
def test_complete_stationary_proportional_to_weight(n):
    d = stationary_exact(ChainSpec("x0", n, P))
    z = sum(weight(s, P) for s in d.support)
    assert all(p == weight(s, P) / z for s, p in d.as_dict().items())


def test_elimination_and_certified_agree():
    spec = ChainSpec("x", 3, RateParams(F(1, 2), F(1, 3), F(2, 5), F(1, 4)))
    a = stationary_exact(spec, method="elimination")
    b = stationary_exact(spec, method="certified")
    assert a.as_dict() == b.as_dict()
    assert b.total() == 1
    with pytest.raises(ChainError):
        stationary_exact(spec, method="magic")


def test_float_mode():
    d = stationary_exact(ChainSpec("x0", 3), exact=False)
    assert not d.exact
    assert all(abs(p - 1 / 14) < 1e-12 for p in d.probabilities)


def test_reducible_chain_is_reported():
    spec = ChainSpec("x", 2, RateParams())
    irr = check_irreducible(spec)
    assert not irr
    # one component per number of neutral columns
    assert sorted(len({s.ell for s in comp}) for comp in irr.components) == [1, 1, 1]
    assert sorted(comp[0].ell for comp in irr.components) == [0, 1, 2]
    assert len(irr.components) == 3
    with pytest.raises(ReducibleChainError) as info:
        stationary_exact(spec)
    assert len(info.value.components) == 3


def test_aperiodic():
    assert period(transition_matrix(ChainSpec("x0", 3))) == 1
    assert period(transition_matrix(ChainSpec("x_hat", 3, k=1, l=1, m=1))) == 1


def test_solve_elimination_on_tiny_matrix():
    tm = transition_matrix(ChainSpec("s0", 1, P))
    assert solve_elimination(tm) == [P.beta / (P.beta + P.gamma), P.gamma / (P.beta + P.gamma)]


def test_tv_distance():
    a = Distribution(["x", "y"], [F(1, 2), F(1, 2)])
    b = Distribution(["x", "z"], [F(1, 4), F(3, 4)])
    assert tv_distance(a, b) == F(3, 4)
    assert tv_distance(a, a) == 0
    assert tv_distance(Distribution.point_mass("x"), Distribution.point_mass("y")) == 1


def test_distribution_output():
    d = stationary_exact(ChainSpec("x0", 1))
    assert d.to_lines() == ["B/W@open2 1/2", "W/B@open2 1/2"]
    assert '"probability": "1/2"' in d.to_json()
    with pytest.raises(ChainError):
        Distribution(["a"], [])


def test_zero_steps_is_a_point_mass():
    spec = ChainSpec("x0", 3)
    res = simulate(spec, 0, seed=5)
    assert res.empirical().as_dict() == {chain.default_initial(spec): 1}
    res = simulate(spec, 0, seed=5, initial="BBW/BWW")
    assert res.final_state == parse("BBW/BWW")


def test_simulation_is_deterministic():
    spec = ChainSpec("x0", 3, P)
    a = simulate(spec, 50_000, seed=11)
    b = simulate(spec, 50_000, seed=11)
    c = simulate(spec, 50_000, seed=12)
    assert a.visits == b.visits and a.final_state == b.final_state
    assert a.visits != c.visits


def test_table_and_direct_paths_agree():
    spec = ChainSpec("x", 3, RateParams(F(1, 2), F(1, 3), F(2, 5), F(1, 4)))
    a = simulate(spec, 5000, seed=3, record=True)
    b = simulate(spec, 5000, seed=3, record=True, table_limit=0)
    assert a.visits == b.visits
    assert [(r.wall, r.branch, r.state) for r in a.trajectory] == [(r.wall, r.branch, r.state) for r in b.trajectory]
    fast = simulate(spec, 5000, seed=3)
    assert fast.visits == a.visits


def test_visit_counting_window():
    spec = ChainSpec("s0", 2)
    res = simulate(spec, 100, seed=0, burn_in=0)
    assert sum(res.visits.values()) == 101
    res = simulate(spec, 100, seed=0, burn_in=40)
    assert sum(res.visits.values()) == 61
    with pytest.raises(ChainError):
        simulate(spec, 10, seed=0, burn_in=11)
    with pytest.raises(ChainError):
        simulate(spec, -1, seed=0)


def test_bad_initial_state():
    with pytest.raises(ValueError):
        simulate(ChainSpec("x0", 2), 10, seed=0, initial="WW/WW")
    with pytest.raises(ChainError):
        simulate(ChainSpec("s0", 2), 10, seed=0, initial="BXB")


def test_monte_carlo_approaches_weights():
    spec = ChainSpec("x0", 2, P)
    exact = stationary_exact(spec)
    emp = simulate(spec, 400_000, seed=1).empirical_float()
    assert float(tv_distance(exact, emp)) < 0.01


def test_row_density_matches_exact_profile():
    from tasep_lab.excursion import density_profile

    n = 4
    exact = density_profile(stationary_exact(ChainSpec("x0", n)))
    sim = simulate_row_density(n, 2_000_000, seed=2)
    assert np.max(np.abs(sim - np.array([float(v) for v in exact]))) < 0.01
    a = simulate_row_density(n, 10_000, seed=4)
    assert np.array_equal(a, simulate_row_density(n, 10_000, seed=4))


def test_periodic_chain_uniform():
    d = stationary_exact(ChainSpec("x_hat", 4, k=1, l=1, m=2))
    assert set(d.probabilities) == {F(1, 24)}


def test_three_species_row_chain_marginal():
    p = RateParams(F(1, 2), F(1, 3), F(2, 5), F(1, 2))
    full = marginal_top(stationary_exact(ChainSpec("x", 3, p)))
    row = stationary_exact(ChainSpec("s", 3, p))
    assert full.as_dict() == row.as_dict()
