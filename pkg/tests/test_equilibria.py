import itertools
import random

import pytest

from mogames import (
    InvalidArgumentError,
    NormalFormGame,
    SymmetricGame,
    configuration_of,
    configurations,
    efficient_responses,
    frontier,
    gen_graphical,
    gen_graphical_grid,
    gen_uniform_normal,
    gen_uniform_symmetric,
    pareto_nash,
    pareto_nash_graphical,
    pareto_nash_normal,
    pareto_nash_symmetric,
    scalarized_nash,
    to_normal_form,
)
from oracles import all_profiles, naive_eff, naive_pn, naive_wst, welfare

THREE_OUTCOMES = NormalFormGame(1, 2, [3], [[(1, 4), (2, 2), (4, 1)]])


def test_efficient_response_examples():
    g1 = NormalFormGame(1, 1, [2], [[(3,), (1,)]])
    assert efficient_responses(g1, 0, (0,)) == [0]
    assert efficient_responses(THREE_OUTCOMES, 0, (0,)) == [0, 1, 2]
    dup = NormalFormGame(1, 2, [3], [[(1, 1), (2, 2), (2, 2)]])
    assert efficient_responses(dup, 0, (0,)) == [1, 2]


def test_prisoners_dilemma():
    # actions: 0 = cooperate, 1 = defect
    r = {(0, 0): (3, 3), (0, 1): (0, 5), (1, 0): (5, 0), (1, 1): (1, 1)}
    payoffs = [[(r[p][i],) for p in itertools.product(range(2), repeat=2)] for i in range(2)]
    g = NormalFormGame(2, 1, [2, 2], payoffs)
    assert pareto_nash(g).pn == ((1, 1),)


def test_three_outcome_solve():
    res = pareto_nash(THREE_OUTCOMES)
    assert res.pn == ((0,), (1,), (2,))
    assert res.outcomes_E == ((1, 4), (2, 2), (4, 1))
    assert res.frontier_F == res.outcomes_E


def _check_against_oracle(game):
    res = pareto_nash(game)
    nf = to_normal_form(game)
    pn = naive_pn(nf)
    outcomes = [welfare(nf, p) for p in pn]
    if isinstance(game, SymmetricGame):
        assert list(res.pn) == sorted({configuration_of(p, game.alpha) for p in pn})
    else:
        assert list(res.pn) == pn
    assert list(res.outcomes_E) == sorted(set(outcomes))
    assert list(res.eff_E) == naive_eff(outcomes)
    assert list(res.wst_E) == naive_wst(outcomes)
    assert list(res.frontier_F) == naive_eff(welfare(nf, p) for p in all_profiles(nf.actions))


@pytest.mark.parametrize("seed", range(20))
def test_normal_matches_oracle(seed):
    rng = random.Random(seed)
    g = gen_uniform_normal(rng.randint(1, 4), rng.randint(1, 3), rng.randint(1, 3), 1, rng.choice([2, 4, 16]), seed)
    _check_against_oracle(g)


@pytest.mark.parametrize("seed", range(20))
def test_symmetric_matches_oracle(seed):
    rng = random.Random(seed)
    g = gen_uniform_symmetric(rng.randint(1, 5), rng.randint(1, 3), rng.randint(1, 3), 1, rng.choice([2, 4, 16]), seed)
    _check_against_oracle(g)


@pytest.mark.parametrize("seed", range(20))
def test_graphical_matches_oracle(seed):
    rng = random.Random(seed)
    g = gen_graphical_grid(rng.randint(1, 3), rng.randint(1, 3), 2, rng.randint(1, 3), 1, rng.choice([2, 16]), seed)
    _check_against_oracle(g)


def test_symmetric_coordination():
    table = {(a, c): (1 if c[a] == 2 else 0,) for c in configurations(2, 2) for a in range(2) if c[a]}
    g = SymmetricGame(2, 2, 1, table)
    assert pareto_nash_symmetric(g).pn == ((0, 2), (2, 0))
    single = SymmetricGame(3, 1, 1, {(0, (3,)): (7,)})
    assert pareto_nash_symmetric(single).pn == ((3,),)


def test_graphical_complete_graph_equals_normal_form():
    g = gen_graphical([(0, 1, 2)] * 3, 2, 2, seed=4)
    assert pareto_nash_graphical(g) == pareto_nash_normal(to_normal_form(g))


def test_graphical_isolated_agents():
    g = gen_graphical([(0,), (1,), (2,)], 3, 2, 1, 5, seed=8)
    per_agent = [efficient_responses(g, i, (0, 0, 0)) for i in range(3)]
    assert list(pareto_nash_graphical(g).pn) == list(itertools.product(*per_agent))


@pytest.mark.parametrize("seed", range(20))
def test_scalarized_subset(seed):
    rng = random.Random(100 + seed)
    g = gen_uniform_normal(rng.randint(1, 3), rng.randint(2, 3), rng.randint(1, 3), seed=seed)
    w = [[rng.randint(1, 9) for _ in range(g.d)] for _ in range(g.n)]
    assert set(scalarized_nash(g, w)) <= set(pareto_nash(g).pn)


def test_scalarized_three_outcomes_and_errors():
    assert scalarized_nash(THREE_OUTCOMES, [[1, 1]]) == [(0,), (2,)]
    with pytest.raises(InvalidArgumentError):
        scalarized_nash(THREE_OUTCOMES, [[1, 0]])
    with pytest.raises(InvalidArgumentError):
        scalarized_nash(THREE_OUTCOMES, [[1, -1]])


def test_single_objective_reduces_to_nash():
    for seed in range(10):
        g = gen_uniform_normal(3, 3, 1, seed=seed)
        classical = [
            p for p in all_profiles(g.actions)
            if all(g.payoff(p, i) >= g.payoff(p[:i] + (b,) + p[i + 1:], i) for i in range(3) for b in range(3))
        ]
        assert list(pareto_nash(g).pn) == classical


def test_frontier_symmetric_by_configuration():
    g = gen_uniform_symmetric(4, 2, 2, seed=3)
    assert frontier(g) == frontier(to_normal_form(g))
