"""Mixed-strategy expected payoffs and the two mixed Pareto-Nash definitions.

``is_def4_equilibrium`` is the classical definition: the mixed strategy's
expected vector must be efficient among all mixtures of the agent's actions.
``is_def5_equilibrium`` is the revised one: every action played with positive
probability must be an efficient pure response. Pure Pareto-Nash equilibria
always satisfy the latter but not necessarily the former.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exceptions import InvalidArgumentError
from .games import Game
from .lp import solve_lp
from .vectors import Vector, dominates, eff_indices, to_rational


@dataclass(frozen=True)
class MixedProfile:
    probs: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        probs = tuple(tuple(to_rational(p) for p in dist) for dist in self.probs)
        object.__setattr__(self, "probs", probs)
        for i, dist in enumerate(probs):
            if not dist:
                raise InvalidArgumentError(f"agent {i}: empty distribution")
            if any(p < 0 for p in dist):
                raise InvalidArgumentError(f"agent {i}: negative probability")
            if sum(dist) != 1:
                raise InvalidArgumentError(f"agent {i}: probabilities sum to {sum(dist)}, not 1")

    @classmethod
    def pure(cls, profile: Sequence[int], actions: Sequence[int]) -> "MixedProfile":
        return cls(tuple(tuple(Fraction(int(b == a)) for b in range(alpha)) for a, alpha in zip(profile, actions)))

    def support(self, agent: int) -> List[int]:
        return [a for a, p in enumerate(self.probs[agent]) if p > 0]


def _check_profile(game: Game, profile: MixedProfile) -> None:
    if len(profile.probs) != game.n:
        raise InvalidArgumentError(f"profile has {len(profile.probs)} agents, game has {game.n}")
    for i, dist in enumerate(profile.probs):
        if len(dist) != game.actions[i]:
            raise InvalidArgumentError(f"agent {i}: {len(dist)} probabilities for {game.actions[i]} actions")


def _expected(game: Game, profile: MixedProfile, agent: int, fixed: Optional[Tuple[int, int]] = None) -> Vector:
    # ``fixed = (i, b)`` pins agent i to pure action b.
    supports = []
    for j in range(game.n):
        if fixed is not None and j == fixed[0]:
            supports.append([(fixed[1], Fraction(1))])
        else:
            supports.append([(a, p) for a, p in enumerate(profile.probs[j]) if p > 0])
    total = [Fraction(0)] * game.d
    for combo in itertools.product(*supports):
        weight = Fraction(1)
        for _, p in combo:
            weight *= p
        u = game.payoff(tuple(a for a, _ in combo), agent)
        for k in range(game.d):
            total[k] += weight * u[k]
    return tuple(total)


def expected_payoff(game: Game, profile: MixedProfile, agent: int) -> Vector:
    _check_profile(game, profile)
    return _expected(game, profile, agent)


def response_rows(game: Game, profile: MixedProfile, agent: int) -> List[Vector]:
    """Expected payoff of each pure action of ``agent`` against the others' mixtures."""
    _check_profile(game, profile)
    return [_expected(game, profile, agent, fixed=(agent, b)) for b in range(game.actions[agent])]


def dominating_mixture(rows: Sequence[Vector], target: Vector) -> Optional[Tuple[Fraction, ...]]:
    """A distribution q over ``rows`` whose mixture Pareto-dominates ``target``, or None.

    LP: maximize sum(delta) s.t. sum_b q_b rows[b][k] - delta_k - s_k = target_k,
    sum(q) = 1, all variables >= 0. A positive optimum means some mixture is
    >= target everywhere and > somewhere; the returned witness is re-checked.
    """
    alpha, d = len(rows), len(target)
    n_vars = alpha + 2 * d  # q, delta, surplus
    A, b = [], []
    for k in range(d):
        row = [rows[j][k] for j in range(alpha)] + [Fraction(0)] * (2 * d)
        row[alpha + k] = Fraction(-1)
        row[alpha + d + k] = Fraction(-1)
        A.append(row)
        b.append(target[k])
    A.append([Fraction(1)] * alpha + [Fraction(0)] * (2 * d))
    b.append(Fraction(1))
    c = [Fraction(0)] * alpha + [Fraction(1)] * d + [Fraction(0)] * d
    res = solve_lp(c, A, b)
    if res.status != "optimal":
        raise RuntimeError(f"domination LP unexpectedly {res.status}")
    if res.value <= 0:
        return None
    q = res.x[:alpha]
    mixed = tuple(sum((q[j] * rows[j][k] for j in range(alpha)), Fraction(0)) for k in range(d))
    if not dominates(mixed, target):
        raise RuntimeError("LP witness failed the dominance re-check")
    return q


def is_def4_equilibrium(game: Game, profile: MixedProfile) -> bool:
    _check_profile(game, profile)
    for i in range(game.n):
        rows = response_rows(game, profile, i)
        current = tuple(
            sum((p * rows[b][k] for b, p in enumerate(profile.probs[i])), Fraction(0)) for k in range(game.d)
        )
        if dominating_mixture(rows, current) is not None:
            return False
    return True


def is_def5_equilibrium(game: Game, profile: MixedProfile) -> bool:
    _check_profile(game, profile)
    for i in range(game.n):
        efficient = set(eff_indices(response_rows(game, profile, i)))
        if any(a not in efficient for a in profile.support(i)):
            return False
    return True


__all__ = [
    "MixedProfile",
    "expected_payoff",
    "response_rows",
    "dominating_mixture",
    "is_def4_equilibrium",
    "is_def5_equilibrium",
]
