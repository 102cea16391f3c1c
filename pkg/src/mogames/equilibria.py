"""Pure-strategy Pareto-Nash enumeration and outcome-set extraction."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .exceptions import InvalidArgumentError
from .games import (
    Game,
    GraphicalGame,
    NormalFormGame,
    SymmetricGame,
    all_profiles,
    configurations,
    profile_index,
    utilitarian,
)
from .vectors import VectorSet, as_vector, eff, eff_indices, vadd, wst


@dataclass(frozen=True)
class SolveResult:
    """Equilibria and the four outcome sets of a solved game.

    ``pn`` holds action profiles, except for symmetric games where it holds
    configurations (count of agents per action).
    """

    pn: Tuple[Tuple[int, ...], ...]
    outcomes_E: VectorSet
    eff_E: VectorSet
    wst_E: VectorSet
    frontier_F: VectorSet

    @classmethod
    def from_outcomes(cls, pn, outcomes, welfare_all) -> "SolveResult":
        E = tuple(sorted(set(outcomes)))
        return cls(
            pn=tuple(pn),
            outcomes_E=E,
            eff_E=eff(E),
            wst_E=wst(E),
            frontier_F=eff(welfare_all),
        )


def efficient_responses(game: Game, agent: int, adversary_profile: Sequence[int]) -> List[int]:
    """Actions of ``agent`` whose payoff is efficient against the others' actions.

    ``adversary_profile`` is a full profile; the entry at ``agent`` is ignored.
    """
    base = list(adversary_profile)
    if len(base) != game.n:
        raise InvalidArgumentError(f"profile needs {game.n} entries")
    row = []
    for b in range(game.actions[agent]):
        base[agent] = b
        row.append(game.payoff(tuple(base), agent))
    return eff_indices(row)


def _strides(actions: Sequence[int]) -> List[int]:
    strides = [1] * len(actions)
    for i in range(len(actions) - 2, -1, -1):
        strides[i] = strides[i + 1] * actions[i + 1]
    return strides


def _normal_ok_masks(game: NormalFormGame) -> List[bytearray]:
    # ok[i][p] == 1 iff agent i's action in profile p is an efficient response.
    size = game.num_profiles
    strides = _strides(game.actions)
    masks = []
    for i in range(game.n):
        ok = bytearray(size)
        table = game.payoffs[i]
        alpha, stride = game.actions[i], strides[i]
        for p in range(size):
            if (p // stride) % alpha:
                continue  # visit each adversary context once, from its a_i = 0 profile
            row_idx = [p + b * stride for b in range(alpha)]
            for b in eff_indices([table[r] for r in row_idx]):
                ok[row_idx[b]] = 1
        masks.append(ok)
    return masks


def pareto_nash_normal(game: NormalFormGame) -> SolveResult:
    masks = _normal_ok_masks(game)
    welfare = []
    for p in range(game.num_profiles):
        w = game.payoffs[0][p]
        for i in range(1, game.n):
            w = vadd(w, game.payoffs[i][p])
        welfare.append(w)
    pn, outcomes = [], []
    for p, prof in enumerate(all_profiles(game.actions)):
        if all(m[p] for m in masks):
            pn.append(prof)
            outcomes.append(welfare[p])
    return SolveResult.from_outcomes(pn, outcomes, welfare)


def _symmetric_is_pn(game: SymmetricGame, c: Tuple[int, ...]) -> bool:
    for a in range(game.alpha):
        if c[a] < 1:
            continue
        current = game.u(a, c)
        for b in range(game.alpha):
            if b == a:
                continue
            moved = list(c)
            moved[a] -= 1
            moved[b] += 1
            alt = game.u(b, moved)
            if all(x >= y for x, y in zip(alt, current)) and alt != current:
                return False
    return True


def pareto_nash_symmetric(game: SymmetricGame) -> SolveResult:
    pn, outcomes, welfare = [], [], []
    for c in configurations(game.n, game.alpha):
        w = game.config_welfare(c)
        welfare.append(w)
        if _symmetric_is_pn(game, c):
            pn.append(c)
            outcomes.append(w)
    return SolveResult.from_outcomes(pn, outcomes, welfare)


def pareto_nash_graphical(game: GraphicalGame) -> SolveResult:
    """Exhaustive enumeration using only the local tables.

    Efficient responses depend only on the agent's local context, so they are
    memoized per (agent, actions of the other scope members).
    """
    cache: List[Dict[Tuple[int, ...], frozenset]] = [dict() for _ in range(game.n)]
    local_actions = [game.local_actions(i) for i in range(game.n)]
    own_pos = [game.scopes[i].index(i) for i in range(game.n)]

    def ok(i: int, local: Tuple[int, ...]) -> bool:
        pos = own_pos[i]
        key = local[:pos] + local[pos + 1:]
        responses = cache[i].get(key)
        if responses is None:
            row = []
            for b in range(game.actions[i]):
                lp = local[:pos] + (b,) + local[pos + 1:]
                row.append(game.tables[i][profile_index(lp, local_actions[i])])
            responses = frozenset(eff_indices(row))
            cache[i][key] = responses
        return local[pos] in responses

    pn, outcomes, welfare = [], [], []
    for prof in all_profiles(game.actions):
        locals_ = [tuple(prof[j] for j in game.scopes[i]) for i in range(game.n)]
        w = None
        for i in range(game.n):
            v = game.tables[i][profile_index(locals_[i], local_actions[i])]
            w = v if w is None else vadd(w, v)
        welfare.append(w)
        if all(ok(i, locals_[i]) for i in range(game.n)):
            pn.append(prof)
            outcomes.append(w)
    return SolveResult.from_outcomes(pn, outcomes, welfare)


def pareto_nash(game: Game) -> SolveResult:
    if isinstance(game, NormalFormGame):
        return pareto_nash_normal(game)
    if isinstance(game, SymmetricGame):
        return pareto_nash_symmetric(game)
    if isinstance(game, GraphicalGame):
        return pareto_nash_graphical(game)
    raise InvalidArgumentError(f"unknown game type {type(game).__name__}")


def scalarized_nash(game: Game, weights: Sequence[Sequence]) -> List[Tuple[int, ...]]:
    """Pure Nash equilibria of the weighted-sum single-objective game.

    Every weight must be strictly positive so the scalarization is
    Pareto-monotonic; the result is then a subset of the Pareto-Nash profiles.
    """
    if len(weights) != game.n:
        raise InvalidArgumentError(f"need one weight vector per agent ({game.n})")
    ws = [as_vector(w) for w in weights]
    for w in ws:
        if len(w) != game.d:
            raise InvalidArgumentError(f"weight vector {w} has wrong dimension")
        if any(c <= 0 for c in w):
            raise InvalidArgumentError(f"weights must be strictly positive, got {w}")

    def value(profile, i) -> Fraction:
        return sum((a * b for a, b in zip(ws[i], game.payoff(profile, i))), Fraction(0))

    out = []
    for prof in all_profiles(game.actions):
        stable = True
        for i in range(game.n):
            current = value(prof, i)
            for b in range(game.actions[i]):
                if b != prof[i] and value(prof[:i] + (b,) + prof[i + 1:], i) > current:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            out.append(prof)
    return out


def frontier(game: Game) -> VectorSet:
    """Efficient utilitarian outcomes F, by full enumeration."""
    if isinstance(game, SymmetricGame):
        return eff(game.config_welfare(c) for c in configurations(game.n, game.alpha))
    return eff(utilitarian(game, p) for p in all_profiles(game.actions))


__all__ = [
    "SolveResult",
    "efficient_responses",
    "pareto_nash",
    "pareto_nash_normal",
    "pareto_nash_symmetric",
    "pareto_nash_graphical",
    "scalarized_nash",
    "frontier",
]
