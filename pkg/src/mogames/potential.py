"""Exact vector potentials and locally efficient profiles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple, Union

import numpy as np

from .equilibria import pareto_nash_normal
from .exceptions import InvalidArgumentError, PotentialInvalidError
from .games import NormalFormGame, PotentialAnnotation, all_profiles, profile_index
from .vectors import as_vector

Profile = Tuple[int, ...]


def _check_shape(game: NormalFormGame, phi: PotentialAnnotation) -> None:
    if tuple(game.actions) != tuple(phi.actions) or game.d != phi.d:
        raise InvalidArgumentError(
            f"potential shape {phi.actions}/d={phi.d} does not match game {game.actions}/d={game.d}"
        )


def is_exact_potential(game: NormalFormGame, phi: PotentialAnnotation) -> bool:
    """True iff every unilateral deviation changes u^i and phi by the same vector.

    Equivalent check used here: for every agent i, ``u^i - phi`` must not
    depend on agent i's own action.
    """
    _check_shape(game, phi)
    for i in range(game.n):
        table = game.payoffs[i]
        seen = {}
        for p, prof in enumerate(all_profiles(game.actions)):
            diff = tuple(u - f for u, f in zip(table[p], phi.phi[p]))
            key = prof[:i] + prof[i + 1:]
            ref = seen.setdefault(key, diff)
            if ref != diff:
                return False
    return True


def locally_efficient(phi: PotentialAnnotation, actions: Sequence[int] = None) -> FrozenSet[Profile]:
    """Profiles whose potential is not dominated by any unilateral deviation."""
    actions = tuple(phi.actions if actions is None else actions)
    if actions != tuple(phi.actions):
        raise InvalidArgumentError("actions do not match the potential table")
    out = set()
    for p, prof in enumerate(all_profiles(actions)):
        here = phi.phi[p]
        stable = True
        for i, alpha in enumerate(actions):
            for b in range(alpha):
                if b == prof[i]:
                    continue
                other = phi.phi[profile_index(prof[:i] + (b,) + prof[i + 1:], actions)]
                if other != here and all(x >= y for x, y in zip(other, here)):
                    stable = False
                    break
            if not stable:
                break
        if stable:
            out.add(prof)
    return frozenset(out)


@dataclass(frozen=True)
class Theorem1Report:
    pn: FrozenSet[Profile]
    loc: FrozenSet[Profile]

    @property
    def equal(self) -> bool:
        return self.pn == self.loc

    @property
    def nonempty(self) -> bool:
        return bool(self.pn) and bool(self.loc)

    @property
    def holds(self) -> bool:
        return self.equal and self.nonempty


def check_theorem1(game: NormalFormGame, phi: PotentialAnnotation) -> Theorem1Report:
    """Compare Pareto-Nash equilibria with the locally efficient profiles of ``phi``."""
    if not is_exact_potential(game, phi):
        raise PotentialInvalidError("phi is not an exact potential of this game")
    pn = frozenset(pareto_nash_normal(game).pn)
    return Theorem1Report(pn=pn, loc=locally_efficient(phi))


def gen_potential_game(
    n: int,
    alpha: Union[int, Sequence[int]],
    d: int,
    payoff_range: Tuple[int, int] = (1, 16),
    seed: int = 0,
    dummy_range: Tuple[int, int] = None,
) -> Tuple[NormalFormGame, PotentialAnnotation]:
    """Random game with an exact potential: ``u^i(a) = phi(a) + w^i(a^{-i})``.

    ``dummy_range`` bounds the dummy terms (defaults to ``payoff_range``);
    ``(0, 0)`` yields an identical-interest game.
    """
    actions = (alpha,) * n if isinstance(alpha, int) else tuple(alpha)
    if n < 1 or d < 1 or len(actions) != n or min(actions) < 1:
        raise InvalidArgumentError("need n, alpha, d >= 1")
    lo, hi = payoff_range
    wlo, whi = payoff_range if dummy_range is None else dummy_range
    rng = np.random.default_rng(seed)
    profiles = list(all_profiles(actions))
    phi = rng.integers(lo, hi, size=(len(profiles), d), endpoint=True)
    payoffs = []
    for i in range(n):
        others = actions[:i] + actions[i + 1:]
        w = rng.integers(wlo, whi, size=(int(np.prod(others, dtype=np.int64)), d), endpoint=True)
        table = []
        for p, prof in enumerate(profiles):
            key = profile_index(prof[:i] + prof[i + 1:], others) if others else 0
            table.append(as_vector(int(x) for x in phi[p] + w[key]))
        payoffs.append(table)
    game = NormalFormGame(n, d, actions, payoffs)
    annotation = PotentialAnnotation(d, actions, [as_vector(int(x) for x in row) for row in phi])
    return game, annotation


__all__ = [
    "is_exact_potential",
    "locally_efficient",
    "check_theorem1",
    "Theorem1Report",
    "gen_potential_game",
]
