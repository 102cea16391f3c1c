"""Game representations: normal form, symmetric, graphical, plus potential tables.

Profiles are tuples of action indices. Flat tables are indexed by
:func:`profile_index` (mixed radix, agent 0 most significant), which is also
the order in which :func:`itertools.product` enumerates profiles.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, prod
from typing import Dict, Iterator, Sequence, Tuple, Union

from .exceptions import InvalidArgumentError, MalformedGameError
from .vectors import Vector, as_vector, vadd

Profile = Tuple[int, ...]
Config = Tuple[int, ...]


def profile_index(profile: Sequence[int], actions: Sequence[int]) -> int:
    if len(profile) != len(actions):
        raise InvalidArgumentError(f"profile has {len(profile)} entries for {len(actions)} agents")
    index = 0
    for a, alpha in zip(profile, actions):
        if not 0 <= a < alpha:
            raise InvalidArgumentError(f"action {a} out of range [0, {alpha})")
        index = index * alpha + a
    return index


def profile_from_index(index: int, actions: Sequence[int]) -> Profile:
    total = prod(actions)
    if not 0 <= index < total:
        raise InvalidArgumentError(f"profile index {index} out of range [0, {total})")
    out = []
    for alpha in reversed(actions):
        index, a = divmod(index, alpha)
        out.append(a)
    return tuple(reversed(out))


def all_profiles(actions: Sequence[int]) -> Iterator[Profile]:
    return itertools.product(*(range(a) for a in actions))


def configuration_of(profile: Sequence[int], alpha: int) -> Config:
    counts = [0] * alpha
    for a in profile:
        counts[a] += 1
    return tuple(counts)


def configurations(n: int, alpha: int) -> list:
    """All length-``alpha`` count vectors summing to ``n``, lexicographically."""
    if n < 0 or alpha < 1:
        raise InvalidArgumentError("need n >= 0 and alpha >= 1")

    def rec(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in rec(remaining - first, slots - 1):
                yield (first,) + rest

    return list(rec(n, alpha))


def _check_vector(v: Vector, d: int, where: str) -> None:
    if len(v) != d:
        raise MalformedGameError(f"{where}: expected dimension {d}, got {len(v)}")


@dataclass(frozen=True)
class NormalFormGame:
    n: int
    d: int
    actions: Tuple[int, ...]
    payoffs: Tuple[Tuple[Vector, ...], ...]  # payoffs[i][profile_index]

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(int(a) for a in self.actions))
        object.__setattr__(
            self, "payoffs", tuple(tuple(as_vector(v) for v in row) for row in self.payoffs)
        )
        if self.n < 1 or self.d < 1:
            raise MalformedGameError("need n >= 1 and d >= 1")
        if len(self.actions) != self.n or any(a < 1 for a in self.actions):
            raise MalformedGameError("need one action count >= 1 per agent")
        if len(self.payoffs) != self.n:
            raise MalformedGameError(f"expected {self.n} payoff tables, got {len(self.payoffs)}")
        size = prod(self.actions)
        for i, table in enumerate(self.payoffs):
            if len(table) != size:
                raise MalformedGameError(f"agent {i}: table has {len(table)} entries, expected {size}")
            for v in table:
                _check_vector(v, self.d, f"agent {i}")

    @property
    def num_profiles(self) -> int:
        return prod(self.actions)

    def payoff(self, profile: Sequence[int], agent: int) -> Vector:
        return self.payoffs[agent][profile_index(profile, self.actions)]


@dataclass(frozen=True)
class SymmetricGame:
    n: int
    alpha: int
    d: int
    table: Dict[Tuple[int, Config], Vector] = field(hash=False)

    def __post_init__(self):
        table = {(int(a), tuple(int(x) for x in c)): as_vector(v) for (a, c), v in self.table.items()}
        object.__setattr__(self, "table", table)
        if self.n < 1 or self.d < 1 or self.alpha < 1:
            raise MalformedGameError("need n, alpha, d >= 1")
        for (a, c), v in table.items():
            if len(c) != self.alpha or sum(c) != self.n or min(c) < 0:
                raise MalformedGameError(f"bad configuration {c}")
            if not 0 <= a < self.alpha or c[a] < 1:
                raise MalformedGameError(f"action {a} is not played in configuration {c}")
            _check_vector(v, self.d, f"entry {(a, c)}")
        expected = sum(1 for c in configurations(self.n, self.alpha) for a in range(self.alpha) if c[a] >= 1)
        if len(table) != expected:
            raise MalformedGameError(f"table has {len(table)} entries, expected {expected}")

    @property
    def actions(self) -> Tuple[int, ...]:
        return (self.alpha,) * self.n

    @property
    def num_profiles(self) -> int:
        return self.alpha ** self.n

    def u(self, action: int, config: Sequence[int]) -> Vector:
        try:
            return self.table[(action, tuple(config))]
        except KeyError:
            raise MalformedGameError(f"no payoff for action {action} in configuration {tuple(config)}") from None

    def payoff(self, profile: Sequence[int], agent: int) -> Vector:
        profile_index(profile, self.actions)  # range check
        return self.u(profile[agent], configuration_of(profile, self.alpha))

    def config_welfare(self, config: Sequence[int]) -> Vector:
        total = (0,) * self.d
        for a, count in enumerate(config):
            if count:
                total = vadd(total, tuple(count * x for x in self.u(a, config)))
        return total


@dataclass(frozen=True)
class GraphicalGame:
    n: int
    d: int
    actions: Tuple[int, ...]
    scopes: Tuple[Tuple[int, ...], ...]
    tables: Tuple[Tuple[Vector, ...], ...]  # tables[i][local index over scopes[i]]

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(int(a) for a in self.actions))
        object.__setattr__(self, "scopes", tuple(tuple(sorted(int(j) for j in s)) for s in self.scopes))
        object.__setattr__(
            self, "tables", tuple(tuple(as_vector(v) for v in row) for row in self.tables)
        )
        if self.n < 1 or self.d < 1:
            raise MalformedGameError("need n >= 1 and d >= 1")
        if len(self.actions) != self.n or any(a < 1 for a in self.actions):
            raise MalformedGameError("need one action count >= 1 per agent")
        if len(self.scopes) != self.n or len(self.tables) != self.n:
            raise MalformedGameError("need one scope and one table per agent")
        for i, (scope, table) in enumerate(zip(self.scopes, self.tables)):
            if i not in scope:
                raise MalformedGameError(f"agent {i} missing from its own scope")
            if len(set(scope)) != len(scope) or any(not 0 <= j < self.n for j in scope):
                raise MalformedGameError(f"agent {i}: bad scope {scope}")
            size = prod(self.actions[j] for j in scope)
            if len(table) != size:
                raise MalformedGameError(f"agent {i}: table has {len(table)} entries, expected {size}")
            for v in table:
                _check_vector(v, self.d, f"agent {i}")

    @property
    def num_profiles(self) -> int:
        return prod(self.actions)

    def local_actions(self, agent: int) -> Tuple[int, ...]:
        return tuple(self.actions[j] for j in self.scopes[agent])

    def payoff(self, profile: Sequence[int], agent: int) -> Vector:
        profile_index(profile, self.actions)
        scope = self.scopes[agent]
        local = tuple(profile[j] for j in scope)
        return self.tables[agent][profile_index(local, self.local_actions(agent))]


@dataclass(frozen=True)
class PotentialAnnotation:
    d: int
    actions: Tuple[int, ...]
    phi: Tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(int(a) for a in self.actions))
        object.__setattr__(self, "phi", tuple(as_vector(v) for v in self.phi))
        if len(self.phi) != prod(self.actions):
            raise MalformedGameError(f"potential has {len(self.phi)} entries, expected {prod(self.actions)}")
        for v in self.phi:
            _check_vector(v, self.d, "potential")

    def __call__(self, profile: Sequence[int]) -> Vector:
        return self.phi[profile_index(profile, self.actions)]


Game = Union[NormalFormGame, SymmetricGame, GraphicalGame]


def payoff(game: Game, profile: Sequence[int], agent: int) -> Vector:
    if not 0 <= agent < game.n:
        raise InvalidArgumentError(f"agent {agent} out of range")
    return game.payoff(tuple(profile), agent)


def utilitarian(game: Game, profile: Sequence[int]) -> Vector:
    """Componentwise sum of every agent's payoff at ``profile``."""
    profile = tuple(profile)
    total = game.payoff(profile, 0)
    for i in range(1, game.n):
        total = vadd(total, game.payoff(profile, i))
    return total


def representation_length(game: Game) -> int:
    """Number of scalars the representation stores."""
    if isinstance(game, NormalFormGame):
        return game.n * game.num_profiles * game.d
    if isinstance(game, SymmetricGame):
        return game.alpha * comb(game.n + game.alpha - 1, game.alpha - 1) * game.d
    if isinstance(game, GraphicalGame):
        return sum(game.d * prod(game.local_actions(i)) for i in range(game.n))
    raise InvalidArgumentError(f"unknown game type {type(game).__name__}")


def to_normal_form(game: Game) -> NormalFormGame:
    if isinstance(game, NormalFormGame):
        return game
    profiles = list(all_profiles(game.actions))
    payoffs = [[game.payoff(p, i) for p in profiles] for i in range(game.n)]
    return NormalFormGame(game.n, game.d, game.actions, payoffs)
