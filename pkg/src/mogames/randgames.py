"""Random game generators and Monte-Carlo estimators.

Every generator takes an explicit seed. Monte-Carlo trials draw from one
child stream per trial index (``SeedSequence(seed).spawn``), so results do
not depend on how trials are scheduled across threads.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import prod
from typing import Callable, List, Tuple

import numpy as np

from .exceptions import InvalidArgumentError
from .games import GraphicalGame, NormalFormGame, SymmetricGame, configurations
from .vectors import as_vector


def _vectors(arr: np.ndarray) -> list:
    return [as_vector(int(x) for x in row) for row in arr]


def gen_uniform_normal(n: int, alpha: int, d: int, lo: int = 1, hi: int = 16, seed: int = 0) -> NormalFormGame:
    """Normal-form game with i.i.d. uniform integer payoffs in [lo, hi]."""
    if lo > hi:
        raise InvalidArgumentError("need lo <= hi")
    rng = np.random.default_rng(seed)
    size = alpha ** n
    raw = rng.integers(lo, hi, size=(n, size, d), endpoint=True)
    return NormalFormGame(n, d, (alpha,) * n, [_vectors(raw[i]) for i in range(n)])


def gen_uniform_symmetric(n: int, alpha: int, d: int, lo: int = 1, hi: int = 16, seed: int = 0) -> SymmetricGame:
    if lo > hi:
        raise InvalidArgumentError("need lo <= hi")
    rng = np.random.default_rng(seed)
    table = {}
    for c in configurations(n, alpha):
        for a in range(alpha):
            if c[a] >= 1:
                table[(a, c)] = as_vector(int(x) for x in rng.integers(lo, hi, size=d, endpoint=True))
    return SymmetricGame(n, alpha, d, table)


def grid_scopes(n1: int, n2: int) -> List[Tuple[int, ...]]:
    """Closed 4-neighbourhoods on an n1 x n2 grid, agents numbered row-major."""
    scopes = []
    for r in range(n1):
        for c in range(n2):
            scope = {r * n2 + c}
            for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
                rr, cc = r + dr, c + dc
                if 0 <= rr < n1 and 0 <= cc < n2:
                    scope.add(rr * n2 + cc)
            scopes.append(tuple(sorted(scope)))
    return scopes


def gen_graphical(
    scopes, alpha: int, d: int, lo: int = 1, hi: int = 16, seed: int = 0
) -> GraphicalGame:
    if lo > hi:
        raise InvalidArgumentError("need lo <= hi")
    rng = np.random.default_rng(seed)
    n = len(scopes)
    tables = [_vectors(rng.integers(lo, hi, size=(alpha ** len(s), d), endpoint=True)) for s in scopes]
    return GraphicalGame(n, d, (alpha,) * n, scopes, tables)


def gen_graphical_grid(n1: int, n2: int, alpha: int, d: int, lo: int = 1, hi: int = 16, seed: int = 0) -> GraphicalGame:
    return gen_graphical(grid_scopes(n1, n2), alpha, d, lo, hi, seed)


@dataclass(frozen=True)
class ResponseTables:
    """Efficient-response marks: ``marks[i]`` has shape (alpha^(n-1), alpha).

    Row r of ``marks[i]`` is the adversary profile with index r (mixed radix
    over the other agents, in agent order); exactly ``beta`` entries are True.
    """

    n: int
    alpha: int
    beta: int
    marks: Tuple[np.ndarray, ...]

    def profile_masks(self) -> List[np.ndarray]:
        """Per agent, a boolean array of shape (alpha,)*n over full profiles."""
        out = []
        for i, m in enumerate(self.marks):
            t = m.reshape((self.alpha,) * (self.n - 1) + (self.alpha,))
            out.append(np.moveaxis(t, -1, i))
        return out


def _draw_marks(rng: np.random.Generator, n: int, alpha: int, beta: int) -> Tuple[np.ndarray, ...]:
    cells = alpha ** (n - 1)
    keys = rng.random((n, cells, alpha))
    ranks = keys.argsort(axis=-1).argsort(axis=-1)  # uniform random permutation per cell
    marked = ranks < beta
    return tuple(marked[i] for i in range(n))


def gen_response_tables(n: int, alpha: int, beta: int, seed=0) -> ResponseTables:
    """Independent uniform beta-subsets of efficient actions for every (agent, adversary profile)."""
    if not 1 <= beta <= alpha:
        raise InvalidArgumentError(f"need 1 <= beta <= alpha, got beta={beta}, alpha={alpha}")
    if n < 1:
        raise InvalidArgumentError("need n >= 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return ResponseTables(n, alpha, beta, _draw_marks(rng, n, alpha, beta))


def count_pn(tables: ResponseTables) -> int:
    """Number of profiles where every agent's action is marked."""
    masks = tables.profile_masks()
    joint = masks[0].copy()
    for m in masks[1:]:
        joint &= m
    return int(joint.sum())


def _run_trials(fn: Callable[[np.random.Generator], float], trials: int, seed: int, threads: int = 1) -> np.ndarray:
    if trials < 1:
        raise InvalidArgumentError("need at least one trial")
    children = np.random.SeedSequence(seed).spawn(trials)

    def one(ss):
        return fn(np.random.default_rng(ss))

    if threads <= 1:
        return np.array([one(ss) for ss in children])
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return np.array(list(pool.map(one, children)))


@dataclass(frozen=True)
class ZMoments:
    n: int
    beta: int
    samples: np.ndarray

    @property
    def mean(self) -> float:
        return float(self.samples.mean())

    @property
    def variance(self) -> float:
        return float(self.samples.var(ddof=1)) if len(self.samples) > 1 else 0.0

    @property
    def expected(self) -> int:
        return self.beta ** self.n

    def band(self, gamma: float) -> Tuple[float, float]:
        e = self.expected
        return (1 - gamma) * e, (1 + gamma) * e

    def tail_freq(self, gamma: float) -> float:
        """Fraction of trials with (1-gamma) beta^n <= Z <= (1+gamma) beta^n."""
        lo, hi = self.band(gamma)
        return float(((self.samples >= lo) & (self.samples <= hi)).mean())

    def chebyshev_bound(self, gamma: float) -> float:
        return 1 - 1 / (gamma ** 2 * self.expected)


def sample_Z(n: int, alpha: int, beta: int, trials: int, seed: int, threads: int = 1) -> np.ndarray:
    if not 1 <= beta <= alpha:
        raise InvalidArgumentError(f"need 1 <= beta <= alpha, got beta={beta}, alpha={alpha}")
    return _run_trials(lambda rng: count_pn(gen_response_tables(n, alpha, beta, rng)), trials, seed, threads)


def estimate_Z_moments(n: int, alpha: int, beta: int, trials: int, seed: int, threads: int = 1) -> ZMoments:
    return ZMoments(n, beta, sample_Z(n, alpha, beta, trials, seed, threads))


def sample_simplex(rng: np.random.Generator, count: int, d: int) -> np.ndarray:
    """Uniform points in {u >= 0, sum(u) <= 1} by rejection from the unit cube."""
    out = np.empty((0, d))
    while len(out) < count:
        need = count - len(out)
        batch = rng.random((max(16, int(need * (2 * prod(range(1, d + 1))) + 16)), d))
        out = np.vstack([out, batch[batch.sum(axis=1) <= 1]])
    return out[:count]


def count_efficient(points: np.ndarray) -> int:
    """Number of non-dominated rows (floats; duplicates have probability zero)."""
    n, d = points.shape
    if n == 0:
        return 0
    if d == 1:
        return int((points[:, 0] == points[:, 0].max()).sum())
    if d == 2:
        order = np.lexsort((-points[:, 1], -points[:, 0]))
        ys = points[order, 1]
        prev_max = np.maximum.accumulate(np.concatenate([[-np.inf], ys[:-1]]))
        return int((ys > prev_max).sum())
    ge = (points[:, None, :] >= points[None, :, :]).all(axis=2)
    gt = (points[:, None, :] > points[None, :, :]).any(axis=2)
    dominated = (ge & gt).any(axis=0)
    return int((~dominated).sum())


def simplex_front_size(alpha: int, d: int, trials: int, seed: int, threads: int = 1) -> float:
    """Mean number of efficient points among ``alpha`` uniform simplex points."""
    if alpha < 1 or d < 1:
        raise InvalidArgumentError("need alpha, d >= 1")
    return float(sample_front_sizes(alpha, d, trials, seed, threads).mean())


def sample_front_sizes(alpha: int, d: int, trials: int, seed: int, threads: int = 1) -> np.ndarray:
    return _run_trials(lambda rng: count_efficient(sample_simplex(rng, alpha, d)), trials, seed, threads)


def front_size_asymptote(alpha: int, d: int) -> float:
    """d / (d!)^(1/d) * alpha^((d-1)/d)."""
    return d / prod(range(1, d + 1)) ** (1 / d) * alpha ** ((d - 1) / d)


__all__ = [
    "gen_uniform_normal",
    "gen_uniform_symmetric",
    "gen_graphical",
    "gen_graphical_grid",
    "grid_scopes",
    "ResponseTables",
    "gen_response_tables",
    "count_pn",
    "ZMoments",
    "sample_Z",
    "estimate_Z_moments",
    "sample_simplex",
    "count_efficient",
    "simplex_front_size",
    "sample_front_sizes",
    "front_size_asymptote",
]
