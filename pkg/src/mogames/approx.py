"""(1+eps) logarithmic-grid coverings and the approximate MO-CR pipeline."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .exceptions import InvalidArgumentError, PositiveDomainError
from .mocr import mocr
from .vectors import VectorSet, as_vector, to_rational, vector_set, wst


@dataclass(frozen=True)
class CoveringParams:
    eps: Fraction

    def __post_init__(self):
        eps = to_rational(self.eps)
        if eps <= 0:
            raise InvalidArgumentError(f"eps must be positive, got {eps}")
        object.__setattr__(self, "eps", eps)

    @property
    def base(self) -> Fraction:
        return 1 + self.eps


def _params(p) -> CoveringParams:
    return p if isinstance(p, CoveringParams) else CoveringParams(p)


def _floor_log(x: Fraction, base: Fraction) -> int:
    # Largest l with base**l <= x. A float estimate seeds the search; the
    # answer is settled by exact comparisons only.
    try:
        guess = math.floor(math.log(x) / math.log(base))
    except (OverflowError, ValueError):
        guess = 0
    lo = guess
    while base ** lo > x:
        lo -= 1
    while base ** (lo + 1) <= x:
        lo += 1
    return lo


def log_grid_index(x: Sequence, params) -> Tuple[int, ...]:
    base = _params(params).base
    x = as_vector(x)
    if any(c <= 0 for c in x):
        raise PositiveDomainError(f"grid indexing needs strictly positive vectors, got {x}")
    return tuple(_floor_log(c, base) for c in x)


def grid_point(index: Sequence[int], params) -> Tuple[Fraction, ...]:
    base = _params(params).base
    return tuple(base ** int(l) for l in index)


def occupied_cells(X: Iterable, params) -> set:
    return {log_grid_index(x, params) for x in X}


def under_cover(wst_E: Iterable, params) -> VectorSet:
    """Snap each worst outcome down to its grid corner, then keep the worst corners."""
    p = _params(params)
    cells = occupied_cells(vector_set(wst_E), p)
    return wst(grid_point(l, p) for l in cells)


def stick_cover(F: Iterable, params) -> VectorSet:
    """One member of F per occupied grid cell (lexicographically smallest), then WST."""
    p = _params(params)
    reps = {}
    for z in vector_set(F):  # ascending, so the first seen per cell is the smallest
        reps.setdefault(log_grid_index(z, p), z)
    return wst(reps.values())


def approx_mocr(wst_E: Iterable, F: Iterable, eps1, eps2) -> Tuple[VectorSet, Fraction]:
    """MO-CR of the coverings, plus the multiplicative guarantee (1+eps1)(1+eps2)."""
    p1, p2 = _params(eps1), _params(eps2)
    result = mocr(under_cover(wst_E, p1), stick_cover(F, p2))
    return result, p1.base * p2.base


__all__ = [
    "CoveringParams",
    "log_grid_index",
    "grid_point",
    "occupied_cells",
    "under_cover",
    "stick_cover",
    "approx_mocr",
]
