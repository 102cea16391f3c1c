"""Multi-objective coordination ratio over exact rationals.

A ratio vector rho is *guaranteed* for equilibrium outcomes E and efficient
outcomes F when every y in E weakly dominates rho * z for some z in F. The
guaranteed ratios form a union of lower cones; the MO-CR is its finite set
of apexes, computed layer by layer (one layer per worst equilibrium outcome).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import InvalidArgumentError, PositiveDomainError, SizeGuardError
from .vectors import (
    Vector,
    VectorSet,
    as_vector,
    divide,
    eff,
    eff_raw,
    vector_set,
    weakly_dominates,
    wedge,
    wst,
)

ORACLE_PATH_LIMIT = 10 ** 6


@dataclass(frozen=True)
class ConeUnion:
    """Union of lower cones ``{y : x >= y}``, stored by its efficient apexes."""

    apexes: VectorSet

    def __post_init__(self):
        object.__setattr__(self, "apexes", eff(self.apexes))

    @classmethod
    def of(cls, apexes: Iterable) -> "ConeUnion":
        return cls(vector_set(apexes))

    def __contains__(self, y) -> bool:
        y = as_vector(y)
        return any(weakly_dominates(x, y) for x in self.apexes)

    def __or__(self, other: "ConeUnion") -> "ConeUnion":
        return cone_union(self, other)

    def __and__(self, other: "ConeUnion") -> "ConeUnion":
        return cone_intersect(self, other)


def cone_union(u1: ConeUnion, u2: ConeUnion) -> ConeUnion:
    return ConeUnion(u1.apexes + u2.apexes)


def cone_intersect(u1: ConeUnion, u2: ConeUnion) -> ConeUnion:
    return ConeUnion(tuple(wedge(x1, x2) for x1 in u1.apexes for x2 in u2.apexes))


def _check_frontier(F: VectorSet) -> None:
    for z in F:
        if any(c <= 0 for c in z):
            raise PositiveDomainError(f"efficient outcomes must be strictly positive, got {z}")


def _prepare(wst_E, F):
    E = vector_set(wst_E)
    F = vector_set(F)
    if not E or not F:
        raise InvalidArgumentError("MO-CR needs nonempty equilibrium and frontier sets")
    d = len(F[0])
    if any(len(v) != d for v in E + F):
        raise InvalidArgumentError("dimension mismatch between inputs")
    _check_frontier(F)
    if any(c < 0 for y in E for c in y):
        raise InvalidArgumentError("equilibrium outcomes must be nonnegative")
    return E, F


def ratio_member(rho: Sequence, E: Iterable, F: Iterable) -> bool:
    """Does ``rho`` bound the inefficiency: for all y in E, some z in F has y/z >= rho?"""
    rho = as_vector(rho)
    E = vector_set(E)
    F = vector_set(F)
    if not F:
        raise InvalidArgumentError("frontier must be nonempty")
    _check_frontier(F)
    return all(any(weakly_dominates(divide(y, z), rho) for z in F) for y in E)


def mocr(wst_E: Iterable, F: Iterable) -> VectorSet:
    """Efficient guaranteed ratios, by layered cone-union intersection.

    The input is reduced to its worst members first (the guaranteed ratios
    only depend on them), then each layer intersects the running cone union
    with ``C({y/z : z in F})`` and keeps the efficient apexes.

    Every coordinate of every wedge is one of the vertex values y_k / z_k, so
    the layers run on integer ranks of those values (an order-preserving
    relabelling) and are mapped back at the end.
    """
    E, F = _prepare(wst_E, F)
    layers = wst(E)
    d = len(F[0])
    ratios = [[divide(y, z) for z in F] for y in layers]
    values = [sorted({r[k] for row in ratios for r in row}) for k in range(d)]
    rank = [{v: i for i, v in enumerate(vals)} for vals in values]
    ranked = [[tuple(rank[k][r[k]] for k in range(d)) for r in row] for row in ratios]
    D = eff_raw(ranked[0])
    for row in ranked[1:]:
        D = eff_raw(tuple(map(min, rho, r)) for rho in D for r in row)
    return tuple(tuple(values[k][x[k]] for k in range(d)) for x in D)


def mocr_oracle(wst_E: Iterable, F: Iterable, limit: int = ORACLE_PATH_LIMIT) -> VectorSet:
    """Reference semantics: wedge along every layer path, then keep the efficient ones.

    No reduction of the inputs is done, so this stays independent of
    :func:`mocr`'s pruning. Refuses inputs with more than ``limit`` paths.
    """
    E, F = _prepare(wst_E, F)
    q, m = len(E), len(F)
    if m ** q > limit:
        raise SizeGuardError(f"{m}^{q} paths exceeds the oracle limit {limit}")
    ratios = [[divide(y, z) for z in F] for y in E]
    out = []
    for path in itertools.product(range(m), repeat=q):
        acc: Vector = ratios[0][path[0]]
        for t in range(1, q):
            acc = wedge(acc, ratios[t][path[t]])
        out.append(acc)
    return eff(out)


__all__ = [
    "ConeUnion",
    "cone_union",
    "cone_intersect",
    "ratio_member",
    "mocr",
    "mocr_oracle",
]
