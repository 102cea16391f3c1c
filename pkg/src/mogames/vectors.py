"""Exact payoff vectors, Pareto-dominance and efficient / worst set extraction.

A payoff vector is a tuple of :class:`fractions.Fraction`; a vector set is a
tuple of such vectors, deduplicated and sorted ascending lexicographically, so
that two equal sets always compare (and serialize) equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .exceptions import InvalidArgumentError, PositiveDomainError

Rational = Union[int, Fraction, str]
Vector = Tuple[Fraction, ...]
VectorSet = Tuple[Vector, ...]

__all__ = [
    "Vector",
    "VectorSet",
    "to_rational",
    "as_vector",
    "vector_set",
    "zeros",
    "ones",
    "dominates",
    "weakly_dominates",
    "eff",
    "eff_raw",
    "wst",
    "eff_indices",
    "elementwise",
    "star",
    "divide",
    "wedge",
    "power",
    "vadd",
    "scale_set",
    "divide_set",
    "format_rational",
]


def to_rational(value) -> Fraction:
    """Parse an int, Fraction, ``"p/q"`` string or decimal string exactly.

    Floats are refused: every number entering the exact path must be
    representable without rounding surprises.
    """
    if isinstance(value, bool):
        raise InvalidArgumentError(f"not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgumentError(f"not a rational number: {value!r}") from exc
    raise InvalidArgumentError(f"not a rational number: {value!r} ({type(value).__name__})")


def format_rational(x: Fraction) -> Union[int, str]:
    """JSON form of a rational: a plain int when integral, else ``"p/q"``."""
    if x.denominator == 1:
        return int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_vector(components: Iterable) -> Vector:
    v = tuple(to_rational(c) for c in components)
    if not v:
        raise InvalidArgumentError("payoff vectors need at least one component")
    return v


def vector_set(vectors: Iterable[Iterable]) -> VectorSet:
    """Canonical form: deduplicated, ascending lexicographic order."""
    return tuple(sorted({as_vector(v) if not _is_vector(v) else v for v in vectors}))


def _is_vector(v) -> bool:
    return isinstance(v, tuple) and all(type(c) is Fraction for c in v)


def zeros(d: int) -> Vector:
    return (Fraction(0),) * d


def ones(d: int) -> Vector:
    return (Fraction(1),) * d


def _check_dims(x: Sequence, y: Sequence) -> None:
    if len(x) != len(y):
        raise InvalidArgumentError(f"dimension mismatch: {len(x)} vs {len(y)}")


def weakly_dominates(x: Sequence, y: Sequence) -> bool:
    """``x >= y`` in every objective."""
    _check_dims(x, y)
    return all(a >= b for a, b in zip(x, y))


def dominates(x: Sequence, y: Sequence) -> bool:
    """Pareto-dominance: ``x >= y`` everywhere and ``x > y`` somewhere."""
    _check_dims(x, y)
    strict = False
    for a, b in zip(x, y):
        if a < b:
            return False
        if a > b:
            strict = True
    return strict


def _dominates_unchecked(x, y) -> bool:
    strict = False
    for a, b in zip(x, y):
        if a < b:
            return False
        if a > b:
            strict = True
    return strict


def _eff_sorted_desc(vs: list) -> list:
    # vs: distinct vectors in descending lexicographic order. A vector can only
    # be dominated by one that precedes it, and if it is dominated at all then
    # it is dominated by an already-kept efficient vector.
    if not vs:
        return []
    d = len(vs[0])
    if d == 1:
        return [vs[0]]
    if d == 2:
        kept = []
        best = None
        for v in vs:
            if best is None or v[1] > best:
                kept.append(v)
                best = v[1]
        return kept
    kept = []
    for v in vs:
        for k in kept:
            if _dominates_unchecked(k, v):
                break
        else:
            kept.append(v)
    return kept


def eff(vectors: Iterable) -> VectorSet:
    """Non-dominated members of a finite set; empty in, empty out."""
    vs = vector_set(vectors)
    if vs:
        d = len(vs[0])
        if any(len(v) != d for v in vs):
            raise InvalidArgumentError("vectors of mixed dimension")
    return eff_raw(vs)


def eff_raw(vectors: Iterable[tuple]) -> VectorSet:
    """:func:`eff` for tuples of any mutually comparable scalars, without conversion.

    Callers guarantee a common dimension.
    """
    vs = sorted(set(vectors), reverse=True)
    return tuple(reversed(_eff_sorted_desc(vs)))


def wst(vectors: Iterable) -> VectorSet:
    """Members that dominate no other member."""
    neg = [tuple(-c for c in v) for v in vector_set(vectors)]
    return tuple(sorted(tuple(-c for c in v) for v in eff(neg)))


def _eff_indices_generic(vectors: Sequence[Sequence]) -> list:
    out = []
    for i, v in enumerate(vectors):
        if not any(_dominates_unchecked(w, v) for w in vectors):
            out.append(i)
    return out


def _eff_indices_2d(vectors: Sequence[Sequence]) -> list:
    # Sort by (x desc, y desc); a vector is efficient iff its y is at least the
    # best y seen among vectors with strictly larger x, and it ties the top of
    # its own x-group (duplicates of an efficient vector are all efficient).
    order = sorted(range(len(vectors)), key=lambda i: (vectors[i][0], vectors[i][1]), reverse=True)
    out = []
    best_prev = None  # max y over strictly larger x groups
    pos = 0
    while pos < len(order):
        x = vectors[order[pos]][0]
        end = pos
        while end < len(order) and vectors[order[end]][0] == x:
            end += 1
        top = vectors[order[pos]][1]
        if best_prev is None or top > best_prev:
            for j in range(pos, end):
                if vectors[order[j]][1] == top:
                    out.append(order[j])
        best_prev = top if best_prev is None else max(best_prev, top)
        pos = end
    return sorted(out)


def eff_indices(vectors: Sequence[Sequence]) -> list:
    """Indices of the efficient members of a list that may hold duplicates.

    Equal vectors never dominate each other, so every copy of an efficient
    vector is reported.
    """
    if not vectors:
        return []
    if len(vectors[0]) == 2:
        return _eff_indices_2d(vectors)
    return _eff_indices_generic(vectors)


def star(x: Sequence, y: Sequence) -> Vector:
    _check_dims(x, y)
    return tuple(a * b for a, b in zip(x, y))


def divide(x: Sequence, y: Sequence) -> Vector:
    _check_dims(x, y)
    if any(b <= 0 for b in y):
        raise PositiveDomainError(f"divisor must be strictly positive: {y}")
    return tuple(Fraction(a) / b for a, b in zip(x, y))


def wedge(x: Sequence, y: Sequence) -> Vector:
    _check_dims(x, y)
    return tuple(min(a, b) for a, b in zip(x, y))


def power(x: Sequence, y: Sequence) -> Vector:
    _check_dims(x, y)
    out = []
    for a, b in zip(x, y):
        b = Fraction(b)
        if b.denominator != 1:
            raise InvalidArgumentError(f"exponent must be an integer, got {b}")
        if a == 0 and b < 0:
            raise PositiveDomainError("zero raised to a negative power")
        out.append(Fraction(a) ** int(b))
    return tuple(out)


_OPS = {"star": star, "divide": divide, "wedge": wedge, "pow": power}


def elementwise(op: str, x: Sequence, y: Sequence) -> Vector:
    try:
        fn = _OPS[op]
    except KeyError:
        raise InvalidArgumentError(f"unknown elementwise op {op!r}") from None
    return fn(as_vector(x), as_vector(y))


def vadd(x: Sequence, y: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def scale_set(r: Sequence, X: Iterable) -> VectorSet:
    return vector_set(star(r, x) for x in X)


def divide_set(X: Iterable, r: Sequence) -> VectorSet:
    return vector_set(divide(x, r) for x in X)
