"""A small two-phase simplex over exact rationals.

Solves ``max c.x  s.t.  A x = b, x >= 0``. Bland's rule keeps it finite on
degenerate problems; the problems built by :mod:`mogames.mixed` have a handful
of rows, so a dense tableau is fine.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction] = None
    x: Optional[Tuple[Fraction, ...]] = None


class _Tableau:
    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows  # each row: coefficients..., rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        self.rows[r] = row = [v / piv for v in row]
        for i, other in enumerate(self.rows):
            if i != r and other[col] != 0:
                f = other[col]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> str:
        while True:
            entering = None
            for j in range(allowed):
                if j in self.basis:
                    continue
                reduced = cost[j] - sum(cost[b] * row[j] for b, row in zip(self.basis, self.rows))
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    key = (row[-1] / row[entering], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)

    def value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), Fraction(0))

    def solution(self, n: int) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * n
        for b, row in zip(self.basis, self.rows):
            if b < n:
                x[b] = row[-1]
        return tuple(x)


def solve_lp(c: Sequence, A_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    n = len(c)
    m = len(A_eq)
    c = [Fraction(v) for v in c]
    rows = []
    for i in range(m):
        coeffs = [Fraction(v) for v in A_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(coeffs + art + [rhs])
    tab = _Tableau(rows, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.optimize(phase1, n + m)
    if tab.value(phase1) < 0:
        return LPResult("infeasible")

    # Drive remaining (zero-valued) artificials out of the basis; drop
    # redundant rows that cannot pivot on an original column.
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n:
            col = next((j for j in range(n) if tab.rows[r][j] != 0), None)
            if col is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1
    tab.rows = [row[:n] + [row[-1]] for row in tab.rows]

    status = tab.optimize(c, n)
    if status == "unbounded":
        return LPResult("unbounded")
    return LPResult("optimal", tab.value(c), tab.solution(n))
