"""Two-phase simplex over the rationals, Bland's rule.

Only what the rest of the package needs: find x >= 0 with A x = b,
optionally minimizing a linear objective.  Problems here are tiny (tens
of variables), so a dense Fraction tableau is plenty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    piv = T[r][c]
    if piv != 1:
        T[r] = [x / piv for x in T[r]]
    row = T[r]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [x - f * y for x, y in zip(other, row)]


def _run(T: list[list[Fraction]], basis: list[int], ncols: int) -> bool:
    """Optimize the tableau in place; the cost row is T[-1].

    Returns False if the objective is unbounded below.
    """
    m = len(basis)
    while True:
        cost = T[-1]
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return True
        leave = None
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, leave, enter)
        basis[leave] = enter


def find_nonnegative_solution(
    A_eq: Sequence[Sequence], b_eq: Sequence, objective: Sequence | None = None
) -> list[Fraction] | None:
    """Return a vertex x >= 0 of {A_eq x = b_eq}, or None if infeasible.

    With `objective`, the vertex minimizes objective . x (when the minimum
    is unbounded the phase-one vertex is returned instead).
    """
    m = len(A_eq)
    n = len(A_eq[0]) if m else (len(objective) if objective is not None else 0)
    if m == 0:
        return [Fraction(0)] * n
    rows = []
    for a, b in zip(A_eq, b_eq):
        a = [Fraction(x) for x in a]
        b = Fraction(b)
        if b < 0:
            a, b = [-x for x in a], -b
        rows.append((a, b))

    # phase one: artificial variables n .. n+m-1
    T = []
    for i, (a, b) in enumerate(rows):
        T.append(a + [Fraction(int(k == i)) for k in range(m)] + [b])
    cost = [Fraction(0)] * (n + m + 1)
    for row in T:
        cost = [c - x for c, x in zip(cost, row)]
    for k in range(n, n + m):
        cost[k] = Fraction(0)
    T.append(cost)
    basis = list(range(n, n + m))
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        return None

    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(basis):
        if basis[i] >= n:
            c = next((j for j in range(n) if T[i][j] != 0), None)
            if c is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, i, c)
            basis[i] = c
        i += 1
    T = [row[:n] + [row[-1]] for row in T[:-1]]

    if objective is not None:
        c = [Fraction(x) for x in objective] + [Fraction(0)]
        for i, j in enumerate(basis):
            if c[j] != 0:
                f = c[j]
                c = [x - f * y for x, y in zip(c, T[i])]
        T.append(c)
        saved = [row[:] for row in T[:-1]], basis[:]
        if not _run(T, basis, n):
            T, basis = saved[0] + [c], saved[1]
        T = T[:-1]

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return x
