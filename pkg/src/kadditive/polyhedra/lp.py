"""Exact two-phase simplex over rationals (Bland's rule, free variables).

The tableau is kept fraction-free: every row is an integer vector scaled by a
positive factor, so row ``r`` reads ``z[basis[r]] = T[r][-1] / T[r][basis[r]]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    # improving ray when unbounded
    direction: tuple[Fraction, ...] | None = None


def _reduce(row):
    g = gcd(*row)
    return [a // g for a in row] if g > 1 else row


def _pivot(T, r, j):
    row = T[r]
    p = row[j]
    if p < 0:
        row = [-a for a in row]
        T[r] = row
        p = -p
    for i, other in enumerate(T):
        if i != r:
            f = other[j]
            if f:
                T[i] = _reduce([p * a - f * b for a, b in zip(other, row)])


def _run(T, basis, ncols):
    """Minimize with the objective in the last row of ``T``.

    Returns None on optimality, else the entering column of an unbounded ray.
    """
    m = len(T) - 1
    while True:
        obj = T[-1]
        j = next((c for c in range(ncols) if obj[c] < 0), None)
        if j is None:
            return None
        leave = None
        for r in range(m):
            a = T[r][j]
            if a > 0:
                if leave is None:
                    leave = r
                    continue
                # compare T[r][-1]/a with T[leave][-1]/T[leave][j]
                lhs = T[r][-1] * T[leave][j]
                rhs = T[leave][-1] * a
                if lhs < rhs or (lhs == rhs and basis[r] < basis[leave]):
                    leave = r
        if leave is None:
            return j
        _pivot(T, leave, j)
        basis[leave] = j


def _int_row(values):
    fr = [Fraction(v) for v in values]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [f.numerator * (den // f.denominator) for f in fr]


def linprog(c: Sequence, ineqs: Sequence = (), eqs: Sequence = ()) -> LPResult:
    """Minimize ``c.x`` over free ``x`` subject to rows ``(a..., b)``.

    Inequality rows mean ``a.x >= b``; equality rows ``a.x = b``.
    """
    d = len(c)
    ineqs = [_int_row(r) for r in ineqs]
    eqs = [_int_row(r) for r in eqs]
    mi = len(ineqs)
    rows = ineqs + eqs
    m = len(rows)
    nreal = 2 * d + mi
    ncols = nreal + m
    T = []
    for r, row in enumerate(rows):
        a, b = row[:-1], row[-1]
        line = [0] * (ncols + 1)
        for j in range(d):
            line[j] = a[j]
            line[d + j] = -a[j]
        if r < mi:
            line[2 * d + r] = -1
        line[-1] = b
        if b < 0:
            line = [-x for x in line]
        # artificial coefficient 1 keeps every row at scale 1 initially
        line[nreal + r] = 1
        T.append(line)
    basis = [nreal + r for r in range(m)]

    obj = [0] * (ncols + 1)
    for line in T:
        for j in range(nreal):
            obj[j] -= line[j]
        obj[-1] -= line[-1]
    T.append(obj)
    _run(T, basis, nreal)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive artificials out; rows that cannot pivot are redundant
    r = 0
    while r < len(basis):
        if basis[r] >= nreal:
            j = next((j for j in range(nreal) if T[r][j] != 0), None)
            if j is None:
                del T[r]
                del basis[r]
                continue
            _pivot(T, r, j)
            basis[r] = j
        r += 1

    # phase two objective, scaled to integers by a positive factor
    cost = _int_row(list(c) + [0])[:-1] if d else []
    cost = cost + [-a for a in cost] + [0] * mi
    obj = cost + [0] * (ncols + 1 - nreal)
    for r, bj in enumerate(basis):
        cb = obj[bj]
        if cb:
            line = T[r]
            obj = _reduce([line[bj] * a - cb * b for a, b in zip(obj, line)])
    T[-1] = obj
    entering = _run(T, basis, nreal)

    z = [Fraction(0)] * nreal
    for r, bj in enumerate(basis):
        z[bj] = Fraction(T[r][-1], T[r][bj])
    x = tuple(z[j] - z[d + j] for j in range(d))
    if entering is not None:
        dz = [Fraction(0)] * nreal
        dz[entering] = Fraction(1)
        for r, bj in enumerate(basis):
            dz[bj] = Fraction(-T[r][entering], T[r][bj])
        direction = tuple(dz[j] - dz[d + j] for j in range(d))
        return LPResult(UNBOUNDED, None, x, direction)
    value = sum((Fraction(a) * xi for a, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, value, x)


def feasible_point(ineqs: Sequence = (), eqs: Sequence = (), d: int | None = None):
    """Some point of the system, or None when it is infeasible."""
    if d is None:
        sample = (list(ineqs) + list(eqs))
        d = len(sample[0]) - 1 if sample else 0
    res = linprog([0] * d, ineqs, eqs)
    return None if res.status == INFEASIBLE else res.x
