"""Vertex and extreme-ray enumeration by the double description method.

The polyhedron ``{x : A x >= b, E x = f}`` is homogenized to the cone
``{(x, t) : A x - b t >= 0, E x - f t = 0, t >= 0}``; its extreme rays with
``t > 0`` are the vertices and those with ``t = 0`` the extreme rays of the
recession cone.  Adjacency uses the combinatorial zero-set test.
"""

from __future__ import annotations

from fractions import Fraction

from .. import kernels
from ..errors import NotPointedError, ResourceBudgetError
from .base import EQ, GE, HPolyhedron, LinearConstraint, VPolyhedron, primitive, rational_row_to_int
from .fm import _infeasible_row, _reduce_against, clean_rows, fm_eliminate_all

DEFAULT_DD_BUDGET = 50_000


def _rank(rows, ncols):
    basis = []
    for r in rows:
        red = _reduce_against(basis, r)
        piv = next((j for j in range(ncols) if red[j]), None)
        if piv is not None:
            basis.append((piv, primitive(red)))
    return len(basis)


def _inverse_columns(A):
    """Columns of A^{-1} for a square nonsingular integer matrix."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [[M[i][n + j] for i in range(n)] for j in range(n)]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def enumerate_generators(P: HPolyhedron, budget: int = DEFAULT_DD_BUDGET) -> VPolyhedron:
    """Minimal vertices and extreme rays of a pointed polyhedron."""
    d = P.dimension
    ineqs, eqs = clean_rows(*P.int_rows(), d + 1)
    if ineqs == [_infeasible_row(d + 1)]:
        return VPolyhedron(P.names)
    if _rank([r[:-1] for r in ineqs + eqs], d) < d:
        raise NotPointedError(f"polyhedron over {P.names} has a nonzero lineality space")
    # homogenized rows; equality flags kept alongside
    rows = [r[:-1] + (-r[-1],) for r in eqs] + [(0,) * d + (1,)] + [r[:-1] + (-r[-1],) for r in ineqs]
    is_eq = [True] * len(eqs) + [False] * (len(ineqs) + 1)
    D = d + 1

    chosen, basis = [], []
    for idx, r in enumerate(rows):
        red = _reduce_against(basis, r)
        piv = next((j for j in range(D) if red[j]), None)
        if piv is not None:
            basis.append((piv, primitive(red)))
            chosen.append(idx)
            if len(chosen) == D:
                break
    cols = _inverse_columns([rows[i] for i in chosen])
    rays, zsets = [], []
    for k, col in enumerate(cols):
        if is_eq[chosen[k]]:
            continue
        rays.append(rational_row_to_int(col))
        zsets.append(sum(1 << chosen[i] for i in range(D) if i != k))

    chosen_set = set(chosen)
    pending = [i for i in range(len(rows)) if i not in chosen_set]
    for idx in pending:
        h = rows[idx]
        vals = [_dot(h, r) for r in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        bit = 1 << idx
        new_rays, new_z = [], []
        for i, j in kernels.adjacent_pairs(zsets, plus, minus, D - 2):
            r = tuple(vals[i] * b - vals[j] * a for a, b in zip(rays[i], rays[j]))
            new_rays.append(primitive(r))
            new_z.append((zsets[i] & zsets[j]) | bit)
        keep = zero if is_eq[idx] else sorted(plus + zero)
        rays = [rays[i] for i in keep] + new_rays
        zsets = [zsets[i] | (bit if vals[i] == 0 else 0) for i in keep] + new_z
        if len(rays) > budget:
            raise ResourceBudgetError(f"double description exceeded {budget} rays", step={"row": idx})

    vertices, directions = [], []
    for r in rays:
        t = r[-1]
        if t > 0:
            vertices.append(tuple(Fraction(x, t) for x in r[:-1]))
        else:
            directions.append(r[:-1])
    if not vertices:
        return VPolyhedron(P.names)
    return VPolyhedron(P.names, tuple(vertices), tuple(directions))


def hull(V: VPolyhedron, **kwargs) -> HPolyhedron:
    """H-representation of conv(vertices) + cone(rays), by projection."""
    d = len(V.names)
    if V.is_empty:
        return HPolyhedron.empty(V.names)
    nv, nr = len(V.vertices), len(V.rays)
    lam = tuple(f"__lam{i}" for i in range(nv)) + tuple(f"__mu{i}" for i in range(nr))
    names = tuple(V.names) + lam
    gens = list(V.vertices) + [tuple(Fraction(x) for x in r) for r in V.rays]
    cons = []
    for c in range(d):
        coeffs = [Fraction(0)] * (d + nv + nr)
        coeffs[c] = Fraction(1)
        for g, p in enumerate(gens):
            coeffs[d + g] = -p[c]
        cons.append(LinearConstraint(tuple(coeffs), EQ, 0))
    for g in range(nv + nr):
        coeffs = [Fraction(0)] * (d + nv + nr)
        coeffs[d + g] = Fraction(1)
        cons.append(LinearConstraint(tuple(coeffs), GE, 0))
    coeffs = [Fraction(0)] * d + [Fraction(1)] * nv + [Fraction(0)] * nr
    cons.append(LinearConstraint(tuple(coeffs), EQ, 1))
    return fm_eliminate_all(HPolyhedron(names, tuple(cons)), lam, **kwargs)
