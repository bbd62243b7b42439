"""Membership, emptiness, inclusion and equality tests."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotPointedError
from .base import HPolyhedron, LinearConstraint
from .dd import enumerate_generators
from .fm import fm_eliminate_all, linear_image
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog


def _check_names(P, Q):
    if P.names != Q.names:
        raise ValueError(f"variable lists differ: {P.names} vs {Q.names}")


def _rational_rows(P):
    ineqs, eqs = [], []
    for c in P.constraints:
        (eqs if c.is_equality else ineqs).append(c.coeffs + (c.rhs,))
    return ineqs, eqs


def contains(P: HPolyhedron, point) -> bool:
    return P.contains(point)


def is_empty(P: HPolyhedron, method: str = "lp") -> bool:
    """Exact emptiness test.

    ``lp`` runs a phase-one simplex, ``fm`` eliminates every variable and
    ``dd`` enumerates generators (pointed inputs only).
    """
    if method == "lp":
        ineqs, eqs = _rational_rows(P)
        return linprog([0] * P.dimension, ineqs, eqs).status == INFEASIBLE
    if method == "fm":
        rest = fm_eliminate_all(P, P.names, redundancy="syntactic")
        return any(not c.satisfied_by(()) for c in rest.constraints)
    if method == "dd":
        return enumerate_generators(P).is_empty
    raise ValueError(f"unknown method {method!r}")


def _min_over(P, coeffs):
    ineqs, eqs = _rational_rows(P)
    return linprog(coeffs, ineqs, eqs)


def violation(P: HPolyhedron, c: LinearConstraint):
    """A point of ``P`` violating ``c``, or None when ``P`` satisfies it."""
    ineqs, eqs = _rational_rows(P)
    sides = [c.coeffs] + ([tuple(-a for a in c.coeffs)] if c.is_equality else [])
    bounds = [c.rhs] + ([-c.rhs] if c.is_equality else [])
    for coeffs, rhs in zip(sides, bounds):
        res = linprog(coeffs, ineqs, eqs)
        if res.status == INFEASIBLE:
            return None
        if res.status == OPTIMAL and res.value >= rhs:
            continue
        if res.status == UNBOUNDED:
            # push along the improving ray until the bound is broken
            slope = sum(a * r for a, r in zip(coeffs, res.direction))
            gap = sum(a * x for a, x in zip(coeffs, res.x)) - rhs + 1
            t = max(Fraction(0), gap / -slope)
            return tuple(x + t * r for x, r in zip(res.x, res.direction))
        return res.x
    return None


def subset_witness(P: HPolyhedron, Q: HPolyhedron):
    """(point, constraint) with point in P and outside Q, or None if P is in Q."""
    _check_names(P, Q)
    for c in Q.constraints:
        x = violation(P, c)
        if x is not None:
            return x, c
    return None


def _subset_generators(P, Q):
    V = enumerate_generators(P)
    if V.is_empty:
        return True
    if not all(Q.contains(v) for v in V.vertices):
        return False
    return all(c.satisfied_by_ray(r) for r in V.rays for c in Q.constraints)


def _interval(P, coeffs):
    """(lower, upper) of the functional over nonempty P; None means infinite."""
    img = linear_image(P, [coeffs], ("t",), redundancy="syntactic")
    lo = hi = None
    for c in img.constraints:
        a = c.coeffs[0]
        if a == 0:
            continue
        b = c.rhs / a
        if c.is_equality:
            lo = b if lo is None else max(lo, b)
            hi = b if hi is None else min(hi, b)
        elif a > 0:
            lo = b if lo is None else max(lo, b)
        else:
            hi = b if hi is None else min(hi, b)
    return lo, hi


def _subset_fm(P, Q):
    for c in Q.constraints:
        lo, hi = _interval(P, c.coeffs)
        if lo is None or lo < c.rhs:
            return False
        if c.is_equality and (hi is None or hi > c.rhs):
            return False
    return True


def _subset_lp(P, Q):
    return subset_witness(P, Q) is None


def is_subset(P: HPolyhedron, Q: HPolyhedron, method: str = "auto") -> bool:
    """Exact test of P contained in Q.

    ``auto`` checks generators of P when P is pointed and falls back to
    projecting P onto each constraint functional of Q otherwise.
    """
    _check_names(P, Q)
    if method == "lp":
        return _subset_lp(P, Q)
    if is_empty(P):
        return True
    if method == "generators":
        return _subset_generators(P, Q)
    if method == "fm":
        return _subset_fm(P, Q)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return _subset_generators(P, Q)
    except NotPointedError:
        return _subset_fm(P, Q)


def equal(P: HPolyhedron, Q: HPolyhedron, method: str = "auto") -> bool:
    return is_subset(P, Q, method) and is_subset(Q, P, method)


def difference_witness(P: HPolyhedron, Q: HPolyhedron):
    """Checkable evidence that P != Q: a point in one set and not the other."""
    w = subset_witness(P, Q)
    if w is not None:
        return {"point": w[0], "in": "left", "violates": w[1]}
    w = subset_witness(Q, P)
    if w is not None:
        return {"point": w[0], "in": "right", "violates": w[1]}
    return None


def intersection_image_gap(P1: HPolyhedron, P2: HPolyhedron, M, out_names, **fm_kwargs):
    """Compare rho(P1 & P2) with rho(P1) & rho(P2) for the linear map ``M``.

    The left side is always contained in the right one; returns None when they
    are equal, else a point of the right side outside the left side.
    """
    _check_names(P1, P2)
    left = linear_image(P1.intersect(P2), M, out_names, **fm_kwargs)
    right = linear_image(P1, M, out_names, **fm_kwargs).intersect(linear_image(P2, M, out_names, **fm_kwargs))
    w = subset_witness(right, left)
    if w is None:
        return None
    return {"point": w[0], "violates": w[1], "left": left, "right": right}
