"""Fourier-Motzkin projection on primitive integer rows.

A variable occurring in an equality is removed by substitution.  Otherwise
the inequalities are split by the sign of its coefficient; when one side is
empty the other side is simply dropped (the variable can always be pushed far
enough to satisfy them), else every positive/negative pair is combined.
Redundancy is removed after each step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .. import kernels
from ..errors import ResourceBudgetError
from .base import EQ, HPolyhedron, LinearConstraint, primitive, rational_row_to_int, sign_canonical
from .lp import INFEASIBLE, OPTIMAL, linprog

DEFAULT_FM_BUDGET = 20_000
DEFAULT_LP_THRESHOLD = 12
REDUNDANCY_MODES = ("auto", "lp", "syntactic")


def _infeasible_row(width):
    return (0,) * (width - 1) + (1,)


def _reduce_against(basis, row):
    """Reduce ``row`` by an echelon ``basis`` of (pivot, row) pairs."""
    row = list(row)
    for piv, b in basis:
        if row[piv]:
            f, g = b[piv], row[piv]
            row = [f * x - g * y for x, y in zip(row, b)]
    return row


def clean_rows(ineqs, eqs, width):
    """Syntactic normalization.

    Returns ``(ineqs, eqs)``; an infeasible system collapses to the single
    inequality ``0 >= 1``.
    """
    empty = ([_infeasible_row(width)], [])
    bounds: dict[tuple, Fraction] = {}
    for r in ineqs:
        a = r[:-1]
        g = gcd(*a)
        if g == 0:
            if r[-1] > 0:
                return empty
            continue
        key = tuple(x // g for x in a)
        b = Fraction(r[-1], g)
        if key not in bounds or b > bounds[key]:
            bounds[key] = b

    eq_rows = [sign_canonical(primitive(r)) for r in eqs]
    # opposite pairs pin a functional
    for key in list(bounds):
        neg = tuple(-x for x in key)
        if key in bounds and neg in bounds and key < neg:
            lo, hi = bounds[key], -bounds[neg]
            if lo > hi:
                return empty
            if lo == hi:
                eq_rows.append(sign_canonical(rational_row_to_int(key + (lo,))))
                del bounds[key], bounds[neg]

    basis, kept_eqs = [], []
    for r in dict.fromkeys(eq_rows):
        red = _reduce_against(basis, r)
        piv = next((j for j in range(width - 1) if red[j]), None)
        if piv is None:
            if red[-1]:
                return empty
            continue
        basis.append((piv, primitive(red)))
        kept_eqs.append(r)

    # inequalities parallel to an equality are decided outright
    eq_dirs = {}
    for r in kept_eqs:
        a = r[:-1]
        g = gcd(*a)
        eq_dirs[tuple(x // g for x in a)] = Fraction(r[-1], g)
    out = []
    for key, b in bounds.items():
        neg = tuple(-x for x in key)
        if key in eq_dirs:
            if b > eq_dirs[key]:
                return empty
            continue
        if neg in eq_dirs:
            if b > -eq_dirs[neg]:
                return empty
            continue
        out.append(rational_row_to_int(key + (b,)))
    return out, kept_eqs


def lp_irredundant(ineqs, eqs, width):
    """Drop every inequality implied by the remaining system (exact LPs)."""
    d = width - 1
    if linprog([0] * d, ineqs, eqs).status == INFEASIBLE:
        return [_infeasible_row(width)], []
    kept = list(ineqs)
    i = 0
    while i < len(kept):
        row = kept[i]
        others = kept[:i] + kept[i + 1:]
        res = linprog(row[:-1], others, eqs)
        if res.status == OPTIMAL and res.value >= row[-1]:
            kept = others
        else:
            i += 1
    return kept, list(eqs)


def implicit_equalities(ineqs, eqs, width):
    """Turn inequalities that hold with equality on the whole set into equalities."""
    tight = []
    for row in ineqs:
        res = linprog([-a for a in row[:-1]], ineqs, eqs)
        if res.status == OPTIMAL and -res.value == row[-1]:
            tight.append(row)
    if not tight:
        return ineqs, eqs
    rest = [r for r in ineqs if r not in tight]
    ineqs, eqs = clean_rows(rest, list(eqs) + tight, width)
    return lp_irredundant(ineqs, eqs, width)


def _normalize(ineqs, eqs, width, mode, lp_threshold, final):
    ineqs, eqs = clean_rows(ineqs, eqs, width)
    if ineqs == [_infeasible_row(width)]:
        return ineqs, eqs
    if mode == "lp" or (mode == "auto" and (final or len(ineqs) > lp_threshold)):
        ineqs, eqs = lp_irredundant(ineqs, eqs, width)
        if final and ineqs != [_infeasible_row(width)]:
            ineqs, eqs = implicit_equalities(ineqs, eqs, width)
    return ineqs, eqs


def _substitute(rows, e, j, inequality):
    ej = e[j]
    out = []
    for r in rows:
        rj = r[j]
        if not rj:
            out.append(r)
            continue
        if ej > 0 or not inequality:
            new = [ej * a - rj * b for a, b in zip(r, e)]
        else:
            new = [-ej * a + rj * b for a, b in zip(r, e)]
        out.append(primitive(new))
    return out


def _drop_column(rows, j):
    return [r[:j] + r[j + 1:] for r in rows]


def _eliminate_column(ineqs, eqs, j, fast_path=True):
    """One projection step on integer rows; returns (ineqs, eqs, info)."""
    carriers = [e for e in eqs if e[j]]
    if carriers:
        e = min(carriers, key=lambda r: (sum(1 for x in r[:-1] if x), abs(r[j])))
        rest = [r for r in eqs if r is not e]
        ineqs = _substitute(ineqs, e, j, True)
        eqs = _substitute(rest, e, j, False)
        info = {"method": "substitution"}
    else:
        pos = [r for r in ineqs if r[j] > 0]
        neg = [r for r in ineqs if r[j] < 0]
        zero = [r for r in ineqs if not r[j]]
        if fast_path and (not pos or not neg):
            ineqs = zero
            info = {"method": "one-sided", "dropped": len(pos) + len(neg)}
        else:
            ineqs = zero + kernels.combine_pairs(pos, neg, j)
            info = {"method": "pairs", "pos": len(pos), "neg": len(neg)}
    return _drop_column(ineqs, j), _drop_column(eqs, j), info


def _choose(ineqs, eqs, cols):
    best, best_cost = None, None
    for j in cols:
        if any(e[j] for e in eqs):
            return j
        pos = sum(1 for r in ineqs if r[j] > 0)
        neg = sum(1 for r in ineqs if r[j] < 0)
        cost = pos * neg
        if best_cost is None or cost < best_cost:
            best, best_cost = j, cost
    return best


def fm_eliminate_all(
    P: HPolyhedron,
    variables,
    *,
    order: str = "heuristic",
    redundancy: str = "auto",
    budget: int = DEFAULT_FM_BUDGET,
    lp_threshold: int = DEFAULT_LP_THRESHOLD,
    fast_path: bool = True,
    log: list | None = None,
) -> HPolyhedron:
    """Project ``P`` onto the variables not listed in ``variables``.

    ``order="given"`` eliminates in the listed order; ``"heuristic"`` picks
    equality variables first, then the variable with the fewest
    positive-by-negative pairs.  ``budget`` caps the number of inequalities
    produced by any single step.
    """
    if redundancy not in REDUNDANCY_MODES:
        raise ValueError(f"redundancy must be one of {REDUNDANCY_MODES}")
    if order not in ("heuristic", "given"):
        raise ValueError("order must be 'heuristic' or 'given'")
    names = list(P.names)
    targets = list(dict.fromkeys(variables))
    for v in targets:
        P.index(v)
    ineqs, eqs = P.int_rows()
    width = len(names) + 1
    ineqs, eqs = _normalize(ineqs, eqs, width, "syntactic", lp_threshold, False)
    step = 0
    while targets:
        if ineqs == [_infeasible_row(width)]:
            # projection of the empty set is empty
            names = [nm for nm in names if nm not in targets]
            return HPolyhedron.empty(names)
        cols = [names.index(v) for v in targets]
        j = cols[0] if order == "given" else _choose(ineqs, eqs, cols)
        var = names[j]
        before = len(ineqs)
        ineqs, eqs, info = _eliminate_column(ineqs, eqs, j, fast_path)
        step += 1
        if len(ineqs) > budget:
            raise ResourceBudgetError(
                f"eliminating {var} (step {step}) produced {len(ineqs)} inequalities, budget {budget}",
                step={"step": step, "variable": var, "constraints": len(ineqs)},
            )
        del names[j]
        targets.remove(var)
        width -= 1
        raw = len(ineqs)
        ineqs, eqs = _normalize(ineqs, eqs, width, redundancy, lp_threshold, not targets)
        if log is not None:
            log.append({"step": step, "variable": var, "before": before, "raw": raw,
                        "after": len(ineqs), "equalities": len(eqs), **info})
    if not variables:
        ineqs, eqs = _normalize(ineqs, eqs, width, redundancy, lp_threshold, True)
    if ineqs == [_infeasible_row(width)]:
        return HPolyhedron.empty(names)
    return HPolyhedron.from_rows(names, ineqs, eqs)


def fm_eliminate(P: HPolyhedron, var: str, **kwargs) -> HPolyhedron:
    """Project out a single variable."""
    return fm_eliminate_all(P, [var], order="given", **kwargs)


def remove_redundant(P: HPolyhedron, full: bool = True) -> HPolyhedron:
    """Equal polyhedron without duplicate, dominated or (if ``full``) implied rows."""
    ineqs, eqs = P.int_rows()
    width = P.dimension + 1
    ineqs, eqs = _normalize(ineqs, eqs, width, "lp" if full else "syntactic", 0, True)
    if ineqs == [_infeasible_row(width)]:
        return HPolyhedron.empty(P.names)
    return HPolyhedron.from_rows(P.names, ineqs, eqs)


def linear_image(P: HPolyhedron, M, out_names, **kwargs) -> HPolyhedron:
    """Image of ``P`` under ``x -> M x`` as an H-representation in ``out_names``."""
    out_names = tuple(out_names)
    M = [tuple(Fraction(a) for a in row) for row in M]
    if len(M) != len(out_names):
        raise ValueError(f"{len(M)} matrix rows but {len(out_names)} output names")
    if any(len(row) != P.dimension for row in M):
        raise ValueError(f"matrix columns must equal the dimension {P.dimension}")
    inner = tuple(f"__src{j}" for j in range(P.dimension))
    names = inner + out_names
    p = len(out_names)
    cons = [LinearConstraint(c.coeffs + (Fraction(0),) * p, c.relation, c.rhs) for c in P.constraints]
    for i, row in enumerate(M):
        y = [Fraction(0)] * p
        y[i] = Fraction(1)
        cons.append(LinearConstraint(tuple(-a for a in row) + tuple(y), EQ, Fraction(0)))
    lifted = HPolyhedron(names, tuple(cons))
    return fm_eliminate_all(lifted, inner, **kwargs)


def recession_cone(P: HPolyhedron) -> HPolyhedron:
    return HPolyhedron(P.names, tuple(LinearConstraint(c.coeffs, c.relation, 0) for c in P.constraints))


__all__ = [
    "DEFAULT_FM_BUDGET",
    "clean_rows",
    "fm_eliminate",
    "fm_eliminate_all",
    "linear_image",
    "lp_irredundant",
    "recession_cone",
    "remove_redundant",
]
