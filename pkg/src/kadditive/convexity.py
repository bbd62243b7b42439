"""Search for non-convexity of the union of sharing-value images of MC^k(v).

A candidate is the midpoint ``y`` of two points of that union.  Deciding
whether ``y = x^q(m)`` for some sharing function ``q`` and some ``m`` in
MC^k(v) is bilinear, so the search splits the box of ``q`` weights and solves
an exact McCormick relaxation on each piece.  If every piece is infeasible,
``y`` is certified to lie in no image; a feasible piece at the depth limit
leaves the candidate inconclusive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .allocation import DEFAULT_SELECTOR_BUDGET, enumerate_selectors, uniform_sharing
from .cores import CoreSpec, _apply, build_core, value_map_matrix
from .polyhedra import enumerate_generators, is_empty, linprog
from .polyhedra.lp import INFEASIBLE, OPTIMAL
from .setfunctions import members, size


@dataclass
class ConvexitySearch:
    witness: dict | None = None
    candidates: int = 0
    settled_by_fixed_q: int = 0
    inconclusive: int = 0
    boxes: int = 0
    notes: list = field(default_factory=list)


def _mc_rows(spec):
    P = build_core(spec)
    ineqs, eqs = [], []
    for c in P.constraints:
        (eqs if c.is_equality else ineqs).append(list(c.coeffs) + [c.rhs])
    return ineqs, eqs


def in_image_fixed_q(spec, M, y, rows) -> bool:
    """Exact LP: some m in MC^k(v) has M m = y."""
    ineqs, eqs = rows
    eqs = eqs + [list(row) + [yi] for row, yi in zip(M, y)]
    return linprog([0] * len(spec.coalitions), ineqs, eqs).status != INFEASIBLE


class _Relaxation:
    """McCormick relaxation of ``y = x^q(m)`` with ``m`` in MC^k(v)."""

    def __init__(self, spec, rows, y):
        self.spec, self.y = spec, y
        self.coals = spec.coalitions
        self.eta = len(self.coals)
        self.col = {s: j for j, s in enumerate(self.coals)}
        # one weight q(K, i) per multi-player K and member i
        self.pairs = [(s, i) for s in self.coals if size(s) >= 2 for i in members(s)]
        self.np = len(self.pairs)
        self.rows = rows
        self.bounds = {}
        for s in self.coals:
            if size(s) >= 2:
                unit = [0] * self.eta
                unit[self.col[s]] = 1
                lo = linprog(unit, *rows).value
                hi = -linprog([-u for u in unit], *rows).value
                self.bounds[s] = (lo, hi)

    def width(self):
        return self.eta + 2 * self.np

    def _row(self, m=(), q=(), w=(), rhs=0):
        r = [Fraction(0)] * (self.width() + 1)
        for j, a in m:
            r[j] += a
        for p, a in q:
            r[self.eta + p] += a
        for p, a in w:
            r[self.eta + self.np + p] += a
        r[-1] = Fraction(rhs)
        return r

    def solve(self, box):
        """LP status and q weights of a feasible point for the box ``{pair: (lo, hi)}``."""
        pad = [Fraction(0)] * (2 * self.np)
        ineqs = [list(r[:-1]) + pad + [r[-1]] for r in self.rows[0]]
        eqs = [list(r[:-1]) + pad + [r[-1]] for r in self.rows[1]]
        n = self.spec.n
        for i in range(1, n + 1):
            terms_w = [(p, 1) for p, (s, j) in enumerate(self.pairs) if j == i]
            eqs.append(self._row(m=[(self.col[1 << (i - 1)], 1)], w=terms_w, rhs=self.y[i - 1]))
        for s in self.coals:
            if size(s) < 2:
                continue
            ps = [p for p, (t, _) in enumerate(self.pairs) if t == s]
            eqs.append(self._row(q=[(p, 1) for p in ps], rhs=1))
            eqs.append(self._row(m=[(self.col[s], -1)], w=[(p, 1) for p in ps]))
        for p, (s, _) in enumerate(self.pairs):
            a, b = box[p]
            lo, hi = self.bounds[s]
            j = self.col[s]
            ineqs.append(self._row(q=[(p, 1)], rhs=a))
            ineqs.append(self._row(q=[(p, -1)], rhs=-b))
            # w >= a m + lo q - a lo ; w >= b m + hi q - b hi
            ineqs.append(self._row(m=[(j, -a)], q=[(p, -lo)], w=[(p, 1)], rhs=-a * lo))
            ineqs.append(self._row(m=[(j, -b)], q=[(p, -hi)], w=[(p, 1)], rhs=-b * hi))
            # w <= b m + lo q - b lo ; w <= a m + hi q - a hi
            ineqs.append(self._row(m=[(j, b)], q=[(p, lo)], w=[(p, -1)], rhs=b * lo))
            ineqs.append(self._row(m=[(j, a)], q=[(p, hi)], w=[(p, -1)], rhs=a * hi))
        res = linprog([0] * self.width(), ineqs, eqs)
        if res.status == INFEASIBLE:
            return INFEASIBLE, None
        return OPTIMAL, [res.x[self.eta + p] for p in range(self.np)]


def _sharing_matrix(spec, rel, qs):
    """Value map for explicit weights, ``qs`` aligned with ``rel.pairs``."""
    n = spec.n
    M = [[Fraction(0)] * rel.eta for _ in range(n)]
    for i in range(1, n + 1):
        M[i - 1][rel.col[1 << (i - 1)]] = Fraction(1)
    for (s, i), qv in zip(rel.pairs, qs):
        M[i - 1][rel.col[s]] = qv
    return M


def certify_outside(spec, rows, y, depth: int = 8, box_budget: int = 512):
    """``("outside", boxes)``, ``("inside", boxes)`` or ``("unknown", boxes)``."""
    rel = _Relaxation(spec, rows, y)
    stack = [(0, tuple((Fraction(0), Fraction(1)) for _ in rel.pairs))]
    boxes = 0
    unknown = False
    while stack:
        d, box = stack.pop()
        boxes += 1
        if boxes > box_budget:
            return "unknown", boxes
        status, qs = rel.solve(box)
        if status == INFEASIBLE:
            continue
        # the relaxed weights may already be an exact preimage
        fixed = [qv for qv in qs]
        if _normalized(rel, fixed) and in_image_fixed_q(spec, _sharing_matrix(spec, rel, fixed), y, rows):
            return "inside", boxes
        if d >= depth:
            unknown = True
            continue
        p = max(range(rel.np), key=lambda t: (box[t][1] - box[t][0], -t))
        a, b = box[p]
        mid = (a + b) / 2
        left = box[:p] + ((a, mid),) + box[p + 1:]
        right = box[:p] + ((mid, b),) + box[p + 1:]
        stack.append((d + 1, right))
        stack.append((d + 1, left))
    return ("unknown" if unknown else "outside"), boxes


def _normalized(rel, qs):
    by = {}
    for (s, _), qv in zip(rel.pairs, qs):
        if qv < 0:
            return False
        by[s] = by.get(s, 0) + qv
    return all(t == 1 for t in by.values())


def search_nonconvexity(v, k: int, pairs: int = 10, seed: int = 0, depth: int = 8, box_budget: int = 512,
                        selector_budget: int = DEFAULT_SELECTOR_BUDGET) -> ConvexitySearch:
    """Look for two points of the union of images whose midpoint lies in no image."""
    out = ConvexitySearch()
    spec = CoreSpec(v, k, "monotone")
    if is_empty(build_core(spec)):
        out.notes.append(f"game is not {k}-balanced-monotone")
        return out
    rows = _mc_rows(spec)
    verts = enumerate_generators(build_core(spec)).vertices
    selectors = list(enumerate_selectors(v.n, budget=selector_budget))
    maps = [value_map_matrix(a, v.n, k) for a in selectors] + [value_map_matrix(uniform_sharing(v.n), v.n, k)]
    points = sorted({_apply(M, e) for M in maps for e in verts})
    rng = random.Random(f"convexity:{seed}")
    for _ in range(pairs):
        if len(points) < 2:
            break
        a, b = rng.sample(points, 2)
        y = tuple((s + t) / 2 for s, t in zip(a, b))
        out.candidates += 1
        if any(in_image_fixed_q(spec, M, y, rows) for M in maps):
            out.settled_by_fixed_q += 1
            continue
        verdict, boxes = certify_outside(spec, rows, y, depth, box_budget)
        out.boxes += boxes
        if verdict == "outside":
            out.witness = {"endpoints": [[str(c) for c in a], [str(c) for c in b]],
                           "midpoint": [str(c) for c in y], "boxes": boxes}
            return out
        if verdict == "unknown":
            out.inconclusive += 1
    return out
