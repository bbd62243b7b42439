"""Independent oracles and generators shared by the test modules."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from kadditive.cores import in_convex_hull
from kadditive.polyhedra import GE, HPolyhedron, LinearConstraint, enumerate_generators


def random_polytope(dim: int, seed: int, cuts: int | None = None, box: int = 4) -> HPolyhedron:
    """Box ``[-box, box]^dim`` cut by random halfspaces that keep the origin."""
    rng = random.Random(f"polytope:{dim}:{seed}")
    names = tuple(f"y{j}" for j in range(dim))
    cons = []
    for j in range(dim):
        e = [Fraction(int(t == j)) for t in range(dim)]
        cons.append(LinearConstraint(tuple(e), GE, Fraction(-box)))
        cons.append(LinearConstraint(tuple(-a for a in e), GE, Fraction(-box)))
    for _ in range(rng.randint(1, 6) if cuts is None else cuts):
        a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(dim))
        if not any(a):
            continue
        cons.append(LinearConstraint(a, GE, Fraction(-rng.randint(1, 6), rng.randint(1, 2))))
    return HPolyhedron(names, tuple(cons))


def solve_square(A, b):
    """Unique solution of a square rational system, or None if singular."""
    n = len(A)
    M = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return tuple(M[r][-1] / M[r][r] for r in range(n))


def brute_force_vertices(P: HPolyhedron):
    """All vertices of a polytope by solving every d-subset of tight rows."""
    rows = [(c.coeffs, c.rhs) for c in P.constraints]
    d = P.dimension
    out = set()
    for combo in itertools.combinations(range(len(rows)), d):
        pts = solve_square([rows[i][0] for i in combo], [rows[i][1] for i in combo])
        if pts is not None and P.contains(pts):
            out.add(pts)
    return out


def brute_force_min(c, P: HPolyhedron):
    """Minimum of ``c.x`` over a nonempty polytope via its vertices."""
    verts = brute_force_vertices(P)
    if not verts:
        return None
    return min(sum(a * x for a, x in zip(c, v)) for v in verts)


def projection_matches_vertices(Q: HPolyhedron, P: HPolyhedron, keep) -> bool:
    """Q equals the hull of P's vertices restricted to coordinates ``keep``.

    Uses generator enumeration and exact LP hull membership only.
    """
    V = enumerate_generators(P)
    images = sorted({tuple(v[j] for j in keep) for v in V.vertices})
    if not images:
        return enumerate_generators(Q).is_empty
    if not all(Q.contains(p) for p in images):
        return False
    W = enumerate_generators(Q)
    if W.rays:
        return False
    return all(in_convex_hull(w, images) for w in W.vertices)


def random_rational(rng, lo=-6, hi=6, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


# one (number, title, passed, seconds) entry per acceptance criterion, printed in the terminal summary
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, float]] = []
