import random
from fractions import Fraction

import pytest
from support import brute_force_min, brute_force_vertices, projection_matches_vertices, random_polytope

from kadditive.errors import NotPointedError, ResourceBudgetError
from kadditive.polyhedra import (
    EQ,
    GE,
    HPolyhedron,
    LinearConstraint,
    VPolyhedron,
    canonical_ray,
    difference_witness,
    enumerate_generators,
    equal,
    fm_eliminate,
    fm_eliminate_all,
    hull,
    intersection_image_gap,
    is_empty,
    is_subset,
    linear_image,
    linprog,
    recession_cone,
    remove_redundant,
    subset_witness,
)
from kadditive.polyhedra.lp import INFEASIBLE, OPTIMAL, UNBOUNDED

F = Fraction


def H(names, *rows):
    """Rows are (coeffs..., relation, rhs)."""
    cons = [LinearConstraint(tuple(F(a) for a in r[:-2]), r[-2], F(r[-1])) for r in rows]
    return HPolyhedron(tuple(names), tuple(cons))


SQUARE = H("xy", (1, 0, ">=", 0), (0, 1, ">=", 0), (1, 0, "<=", 1), (0, 1, "<=", 1))


# ---------------------------------------------------------------- LP


def test_linprog_statuses():
    assert linprog([1, 1], [(1, 0, 1), (0, 1, 2)]).value == 3
    res = linprog([-1, 0], [(1, 0, 1)])
    assert res.status == UNBOUNDED and res.direction[0] > 0
    assert linprog([0], [(1, 2), (-1, -1)]).status == INFEASIBLE
    assert linprog([0, 0], [], [(1, 1, 1), (2, 2, 3)]).status == INFEASIBLE
    assert linprog([1], [], [(2, 1), (4, 2)]).value == F(1, 2)


def test_linprog_against_vertex_enumeration():
    for seed in range(40):
        dim = 2 + seed % 2
        P = random_polytope(dim, seed)
        rng = random.Random(seed)
        c = [F(rng.randint(-4, 4)) for _ in range(dim)]
        ineqs = [c_.coeffs + (c_.rhs,) for c_ in P.constraints]
        res = linprog(c, ineqs)
        assert res.status == OPTIMAL
        assert res.value == brute_force_min(c, P)
        assert P.contains(res.x)


def test_unbounded_direction_is_a_ray():
    ineqs = [(1, 1, 0), (1, -1, -2)]
    res = linprog([-1, -2], ineqs)
    assert res.status == UNBOUNDED
    d = res.direction
    assert all(a * d[0] + b * d[1] >= 0 for a, b, _ in ineqs)
    assert -d[0] - 2 * d[1] < 0


# ---------------------------------------------------------------- constraints


def test_constraint_normalization_and_format():
    c = LinearConstraint((F(1), F(-2)), "<=", F(3))
    assert c.relation == GE and c.coeffs == (-1, 2) and c.rhs == -3
    assert c.format(("x", "y")) == "-x + 2*y >= -3"
    assert LinearConstraint((F(1), F(1)), EQ, F(1)).format(("x[1]", "x[2]")) == "x[1] + x[2] = 1"
    with pytest.raises(ValueError):
        LinearConstraint((F(1),), "<", F(0))


def test_hpolyhedron_text_round_trip():
    P = H(("m[{1}]", "m[{1,2}]"), (1, F(1, 2), ">=", F(-3, 4)), (2, 1, "=", 1))
    Q = HPolyhedron.loads(P.dumps())
    assert Q == P
    with pytest.raises(ValueError, match="line 2"):
        HPolyhedron.loads("x y\n1 2 >=\n")


def test_vpolyhedron_text_round_trip_and_rays():
    V = VPolyhedron(("x", "y"), ((F(1, 2), F(0)),), ((2, -4), (0, 3)))
    assert V.rays == ((0, 1), (1, -2))
    assert VPolyhedron.loads(V.dumps()) == V
    # sign is part of the direction
    assert canonical_ray((F(-1), F(1), F(0))) == (-1, 1, 0)
    assert canonical_ray((F(-2), F(2), F(0))) == (-1, 1, 0)


# ---------------------------------------------------------------- Fourier-Motzkin


def test_fm_unit_square_shadow():
    P = H("xy", (1, 1, "<=", 1), (1, 0, ">=", 0), (0, 1, ">=", 0))
    Q = fm_eliminate(P, "y")
    assert Q.names == ("x",)
    assert equal(Q, H("x", (1, ">=", 0), (1, "<=", 1)))
    assert len(Q.constraints) == 2


def test_fm_one_sided_gives_whole_space():
    P = H(("x1", "x2", "m"), (1, 0, 1, ">=", 0), (0, 1, 2, ">=", 0))
    log = []
    Q = fm_eliminate_all(P, ["m"], log=log)
    assert Q.constraints == ()
    assert log[0]["method"] == "one-sided"


def test_fm_fast_path_agrees_with_pairwise():
    for seed in range(30):
        rng = random.Random(seed)
        dim = 3
        sign = rng.choice([1, -1])
        rows = []
        for _ in range(5):
            a = [rng.randint(-3, 3) for _ in range(dim - 1)] + [sign * rng.randint(0, 3)]
            rows.append(tuple(a) + (">=", rng.randint(-4, 4)))
        P = H(("a", "b", "c"), *rows)
        fast = fm_eliminate_all(P, ["c"], fast_path=True)
        slow = fm_eliminate_all(P, ["c"], fast_path=False)
        assert equal(fast, slow)


def test_fm_unknown_variable():
    with pytest.raises(ValueError):
        fm_eliminate(SQUARE, "z")


def test_fm_total_elimination_decides_feasibility():
    assert fm_eliminate_all(SQUARE, ["x", "y"]).constraints == ()
    empty = H("xyz", (1, 1, 0, ">=", 1), (1, 0, 1, ">=", 1), (0, 1, 1, ">=", 1), (1, 1, 1, "=", 1))
    rest = fm_eliminate_all(empty, ["x", "y", "z"])
    assert len(rest.constraints) == 1 and not rest.constraints[0].satisfied_by(())


def test_fm_against_vertex_projection_oracle():
    for seed in range(25):
        dim = 2 + seed % 3
        P = random_polytope(dim, seed)
        rng = random.Random(seed)
        drop = rng.sample(range(dim), rng.randint(1, dim - 1))
        keep = [j for j in range(dim) if j not in drop]
        Q = fm_eliminate_all(P, [P.names[j] for j in drop])
        assert projection_matches_vertices(Q, P, keep)


def test_fm_order_invariance():
    for seed in range(20):
        P = random_polytope(5, seed)
        rng = random.Random(seed)
        drop = rng.sample(P.names, 3)
        a = fm_eliminate_all(P, drop, order="given")
        b = fm_eliminate_all(P, list(reversed(drop)), order="given")
        c = fm_eliminate_all(P, drop, order="heuristic")
        assert equal(a, b) and equal(a, c)


def test_redundancy_modes_agree():
    for seed in range(15):
        P = random_polytope(4, seed, cuts=6)
        drop = list(P.names[:2])
        ref = fm_eliminate_all(P, drop, redundancy="lp")
        for mode in ("auto", "syntactic"):
            assert equal(fm_eliminate_all(P, drop, redundancy=mode), ref)
    with pytest.raises(ValueError):
        fm_eliminate_all(SQUARE, ["x"], redundancy="none")


def test_fm_budget_reports_step():
    P = random_polytope(5, 3, cuts=12)
    with pytest.raises(ResourceBudgetError) as err:
        fm_eliminate_all(P, list(P.names[:4]), budget=3)
    assert err.value.step["step"] >= 1 and "variable" in err.value.step


def test_fm_keeps_implicit_equalities_as_equalities():
    P = H("xyz", (1, 0, 0, ">=", 0), (-1, 0, 0, ">=", 0), (1, 1, 1, ">=", 2), (0, 1, 0, "<=", 1),
          (0, 0, 1, "<=", 1))
    Q = fm_eliminate_all(P, ["z"])
    assert any(c.is_equality for c in Q.constraints)
    assert equal(Q, H("xy", (1, 0, "=", 0), (0, 1, ">=", 1), (0, 1, "<=", 1)))


# ---------------------------------------------------------------- images


def test_linear_image_examples():
    assert equal(linear_image(SQUARE, [[1, 0], [0, 1]], ("x", "y")), SQUARE)
    img = linear_image(SQUARE, [[1, 1]], ("t",))
    assert equal(img, H("t", (1, ">=", 0), (1, "<=", 2)))
    with pytest.raises(ValueError):
        linear_image(SQUARE, [[1, 1, 1]], ("t",))
    with pytest.raises(ValueError):
        linear_image(SQUARE, [[1, 1]], ("s", "t"))


def test_intersection_image_gap_on_random_pairs():
    """The image of an intersection can be strictly smaller; report it exactly."""
    for seed in range(20):
        P1, P2 = random_polytope(4, seed), random_polytope(4, 100 + seed)
        rng = random.Random(seed)
        M = [[F(rng.randint(-2, 2)) for _ in range(4)] for _ in range(2)]
        w = intersection_image_gap(P1, P2, M, ("u", "v"))
        left = linear_image(P1.intersect(P2), M, ("u", "v"))
        if w is None:
            assert equal(left, _image_intersection(P1, P2, M))
        else:
            assert w["right"].contains(w["point"]) and not left.contains(w["point"])
    # a two-point example where the lemma fails
    A = H("ab", (1, 0, "=", 0), (0, 1, "=", 0))
    B = H("ab", (1, 0, "=", 1), (0, 1, "=", 0))
    w = intersection_image_gap(A, B, [[0, 1]], ("t",))
    assert w is not None and w["point"] == (0,)


def _image_intersection(P1, P2, M):
    names = ("u", "v")
    return linear_image(P1, M, names).intersect(linear_image(P2, M, names))


# ---------------------------------------------------------------- generators


def test_generators_examples():
    V = enumerate_generators(SQUARE)
    assert set(V.vertices) == {(0, 0), (0, 1), (1, 0), (1, 1)} and not V.rays
    orth = H("xy", (1, 0, ">=", 0), (0, 1, ">=", 0))
    V = enumerate_generators(orth)
    assert V.vertices == ((0, 0),) and V.rays == ((0, 1), (1, 0))


def test_generators_not_pointed():
    with pytest.raises(NotPointedError):
        enumerate_generators(H("xy", (1, 1, ">=", 0)))
    with pytest.raises(NotPointedError):
        enumerate_generators(HPolyhedron.whole_space(("x",)))


def test_generators_match_brute_force():
    for seed in range(25):
        P = random_polytope(2 + seed % 3, seed)
        V = enumerate_generators(P)
        assert set(V.vertices) == brute_force_vertices(P)
        assert not V.rays


def test_generators_of_empty_polyhedron():
    empty = H("xy", (1, 0, ">=", 1), (1, 0, "<=", 0), (0, 1, ">=", 0))
    assert enumerate_generators(empty).is_empty


def test_hull_round_trip_is_idempotent():
    for seed in range(10):
        P = random_polytope(3, seed)
        V = enumerate_generators(P)
        Q = hull(V)
        assert equal(P, Q)
        assert enumerate_generators(Q) == V
    cone = H("xy", (1, 0, ">=", 0), (1, 1, ">=", 1))
    V = enumerate_generators(cone)
    assert equal(hull(V), cone)


def test_recession_cone_examples():
    rc = recession_cone(SQUARE)
    assert enumerate_generators(rc) == VPolyhedron(("x", "y"), ((0, 0),))
    orth = H("x", (1, ">=", 0))
    assert equal(recession_cone(orth), orth)


# ---------------------------------------------------------------- comparisons


def test_subset_and_equal_examples():
    dilated = H("xy", (1, 0, ">=", 0), (0, 1, ">=", 0), (1, 0, "<=", 2), (0, 1, "<=", 2))
    for method in ("auto", "lp", "generators", "fm"):
        assert is_subset(SQUARE, dilated, method)
        assert not is_subset(dilated, SQUARE, method)
        assert not equal(SQUARE, dilated, method)
    w = difference_witness(SQUARE, dilated)
    assert w["in"] == "right" and dilated.contains(w["point"]) and not SQUARE.contains(w["point"])
    assert subset_witness(SQUARE, dilated) is None


def test_reflexivity_on_random_polyhedra():
    for seed in range(20):
        P = random_polytope(3, seed)
        assert is_subset(P, P) and equal(P, P)


def test_subset_routes_agree():
    for seed in range(20):
        P, Q = random_polytope(3, seed), random_polytope(3, seed + 50)
        answers = {m: is_subset(P, Q, m) for m in ("auto", "lp", "generators", "fm")}
        assert len(set(answers.values())) == 1, answers


def test_subset_with_lineality_falls_back():
    strip = H("xy", (1, 0, ">=", 0), (1, 0, "<=", 1))
    wide = H("xy", (1, 0, ">=", -1))
    assert is_subset(strip, wide) and not is_subset(wide, strip)
    with pytest.raises(NotPointedError):
        is_subset(strip, wide, "generators")


def test_emptiness_example_all_methods():
    P = H("xyz", (1, 1, 0, ">=", 1), (1, 0, 1, ">=", 1), (0, 1, 1, ">=", 1), (1, 1, 1, "=", 1))
    for method in ("lp", "fm", "dd"):
        assert is_empty(P, method)
        assert not is_empty(SQUARE, method)


def test_remove_redundant_examples():
    assert remove_redundant(H("x", (1, ">=", 0), (2, ">=", 0))).constraints == (
        LinearConstraint((F(1),), GE, F(0)),)
    assert remove_redundant(H("x", (1, ">=", 0), (1, ">=", -1))).constraints == (
        LinearConstraint((F(1),), GE, F(0)),)


def test_remove_redundant_preserves_the_set():
    for seed in range(50):
        P = random_polytope(3, seed, cuts=8)
        Q = remove_redundant(P)
        assert equal(P, Q, "lp")
        assert len(Q.constraints) <= len(P.constraints)
        # no remaining row is implied by the others
        for i in range(len(Q.constraints)):
            rest = HPolyhedron(Q.names, Q.constraints[:i] + Q.constraints[i + 1:])
            assert not is_subset(rest, HPolyhedron(Q.names, (Q.constraints[i],)), "lp")
