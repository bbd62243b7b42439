"""Core variants as polyhedra in dividend coordinates, and their images.

Every core lives in the space of dividends ``m[K]`` for ``1 <= |K| <= k``;
the classical core is the case ``k = 1`` with ``m[{i}]`` read as ``x_i``.
The ``verify_*`` functions compute both sides of each identity
independently and compare them exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .allocation import (
    DEFAULT_SELECTOR_BUDGET,
    Permutation,
    Selector,
    SharingFunction,
    all_permutations,
    blocked_collection,
    enumerate_selectors,
    last_element_selector,
    marginal_value,
    selector_to_sharing,
    selector_value,
    union_closure_violations,
)
from .errors import NotPointedError
from .polyhedra import (
    EQ,
    GE,
    HPolyhedron,
    LinearConstraint,
    canonical_ray,
    difference_witness,
    enumerate_generators,
    equal,
    intersection_image_gap,
    is_empty,
    is_subset,
    linear_image,
    linprog,
    remove_redundant,
)
from .setfunctions import SetFunction, coalition_key, members, size, zeta_transform

VARIANTS = ("plain", "monotone", "positive")

Sharing = Union[SharingFunction, Selector]


def dividend_coalitions(n: int, k: int) -> list[int]:
    """Nonempty coalitions of size at most ``k``, canonical order."""
    return [s for s in range(1, 1 << n) if size(s) <= k]


def m_name(s: int) -> str:
    return f"m[{{{coalition_key(s)}}}]"


def x_names(n: int) -> tuple[str, ...]:
    return tuple(f"x[{i}]" for i in range(1, n + 1))


def eta(n: int, k: int) -> int:
    return len(dividend_coalitions(n, k))


@dataclass(frozen=True)
class CoreSpec:
    game: SetFunction
    k: int
    variant: str = "plain"

    def __post_init__(self):
        n = self.game.n
        if not 1 <= self.k <= n:
            raise ValueError(f"k must lie in 1..{n}, got {self.k}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")

    @property
    def n(self) -> int:
        return self.game.n

    @property
    def coalitions(self) -> list[int]:
        return dividend_coalitions(self.n, self.k)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(m_name(s) for s in self.coalitions)


def _constraint(coeffs, rel, rhs):
    return LinearConstraint(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))


def _monotone_rows(n, coals):
    rows = []
    for s in range(1, 1 << n):
        for i in members(s):
            bit = 1 << (i - 1)
            rows.append([int(bool(K & bit) and K & ~s == 0) for K in coals])
    return rows


def build_monotone_cone(n: int, k: int) -> HPolyhedron:
    """Dividend vectors of monotone games of order at most ``k``.

    One row per nonempty S and i in S: the sum of m[K] over i in K, K in S.
    """
    coals = dividend_coalitions(n, k)
    cons = [_constraint(row, GE, 0) for row in _monotone_rows(n, coals)]
    return HPolyhedron(tuple(m_name(s) for s in coals), tuple(cons))


def build_core(spec: CoreSpec) -> HPolyhedron:
    """Dominating games of order ``k``: phi(S) >= v(S) for proper S, phi(N) = v(N)."""
    n, v, coals = spec.n, spec.game, spec.coalitions
    full = v.grand
    cons = []
    for s in range(1, full + 1):
        row = [int(K & ~s == 0) for K in coals]
        cons.append(_constraint(row, EQ if s == full else GE, v[s]))
    if spec.variant == "monotone":
        cons += [_constraint(row, GE, 0) for row in _monotone_rows(n, coals)]
    elif spec.variant == "positive":
        for j in range(len(coals)):
            cons.append(_constraint([int(t == j) for t in range(len(coals))], GE, 0))
    return HPolyhedron(spec.names, tuple(cons))


def core_polyhedron(v: SetFunction, variant: str = "plain") -> HPolyhedron:
    """Classical core (or MC, C+) in payoff coordinates x[1..n]."""
    return build_core(CoreSpec(v, 1, variant)).rename(x_names(v.n))


def preimputation_polyhedron(v: SetFunction) -> HPolyhedron:
    n = v.n
    return HPolyhedron(x_names(n), (_constraint([1] * n, EQ, v[v.grand]),))


def imputation_polyhedron(v: SetFunction) -> HPolyhedron:
    n = v.n
    extra = [_constraint([int(j == i) for j in range(n)], GE, v[1 << i]) for i in range(n)]
    return preimputation_polyhedron(v).with_constraints(extra)


def nonnegative_orthant(n: int) -> list[LinearConstraint]:
    return [_constraint([int(j == i) for j in range(n)], GE, 0) for i in range(n)]


def rationality_constraints(v: SetFunction, coalitions) -> list[LinearConstraint]:
    """x(S) >= v(S) for each listed coalition."""
    n = v.n
    return [_constraint([(s >> i) & 1 for i in range(n)], GE, v[s]) for s in coalitions]


def filtered_polyhedron(v: SetFunction, blocked, nonnegative: bool = False) -> HPolyhedron:
    """PI(v) with x(S) >= v(S) for every proper S outside ``blocked``."""
    keep = [s for s in range(1, v.grand) if s not in blocked]
    P = preimputation_polyhedron(v).with_constraints(rationality_constraints(v, keep))
    return P.with_constraints(nonnegative_orthant(v.n)) if nonnegative else P


def chain_polyhedron(v: SetFunction, sigma: Permutation, nonnegative: bool = False) -> HPolyhedron:
    """PI(v) with prefix sums along ``sigma`` bounded below by v."""
    P = preimputation_polyhedron(v).with_constraints(rationality_constraints(v, sigma.chain()[:-1]))
    return P.with_constraints(nonnegative_orthant(v.n)) if nonnegative else P


def as_sharing(q: Sharing) -> SharingFunction:
    return selector_to_sharing(q) if isinstance(q, Selector) else q


def value_map_matrix(q: Sharing, n: int, k: int) -> list[list[Fraction]]:
    """n x eta(k) matrix of m -> x^q; entry (i, K) is q(K, i)."""
    q = as_sharing(q)
    if q.n != n:
        raise ValueError("sharing function and n disagree")
    coals = dividend_coalitions(n, k)
    return [[q.weights[K][i] for K in coals] for i in range(n)]


def project_core(spec: CoreSpec, q: Sharing, **fm_kwargs) -> HPolyhedron:
    """Image of the core variant under the sharing value x^q, in x[1..n]."""
    return linear_image(build_core(spec), value_map_matrix(q, spec.n, spec.k), x_names(spec.n), **fm_kwargs)


def is_k_balanced_monotone(v: SetFunction, k: int) -> bool:
    return not is_empty(build_core(CoreSpec(v, k, "monotone")))


@dataclass
class TheoremReport:
    theorem: str
    instance: dict
    verdict: str
    reason: str | None = None
    witness: dict | None = None
    details: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.verdict not in ("holds", "fails", "skipped"):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == "fails" and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instance": self.instance,
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": _jsonable(self.witness),
            "details": _jsonable(self.details),
            "stats": self.stats,
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, LinearConstraint):
        return obj.format([f"c{j}" for j in range(len(obj.coeffs))])
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def describe_game(v: SetFunction) -> dict:
    return {"n": v.n, "v": {coalition_key(s): str(x) for s, x in enumerate(v.values) if s}}


def _witness(P, Q, names, left="projection", right="expected"):
    w = difference_witness(P, Q)
    if w is None:
        return None
    return {
        "point": [str(x) for x in w["point"]],
        "in": left if w["in"] == "left" else right,
        "outside": right if w["in"] == "left" else left,
        "violates": w["violates"].format(names),
    }


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _compare_report(theorem, instance, proj, expected, details=None, stats=None, elapsed=0.0):
    ok = equal(proj, expected)
    return TheoremReport(
        theorem,
        instance,
        "holds" if ok else "fails",
        witness=None if ok else _witness(proj, expected, proj.names),
        details=details or {},
        stats=stats or {},
        elapsed=elapsed,
    )


def _check_order(v, k, lowest=2):
    if not lowest <= k <= v.n:
        raise ValueError(f"k must lie in {lowest}..{v.n}, got {k}")


def _sharing_label(q: Sharing):
    if isinstance(q, Selector):
        return {"selector": q.to_document()}
    return {"sharing": q.to_document()}


def verify_theorem1(v: SetFunction, k: int, q: SharingFunction, **fm_kwargs) -> TheoremReport:
    """Strictly positive sharing values map C^k(v) onto PI(v)."""
    _check_order(v, k)
    instance = {"game": describe_game(v), "k": k, **_sharing_label(q)}
    if not as_sharing(q).is_strictly_positive():
        return TheoremReport("th1", instance, "skipped", reason="sharing function is not strictly positive")
    with _Timer() as t:
        log = []
        proj = project_core(CoreSpec(v, k), q, log=log, **fm_kwargs)
        expected = preimputation_polyhedron(v)
        single = len(proj.constraints) == 1 and proj.constraints[0].is_equality
    stats = {"variables_eliminated": len(log), "max_constraints": max((e["raw"] for e in log), default=0),
             "image_constraints": len(proj.constraints)}
    return _compare_report("th1", instance, proj, expected, {"single_equality": single}, stats, t.elapsed)


def verify_theorem3(v: SetFunction, k: int, alpha: Selector, bound: int | None = None, **fm_kwargs) -> TheoremReport:
    """Selector images: PI(v) cut by x(S) >= v(S) for S outside the blocked collection.

    The verdict uses blocked collections with |K| <= ``bound`` (default
    ``k``); details record how the |K| <= k and |K| <= n readings fare.
    """
    _check_order(v, k)
    n = v.n
    bound = k if bound is None else bound
    instance = {"game": describe_game(v), "k": k, "bound": bound, **_sharing_label(alpha)}
    with _Timer() as t:
        proj = project_core(CoreSpec(v, k), alpha, **fm_kwargs)
        blocked_k, blocked_n = blocked_collection(alpha, k), blocked_collection(alpha, n)
        exp_k, exp_n = filtered_polyhedron(v, blocked_k), filtered_polyhedron(v, blocked_n)
        match_k = equal(proj, exp_k)
        match_n = match_k if blocked_k == blocked_n else equal(proj, exp_n)
        expected = exp_k if bound == k else filtered_polyhedron(v, blocked_collection(alpha, bound))
        ok = match_k if bound == k else (match_n if bound == n else equal(proj, expected))
    details = {
        "collections_coincide": blocked_k == blocked_n,
        "matches_bound_k": match_k,
        "matches_bound_n": match_n,
        "matching_readings": [r for r, m in (("k", match_k), ("n", match_n)) if m],
        "blocked_bound_k": sorted(coalition_key(s) for s in blocked_k),
        "blocked_bound_n": sorted(coalition_key(s) for s in blocked_n),
    }
    return TheoremReport(
        "th3", instance, "holds" if ok else "fails",
        witness=None if ok else _witness(proj, expected, proj.names),
        details=details, stats={"image_constraints": len(proj.constraints)}, elapsed=t.elapsed,
    )


def chain_rays(sigma: Permutation) -> list[tuple[int, ...]]:
    """1_{sigma(i-1)} - 1_{sigma(i)} for i = 2..n."""
    n = sigma.n
    out = []
    for a, b in zip(sigma.order, sigma.order[1:]):
        r = [0] * n
        r[a - 1], r[b - 1] = 1, -1
        out.append(canonical_ray(r))
    return sorted(out)


def verify_theorem2(v: SetFunction, k: int, sigma: Permutation, **fm_kwargs) -> TheoremReport:
    """Marginal images are the chain polyhedra, with vertex p^sigma(v) and chain rays."""
    _check_order(v, k)
    instance = {"game": describe_game(v), "k": k, "permutation": list(sigma.order)}
    with _Timer() as t:
        proj = project_core(CoreSpec(v, k), last_element_selector(sigma), **fm_kwargs)
        expected = chain_polyhedron(v, sigma)
        same = equal(proj, expected)
        p = marginal_value(sigma, v)
        contains_p = proj.contains(p)
        gens = enumerate_generators(proj)
        vertex_ok = list(gens.vertices) == [p]
        rays_ok = list(gens.rays) == chain_rays(sigma)
    ok = same and contains_p and vertex_ok and rays_ok
    witness = None
    if not ok:
        witness = _witness(proj, expected, proj.names) or {
            "vertices": [[str(x) for x in u] for u in gens.vertices],
            "rays": [list(r) for r in gens.rays],
            "expected_vertex": [str(x) for x in p],
            "expected_rays": [list(r) for r in chain_rays(sigma)],
        }
    details = {
        "equals_chain_polyhedron": same,
        "contains_marginal_value": contains_p,
        "unique_vertex": vertex_ok,
        "chain_rays": rays_ok,
        "vertices": [[str(x) for x in u] for u in gens.vertices],
        "rays": [list(r) for r in gens.rays],
    }
    return TheoremReport("th2", instance, "holds" if ok else "fails", witness=witness,
                         details=details, stats={"image_constraints": len(proj.constraints)}, elapsed=t.elapsed)


def intersect_all(polys) -> HPolyhedron:
    polys = list(polys)
    names = polys[0].names
    cons = tuple(c for P in polys for c in P.constraints)
    return remove_redundant(HPolyhedron(names, cons))


def verify_theorem4(v: SetFunction, k: int, selector_budget: int = DEFAULT_SELECTOR_BUDGET,
                    **fm_kwargs) -> TheoremReport:
    """Intersections over all selectors and over all permutations equal C(v)."""
    _check_order(v, k)
    instance = {"game": describe_game(v), "k": k}
    spec = CoreSpec(v, k)
    with _Timer() as t:
        sel_images = [project_core(spec, a, **fm_kwargs) for a in enumerate_selectors(v.n, budget=selector_budget)]
        perm_images = [project_core(spec, last_element_selector(s), **fm_kwargs) for s in all_permutations(v.n)]
        by_sel, by_perm = intersect_all(sel_images), intersect_all(perm_images)
        core = core_polyhedron(v)
        core_empty = is_empty(core)
        sel_ok, perm_ok = equal(by_sel, core), equal(by_perm, core)
    ok = sel_ok and perm_ok
    witness = None
    if not ok:
        witness = _witness(by_sel, core, core.names, "selector intersection", "core") if not sel_ok \
            else _witness(by_perm, core, core.names, "permutation intersection", "core")
    details = {"core_empty": core_empty, "selectors": len(sel_images), "permutations": len(perm_images),
               "selector_intersection_equals_core": sel_ok, "permutation_intersection_equals_core": perm_ok}
    return TheoremReport("th4", instance, "holds" if ok else "fails", witness=witness, details=details,
                         stats={"intersection_constraints": len(by_sel.constraints)}, elapsed=t.elapsed)


def verify_theorem5(v: SetFunction, k: int, alpha: Selector, bound: int | None = None,
                    theorem: str = "th5", **fm_kwargs) -> TheoremReport:
    """Union-closed selector images of MC^k(v): nonnegative PI(v) cut by unblocked coalitions."""
    _check_order(v, k)
    n = v.n
    bound = k if bound is None else bound
    instance = {"game": describe_game(v), "k": k, "bound": bound, **_sharing_label(alpha)}
    bad = union_closure_violations(alpha, k)
    if bad:
        K, K2, K3 = bad[0]
        return TheoremReport(theorem, instance, "skipped", reason=(
            f"selector not union-closed: {{{coalition_key(K)}}}, {{{coalition_key(K2)}}} choose "
            f"{alpha(K)} but {{{coalition_key(K3)}}} chooses {alpha(K3)}"))
    if not is_k_balanced_monotone(v, k):
        return TheoremReport(theorem, instance, "skipped", reason=f"game is not {k}-balanced-monotone")
    with _Timer() as t:
        log = []
        proj = project_core(CoreSpec(v, k, "monotone"), alpha, log=log, **fm_kwargs)
        blocked_k, blocked_n = blocked_collection(alpha, k), blocked_collection(alpha, n)
        match_k = equal(proj, filtered_polyhedron(v, blocked_k, True))
        match_n = match_k if blocked_k == blocked_n else equal(proj, filtered_polyhedron(v, blocked_n, True))
        expected = filtered_polyhedron(v, blocked_collection(alpha, bound), True)
        ok = match_k if bound == k else (match_n if bound == n else equal(proj, expected))
        # the intersection lemma the identity rests on, checked on this instance
        spec = CoreSpec(v, k)
        gap = intersection_image_gap(build_core(spec), build_monotone_cone(n, k), value_map_matrix(alpha, n, k),
                                     x_names(n), **fm_kwargs)
    details = {"collections_coincide": blocked_k == blocked_n, "matches_bound_k": match_k, "matches_bound_n": match_n,
               "matching_readings": [r for r, m in (("k", match_k), ("n", match_n)) if m],
               "intersection_lemma_holds": gap is None}
    if gap is not None:
        details["intersection_lemma_gap"] = {"point": [str(c) for c in gap["point"]],
                                             "violates": gap["violates"].format(x_names(n))}
    stats = {"variables_eliminated": len(log), "max_constraints": max((e["raw"] for e in log), default=0),
             "image_constraints": len(proj.constraints)}
    return TheoremReport(theorem, instance, "holds" if ok else "fails",
                         witness=None if ok else _witness(proj, expected, proj.names),
                         details=details, stats=stats, elapsed=t.elapsed)


def verify_corollary2(v: SetFunction, k: int, sigma: Permutation, **fm_kwargs) -> TheoremReport:
    """Marginal images of MC^k(v) are the nonnegative chain polyhedra."""
    _check_order(v, k)
    alpha = last_element_selector(sigma)
    instance = {"game": describe_game(v), "k": k, "permutation": list(sigma.order)}
    if not is_k_balanced_monotone(v, k):
        return TheoremReport("cor2", instance, "skipped", reason=f"game is not {k}-balanced-monotone")
    with _Timer() as t:
        proj = project_core(CoreSpec(v, k, "monotone"), alpha, **fm_kwargs)
        expected = chain_polyhedron(v, sigma, nonnegative=True)
    return _compare_report("cor2", instance, proj, expected, stats={"image_constraints": len(proj.constraints)},
                           elapsed=t.elapsed)


def _apply(M, point):
    return tuple(sum((a * x for a, x in zip(row, point)), Fraction(0)) for row in M)


def in_convex_hull(point, points) -> bool:
    """Exact LP test: point is a convex combination of ``points``."""
    pts = list(points)
    if not pts:
        return False
    d = len(point)
    # variables: one weight per point
    eqs = [tuple(p[c] for p in pts) + (point[c],) for c in range(d)]
    eqs.append(tuple(Fraction(1) for _ in pts) + (Fraction(1),))
    ineqs = [tuple(Fraction(int(i == j)) for j in range(len(pts))) + (Fraction(0),) for i in range(len(pts))]
    return linprog([0] * len(pts), ineqs, eqs).status != "infeasible"


def verify_proposition1(v: SetFunction, k: int, q: Sharing, samples: int = 3, seed: int = 0,
                        selector_budget: int = DEFAULT_SELECTOR_BUDGET, **fm_kwargs) -> TheoremReport:
    """Images of MC^k(v) are hulls of images of its vertices.

    Also samples points of MC^k(v) and checks that every selector value of
    them lies in the hull of selector values of the vertices.
    """
    _check_order(v, k, 1)
    instance = {"game": describe_game(v), "k": k, "seed": seed, **_sharing_label(q)}
    spec = CoreSpec(v, k, "monotone")
    MC = build_core(spec)
    if is_empty(MC):
        return TheoremReport("prop1", instance, "skipped", reason=f"game is not {k}-balanced-monotone")
    with _Timer() as t:
        gens = enumerate_generators(MC)
        if gens.rays:
            return TheoremReport("prop1", instance, "fails",
                                 witness={"unbounded_direction": list(gens.rays[0])},
                                 details={"bounded": False})
        M = value_map_matrix(q, v.n, k)
        images = sorted({_apply(M, e) for e in gens.vertices})
        proj = project_core(spec, q, **fm_kwargs)
        try:
            img_gens = enumerate_generators(proj)
        except NotPointedError:
            img_gens = None
        ext_ok = img_gens is not None and not img_gens.rays and set(img_gens.vertices) <= set(images)
        hull_ok = ext_ok and all(proj.contains(p) for p in images)

        # selector values of sampled points vs hull of selector values of vertices
        rng = random.Random(f"prop1:{seed}")
        selectors = list(enumerate_selectors(v.n, budget=selector_budget))
        vert_games = [_zeta_from(spec, e) for e in gens.vertices]
        vert_sel = sorted({selector_value(a, g) for a in selectors for g in vert_games})
        samples_checked, cor_ok, cor_witness = 0, True, None
        for _ in range(samples):
            w = [Fraction(rng.randint(1, 5)) for _ in gens.vertices]
            tot = sum(w)
            w = [wi / tot for wi in w]
            phi = tuple(sum((wi * e[c] for wi, e in zip(w, gens.vertices)), Fraction(0))
                        for c in range(len(spec.coalitions)))
            game = _zeta_from(spec, phi)
            for a in selectors:
                x = selector_value(a, game)
                samples_checked += 1
                # certificate: the same weights on the vertex selector values
                combo = [selector_value(a, g) for g in vert_games]
                cert = tuple(sum((wi * y[c] for wi, y in zip(w, combo)), Fraction(0)) for c in range(v.n))
                if cert != x and not in_convex_hull(x, vert_sel):
                    cor_ok, cor_witness = False, {"point": [str(c) for c in x]}
                    break
            if not cor_ok:
                break
    ok = ext_ok and hull_ok and cor_ok
    witness = None
    if not ok:
        if cor_witness is not None:
            witness = cor_witness
        elif img_gens is not None:
            extra = [u for u in img_gens.vertices if u not in set(images)]
            outside = [p for p in images if not proj.contains(p)]
            witness = {"image_vertices_not_from_vertices": [[str(c) for c in u] for u in extra],
                       "vertex_images_outside_projection": [[str(c) for c in u] for u in outside]}
        else:
            witness = {"projection": "not pointed"}
    details = {
        "core_vertices": len(gens.vertices),
        "image_vertices": len(img_gens.vertices) if img_gens else None,
        "vertex_images": len(images),
        "ext_inclusion": ext_ok,
        "hull_equality": hull_ok,
        "selector_hull_inclusion": cor_ok,
        "selector_points_checked": samples_checked,
    }
    return TheoremReport("prop1", instance, "holds" if ok else "fails", witness=witness, details=details,
                         stats={"image_constraints": len(proj.constraints)}, elapsed=t.elapsed)


def _zeta_from(spec: CoreSpec, point) -> SetFunction:
    m = [Fraction(0)] * (1 << spec.n)
    for s, val in zip(spec.coalitions, point):
        m[s] = Fraction(val)
    return zeta_transform(SetFunction(spec.n, tuple(m), "mobius"))


def verify_proposition3(v: SetFunction, k: int, q: Sharing, **fm_kwargs) -> TheoremReport:
    """C(v) lies inside x^q(C^k(v)); likewise MC(v) inside x^q(MC^k(v))."""
    _check_order(v, k, 1)
    instance = {"game": describe_game(v), "k": k, **_sharing_label(q)}
    core = core_polyhedron(v)
    if is_empty(core):
        return TheoremReport("prop3", instance, "skipped", reason="core is empty")
    with _Timer() as t:
        proj = project_core(CoreSpec(v, k), q, **fm_kwargs)
        ok = is_subset(core, proj)
        witness = None if ok else _witness(core, proj, core.names, "core", "projection")
        mono = core_polyhedron(v, "monotone")
        mono_checked = not is_empty(mono) and is_k_balanced_monotone(v, k)
        mono_ok = None
        if mono_checked:
            mproj = project_core(CoreSpec(v, k, "monotone"), q, **fm_kwargs)
            mono_ok = is_subset(mono, mproj)
            if not mono_ok and witness is None:
                witness = _witness(mono, mproj, mono.names, "monotonic core", "monotone projection")
    holds = ok and mono_ok is not False
    return TheoremReport("prop3", instance, "holds" if holds else "fails", witness=witness,
                         details={"core_inclusion": ok, "monotone_checked": mono_checked, "monotone_inclusion": mono_ok},
                         stats={"image_constraints": len(proj.constraints)}, elapsed=t.elapsed)


def verify_remark_mc_eq_cplus(v: SetFunction) -> TheoremReport:
    """MC(v) = C+(v); and C+(v) = C(v) when every v({i}) >= 0."""
    instance = {"game": describe_game(v)}
    with _Timer() as t:
        mc, cplus, core = (core_polyhedron(v, var) for var in ("monotone", "positive", "plain"))
        mc_ok = equal(mc, cplus)
        applies = all(v[1 << i] >= 0 for i in range(v.n))
        cp_ok = equal(cplus, core) if applies else None
    ok = mc_ok and cp_ok is not False
    witness = None
    if not ok:
        witness = _witness(mc, cplus, mc.names, "MC", "C+") if not mc_ok else _witness(cplus, core, core.names, "C+", "C")
    return TheoremReport("remark1", instance, "holds" if ok else "fails", witness=witness,
                         details={"mc_equals_cplus": mc_ok, "singletons_nonnegative": applies,
                                  "cplus_equals_core": cp_ok, "core_empty": is_empty(core)},
                         elapsed=t.elapsed)


def verify_c2_nonempty(v: SetFunction) -> TheoremReport:
    """The 2-additive core is never empty."""
    instance = {"game": describe_game(v)}
    if v.n < 2:
        return TheoremReport("c2", instance, "skipped", reason="needs at least two players")
    with _Timer() as t:
        P = build_core(CoreSpec(v, 2))
        ineqs = [c.coeffs + (c.rhs,) for c in P.constraints if not c.is_equality]
        eqs = [c.coeffs + (c.rhs,) for c in P.constraints if c.is_equality]
        res = linprog([0] * P.dimension, ineqs, eqs)
    if res.status == "infeasible":
        return TheoremReport("c2", instance, "fails", witness={"infeasible_system": P.dumps()}, elapsed=t.elapsed)
    point = {name: str(x) for name, x in zip(P.names, res.x)}
    return TheoremReport("c2", instance, "holds", details={"element": point}, elapsed=t.elapsed)
