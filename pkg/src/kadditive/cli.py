"""Command-line front end.

Exit codes: 0 every verdict holds, 1 a witnessed failure, 2 usage or parse
error, 3 a resource budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import suite
from .allocation import (
    DEFAULT_SELECTOR_BUDGET,
    last_element_selector,
    loads_selector,
    loads_sharing,
    marginal_value,
    parse_permutation,
    selector_value,
    shapley_value,
    sharing_value,
    uniform_sharing,
)
from .cores import VARIANTS, CoreSpec, build_core, project_core, x_names
from .errors import GameFormatError, NotPointedError, ResourceBudgetError
from .games import GAME_CLASSES, random_game
from .polyhedra import DEFAULT_FM_BUDGET, enumerate_generators, feasible_point, is_empty
from .setfunctions import coalition_key, load_game, mobius_transform, zeta_transform

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _game(args):
    try:
        return load_game(args.game)
    except OSError as exc:
        raise UsageError(f"cannot read {args.game}: {exc.strerror}") from None
    except GameFormatError as exc:
        raise UsageError(f"{args.game}: {exc}") from None


def parse_value(spec: str, n: int):
    """Resolve a value specifier to (label, sharing-like object, payoff function)."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "shapley" and not arg:
            q = uniform_sharing(n)
            return "shapley", q, shapley_value
        if kind == "marginal" and arg:
            sigma = parse_permutation(arg, n)
            return f"marginal:{sigma}", last_element_selector(sigma), lambda v: marginal_value(sigma, v)
        if kind == "selector" and arg:
            alpha = loads_selector(_read(arg), n)
            return f"selector:{arg}", alpha, lambda v: selector_value(alpha, v)
        if kind == "sharing" and arg:
            q = loads_sharing(_read(arg), n)
            return f"sharing:{arg}", q, lambda v: sharing_value(q, v)
    except GameFormatError as exc:
        raise UsageError(f"value {spec!r}: {exc}") from None
    raise UsageError(f"bad value specifier {spec!r}; use shapley, marginal:σ, selector:PATH or sharing:PATH")


def _check_k(k, n):
    if not 1 <= k <= n:
        raise UsageError(f"--k must lie in 1..{n}, got {k}")


def _fmt_point(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def _poly_doc(P):
    return {"names": list(P.names), "constraints": [c.format(P.names) for c in P.constraints]}


def cmd_transform(args):
    v = _game(args)
    out = zeta_transform(v) if args.inverse else mobius_transform(v)
    if args.out or args.format == "json":
        return out.dumps()
    rows = [f"{coalition_key(s)} → {x}" for s, x in out.nonzero()]
    return "\n".join(rows or ["(all zero)"]) + "\n"


def cmd_value(args):
    v = _game(args)
    label, _, f = parse_value(args.value, v.n)
    x = f(v)
    total = sum(x)
    if args.format == "json":
        doc = {"value": label, "payoff": [str(c) for c in x],
               "efficiency": {"sum": str(total), "grand": str(v[v.grand])}}
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"x[{i}] = {c}" for i, c in enumerate(x, start=1)]
    lines.append(f"sum x = {total} = v(N)" if total == v[v.grand] else f"sum x = {total} != v(N) = {v[v.grand]}")
    return "\n".join(lines) + "\n"


def cmd_core(args):
    v = _game(args)
    _check_k(args.k, v.n)
    P = build_core(CoreSpec(v, args.k, args.variant))
    if args.k == 1:
        P = P.rename(x_names(v.n))
    empty = is_empty(P)
    point = None if empty else feasible_point(*P.int_rows(), d=P.dimension)
    gens = None
    if args.generators and not empty:
        try:
            gens = enumerate_generators(P)
        except NotPointedError as exc:
            gens = exc
    if args.format == "json":
        doc = {"k": args.k, "variant": args.variant, "empty": empty, "polyhedron": _poly_doc(P),
               "point": None if point is None else [str(c) for c in point]}
        if args.generators:
            if isinstance(gens, NotPointedError):
                doc["generators"] = {"error": str(gens)}
            elif gens is not None:
                doc["generators"] = {"vertices": [[str(c) for c in p] for p in gens.vertices],
                                     "rays": [list(r) for r in gens.rays]}
        return json.dumps(doc, indent=2) + "\n"
    if empty:
        return "EMPTY\n"
    lines = [str(P), f"point: {_fmt_point(point)}"]
    if isinstance(gens, NotPointedError):
        lines.append(f"generators: {gens}")
    elif gens is not None:
        lines += [f"vertex: {_fmt_point(p)}" for p in gens.vertices]
        lines += [f"ray: {_fmt_point(r)}" for r in gens.rays]
    return "\n".join(lines) + "\n"


def cmd_project(args):
    v = _game(args)
    _check_k(args.k, v.n)
    label, q, _ = parse_value(args.value, v.n)
    proj = project_core(CoreSpec(v, args.k, args.variant), q, budget=args.budget_fm)
    if args.format == "json":
        doc = {"k": args.k, "variant": args.variant, "value": label, "empty": is_empty(proj),
               "polyhedron": _poly_doc(proj)}
        return json.dumps(doc, indent=2) + "\n"
    return ("EMPTY" if is_empty(proj) else str(proj)) + "\n"


def cmd_verify(args):
    config = suite.RunConfig(suite=args.suite, n=args.n, seed=args.seed, random_games=args.random_games,
                             budget_fm=args.budget_fm, budget_selectors=args.budget_selectors, jobs=args.jobs)
    if args.game:
        v = _game(args)
        config = suite.RunConfig(**{**config.__dict__, "n": v.n})
        reports = suite.run_on_game(config, args.game, v)
    else:
        reports = suite.run(config)
    text = suite.render_json(config, reports, args.timings) if args.format == "json" \
        else suite.render_human(config, reports)
    code = EXIT_FAIL if any(r.verdict == "fails" for r in reports) else EXIT_OK
    return text, code


def cmd_random_game(args):
    if not 1 <= args.n <= 6:
        raise UsageError(f"--n must lie in 1..6, got {args.n}")
    return random_game(args.n, args.seed, args.cls).dumps()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="kadditive", description="k-additive cores, sharing values and projections")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", parents=[common], help="Möbius transform of a game")
    t.add_argument("--game", required=True, metavar="PATH")
    t.add_argument("--inverse", action="store_true", help="zeta transform (dividends back to a game)")
    t.set_defaults(func=cmd_transform)

    val = sub.add_parser("value", parents=[common], help="payoff vector of a value")
    val.add_argument("--game", required=True, metavar="PATH")
    val.add_argument("--value", required=True, metavar="SPEC")
    val.set_defaults(func=cmd_value)

    c = sub.add_parser("core", parents=[common], help="k-additive core as an H-representation")
    c.add_argument("--game", required=True, metavar="PATH")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--variant", choices=VARIANTS, default="plain")
    c.add_argument("--generators", action="store_true", help="also enumerate vertices and rays")
    c.set_defaults(func=cmd_core)

    pr = sub.add_parser("project", parents=[common], help="image of the k-additive core under a value")
    pr.add_argument("--game", required=True, metavar="PATH")
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--variant", choices=VARIANTS, default="plain")
    pr.add_argument("--value", required=True, metavar="SPEC")
    pr.add_argument("--budget-fm", type=int, default=DEFAULT_FM_BUDGET)
    pr.set_defaults(func=cmd_project)

    ver = sub.add_parser("verify", parents=[common], help="run verification suites")
    ver.add_argument("--suite", choices=("all",) + suite.SUITES, default="all")
    ver.add_argument("--game", metavar="PATH", help="verify on this game instead of the default corpus")
    ver.add_argument("--n", type=int, default=3, help="player count of the default corpus")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--random-games", type=int, default=3, help="random games per class in the corpus")
    ver.add_argument("--budget-fm", type=int, default=DEFAULT_FM_BUDGET)
    ver.add_argument("--budget-selectors", type=int, default=DEFAULT_SELECTOR_BUDGET)
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--timings", action="store_true", help="include elapsed seconds (not reproducible)")
    ver.set_defaults(func=cmd_verify)

    rg = sub.add_parser("random-game", parents=[common], help="reproducible random game document")
    rg.add_argument("--n", type=int, required=True)
    rg.add_argument("--seed", type=int, default=0)
    rg.add_argument("--class", dest="cls", choices=GAME_CLASSES, default="general")
    rg.set_defaults(func=cmd_random_game)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("budget_fm", "budget_selectors", "jobs"):
        if getattr(args, name, 1) <= 0:
            print(f"kadditive: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"kadditive: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"kadditive: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"kadditive: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
