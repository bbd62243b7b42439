"""Verification suites over a reproducible game corpus."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cores
from .allocation import (
    DEFAULT_SELECTOR_BUDGET,
    all_permutations,
    enumerate_selectors,
    min_selector,
    uniform_sharing,
)
from .games import additive_game, pair_game, random_game, square_game, unanimity_game
from .polyhedra import DEFAULT_FM_BUDGET
from .setfunctions import SetFunction, is_monotone

SUITES = ("th1", "th2", "th3", "th4", "th5", "cor2", "prop1", "prop3", "remark1", "c2")


@dataclass(frozen=True)
class RunConfig:
    suite: str = "all"
    n: int = 3
    seed: int = 0
    random_games: int = 3
    budget_fm: int = DEFAULT_FM_BUDGET
    budget_selectors: int = DEFAULT_SELECTOR_BUDGET
    jobs: int = 1

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.budget_fm <= 0 or self.budget_selectors <= 0:
            raise ValueError("budgets must be positive")
        if not 2 <= self.n <= 6:
            raise ValueError("verification corpora need 2 <= n <= 6")


def default_corpus(n: int, seed: int, random_games: int) -> list[tuple[str, SetFunction]]:
    """Named desk games followed by seeded random games of each class."""
    games = [
        ("additive", additive_game(range(1, n + 1))),
        ("unanimity-12", unanimity_game(n, (1, 2))),
        ("pair", pair_game(n)),
        ("square", square_game(n)),
    ]
    for cls in ("general", "monotone", "convex"):
        for i in range(random_games):
            games.append((f"{cls}-{seed}-{i}", random_game(n, seed * 1000 + i, cls)))
    return games


def _tasks(config: RunConfig, corpus):
    suites = SUITES if config.suite == "all" else (config.suite,)
    n = config.n
    fm = {"budget": config.budget_fm}
    sb = config.budget_selectors
    for suite in suites:
        for name, v in corpus:
            ks = range(2, n + 1)
            if suite == "th1":
                for k in ks:
                    yield suite, name, "verify_theorem1", (v, k, uniform_sharing(n)), fm
            elif suite == "th2":
                for k in ks:
                    for sigma in all_permutations(n):
                        yield suite, name, "verify_theorem2", (v, k, sigma), fm
            elif suite == "th3":
                for k in ks:
                    for alpha in enumerate_selectors(n, budget=sb):
                        yield suite, name, "verify_theorem3", (v, k, alpha), fm
            elif suite == "th4":
                for k in ks:
                    yield suite, name, "verify_theorem4", (v, k, sb), fm
            elif suite in ("th5", "cor2", "prop1"):
                if not is_monotone(v):
                    continue
                for k in ks:
                    if suite == "th5":
                        for alpha in enumerate_selectors(n, budget=sb):
                            yield suite, name, "verify_theorem5", (v, k, alpha), fm
                    elif suite == "cor2":
                        for sigma in all_permutations(n):
                            yield suite, name, "verify_corollary2", (v, k, sigma), fm
                    else:
                        yield suite, name, "verify_proposition1", (v, k, uniform_sharing(n), 3, config.seed, sb), fm
            elif suite == "prop3":
                for k in ks:
                    yield suite, name, "verify_proposition3", (v, k, uniform_sharing(n)), fm
                    yield suite, name, "verify_proposition3", (v, k, min_selector(n)), fm
            elif suite == "remark1":
                yield suite, name, "verify_remark_mc_eq_cplus", (v,), {}
            elif suite == "c2":
                yield suite, name, "verify_c2_nonempty", (v,), {}


def _run_task(task):
    suite, name, func, args, kwargs = task
    report = getattr(cores, func)(*args, **kwargs)
    report.instance = {"name": name, **report.instance}
    return report


def run(config: RunConfig) -> list:
    """Reports in deterministic task order."""
    corpus = default_corpus(config.n, config.seed, config.random_games)
    return run_tasks(list(_tasks(config, corpus)), config.jobs)


def run_on_game(config: RunConfig, name: str, v: SetFunction) -> list:
    return run_tasks(list(_tasks(config, [(name, v)])), config.jobs)


def run_tasks(tasks, jobs: int = 1) -> list:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_task, tasks))
    return [_run_task(t) for t in tasks]


def summarize(reports) -> dict:
    out = {"holds": 0, "fails": 0, "skipped": 0}
    for r in reports:
        out[r.verdict] += 1
    return out


def render_json(config: RunConfig, reports, timings: bool = False) -> str:
    doc = {
        "config": {
            "suite": config.suite,
            "n": config.n,
            "seed": config.seed,
            "random_games": config.random_games,
            "budget_fm": config.budget_fm,
            "budget_selectors": config.budget_selectors,
        },
        "summary": summarize(reports),
        "reports": [r.to_dict(timings) for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


def render_human(config: RunConfig, reports) -> str:
    lines = [f"suite={config.suite} n={config.n} seed={config.seed}"]
    for r in reports:
        inst = r.instance
        extra = {k: v for k, v in inst.items() if k in ("k", "permutation", "bound")}
        tag = " ".join(f"{k}={v}" for k, v in extra.items())
        line = f"{r.theorem:8} {inst.get('name', ''):16} {tag:28} {r.verdict}"
        if r.reason:
            line += f" ({r.reason})"
        lines.append(line.rstrip())
        flat = {k: v for k, v in r.details.items() if isinstance(v, (bool, int)) and v is not None}
        if flat:
            lines.append("    " + " ".join(f"{k}={v}" for k, v in flat.items()))
        if r.witness:
            lines.append(f"    witness: {json.dumps(r.to_dict()['witness'])}")
    s = summarize(reports)
    lines.append(f"holds={s['holds']} fails={s['fails']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


__all__ = ["RunConfig", "SUITES", "default_corpus", "render_human", "render_json", "run", "run_on_game", "summarize"]
