"""Named desk games and seeded random game generators."""

from __future__ import annotations

import random
from fractions import Fraction

from .setfunctions import (
    SetFunction,
    is_convex,
    is_monotone,
    members,
    size,
    zeta_transform,
)

GAME_CLASSES = ("general", "monotone", "convex")


def additive_game(weights) -> SetFunction:
    weights = [Fraction(w) for w in weights]
    return SetFunction.from_function(len(weights), lambda S: sum(weights[i - 1] for i in S))


def unanimity_game(n: int, players) -> SetFunction:
    t = set(players)
    return SetFunction.from_function(n, lambda S: 1 if t <= set(S) else 0)


def pair_game(n: int = 3) -> SetFunction:
    """v(S) = 1 iff |S| >= 2; empty core for n = 3."""
    return SetFunction.from_function(n, lambda S: 1 if len(S) >= 2 else 0)


def square_game(n: int = 3) -> SetFunction:
    """v(S) = |S|**2, a convex game."""
    return SetFunction.from_function(n, lambda S: len(S) ** 2)


def _small_rational(rng, lo, hi):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 3))


def random_game(n: int, seed: int, cls: str = "general") -> SetFunction:
    """Reproducible game with small numerators and denominators.

    ``monotone`` adds a nonnegative increment to the largest value among the
    immediate subcoalitions; ``convex`` draws nonnegative dividends on every
    coalition of two or more players, which makes the game supermodular.
    Both classes are checked after construction.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"random games support 1 <= n <= 6, got {n}")
    if cls not in GAME_CLASSES:
        raise ValueError(f"unknown game class {cls!r}")
    rng = random.Random(f"{cls}:{n}:{seed}")
    full = 1 << n
    if cls == "general":
        vals = [Fraction(0)] + [_small_rational(rng, -6, 6) for _ in range(1, full)]
        return SetFunction(n, tuple(vals))
    if cls == "monotone":
        vals = [Fraction(0)] * full
        for s in sorted(range(1, full), key=lambda s: (size(s), s)):
            base = max(vals[s & ~(1 << (i - 1))] for i in members(s))
            vals[s] = base + _small_rational(rng, 0, 4)
        v = SetFunction(n, tuple(vals))
        assert is_monotone(v)
        return v
    m = [Fraction(0)] * full
    for s in range(1, full):
        m[s] = _small_rational(rng, -3, 3) if size(s) == 1 else _small_rational(rng, 0, 3)
    v = zeta_transform(SetFunction(n, tuple(m), "mobius"))
    assert is_convex(v)
    return v
