"""Selectors, sharing functions, permutations and the payoff vectors they induce.

Payoff vectors are tuples of ``Fraction`` indexed by player - 1.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import GameFormatError, ResourceBudgetError
from .setfunctions import (
    Coalition,
    SetFunction,
    coalition_key,
    members,
    mobius_transform,
    parse_coalition_key,
    parse_json_document,
    parse_rational,
    size,
)

DEFAULT_SELECTOR_BUDGET = 100_000


@dataclass(frozen=True)
class Selector:
    """Choice of one member in every nonempty coalition.

    ``choice[s]`` is the chosen player for bitmask ``s``; ``choice[0]`` is 0.
    """

    n: int
    choice: tuple[int, ...]

    def __post_init__(self):
        if len(self.choice) != 1 << self.n:
            raise ValueError("selector needs one choice per coalition")
        for s in range(1, 1 << self.n):
            i = self.choice[s]
            if not (isinstance(i, int) and 1 <= i <= self.n and s >> (i - 1) & 1):
                raise ValueError(f"choice {i!r} not in coalition {{{coalition_key(s)}}}")

    @classmethod
    def from_function(cls, n: int, f) -> Selector:
        """``f`` maps a coalition bitmask to the chosen player."""
        return cls(n, (0,) + tuple(f(s) for s in range(1, 1 << n)))

    def __call__(self, s: Coalition) -> int:
        return self.choice[s]

    def to_document(self) -> dict:
        return {coalition_key(s): self.choice[s] for s in range(1, 1 << self.n) if size(s) >= 2}


def min_selector(n: int) -> Selector:
    return Selector.from_function(n, lambda s: members(s)[0])


def max_selector(n: int) -> Selector:
    return Selector.from_function(n, lambda s: members(s)[-1])


@dataclass(frozen=True)
class Permutation:
    """Players listed by rank: ``order[r - 1]`` is the player of rank ``r``."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError(f"{self.order} is not a permutation of 1..{len(self.order)}")

    @property
    def n(self) -> int:
        return len(self.order)

    def rank(self, player: int) -> int:
        return self.order.index(player) + 1

    def chain(self) -> list[Coalition]:
        """S_1, ..., S_n with S_i the players of rank at most i."""
        out, s = [], 0
        for p in self.order:
            s |= 1 << (p - 1)
            out.append(s)
        return out

    def last(self, s: Coalition) -> int:
        """Member of ``s`` with maximal rank."""
        return max(members(s), key=self.rank)

    def __str__(self):
        return ",".join(map(str, self.order))


def all_permutations(n: int):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def last_element_selector(sigma: Permutation) -> Selector:
    return Selector.from_function(sigma.n, sigma.last)


@dataclass(frozen=True)
class SharingFunction:
    """``weights[s][i - 1]`` is q(S, i); rows sum to one on their support."""

    n: int
    weights: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.weights) != 1 << self.n:
            raise ValueError("sharing function needs one row per coalition")
        rows = [tuple(Fraction(x) for x in row) for row in self.weights]
        object.__setattr__(self, "weights", tuple(rows))
        for s in range(1, 1 << self.n):
            row = rows[s]
            if len(row) != self.n:
                raise ValueError("sharing rows need one weight per player")
            for i, w in enumerate(row, start=1):
                if not 0 <= w <= 1:
                    raise ValueError(f"q({{{coalition_key(s)}}},{i}) = {w} outside [0,1]")
                if w and not s >> (i - 1) & 1:
                    raise ValueError(f"q({{{coalition_key(s)}}},{i}) must be 0 for a non-member")
            if sum(row) != 1:
                raise ValueError(f"weights of {{{coalition_key(s)}}} sum to {sum(row)}, not 1")

    def __call__(self, s: Coalition, i: int) -> Fraction:
        return self.weights[s][i - 1]

    def is_strictly_positive(self) -> bool:
        return all(self.weights[s][i - 1] > 0 for s in range(1, 1 << self.n) for i in members(s))

    def to_document(self) -> dict:
        return {
            f"{coalition_key(s)}|{i}": str(self.weights[s][i - 1])
            for s in range(1, 1 << self.n)
            if size(s) >= 2
            for i in members(s)
        }


def _zero_row(n):
    return (Fraction(0),) * n


def uniform_sharing(n: int) -> SharingFunction:
    rows = [_zero_row(n)]
    for s in range(1, 1 << n):
        w = Fraction(1, size(s))
        rows.append(tuple(w if s >> i & 1 else Fraction(0) for i in range(n)))
    return SharingFunction(n, tuple(rows))


def selector_to_sharing(alpha: Selector) -> SharingFunction:
    n = alpha.n
    rows = [_zero_row(n)]
    for s in range(1, 1 << n):
        rows.append(tuple(Fraction(int(alpha(s) == i)) for i in range(1, n + 1)))
    return SharingFunction(n, tuple(rows))


def sharing_value(q: SharingFunction, v: SetFunction) -> tuple[Fraction, ...]:
    if q.n != v.n:
        raise ValueError("sharing function and game disagree on n")
    m = mobius_transform(v)
    x = [Fraction(0)] * v.n
    for s, d in m.nonzero():
        row = q.weights[s]
        for i in members(s):
            x[i - 1] += row[i - 1] * d
    return tuple(x)


def selector_value(alpha: Selector, v: SetFunction) -> tuple[Fraction, ...]:
    if alpha.n != v.n:
        raise ValueError("selector and game disagree on n")
    m = mobius_transform(v)
    x = [Fraction(0)] * v.n
    for s, d in m.nonzero():
        x[alpha(s) - 1] += d
    return tuple(x)


def marginal_value(sigma: Permutation, v: SetFunction) -> tuple[Fraction, ...]:
    if sigma.n != v.n:
        raise ValueError("permutation and game disagree on n")
    x = [Fraction(0)] * v.n
    prev = 0
    for p, s in zip(sigma.order, sigma.chain()):
        x[p - 1] = v[s] - v[prev]
        prev = s
    return tuple(x)


def shapley_value(v: SetFunction) -> tuple[Fraction, ...]:
    """Equal split of every dividend among the members of its coalition."""
    return sharing_value(uniform_sharing(v.n), v)


def selector_count(n: int, max_size: int | None = None) -> int:
    max_size = n if max_size is None else max_size
    return prod(size(s) for s in range(1, 1 << n) if size(s) <= max_size)


def enumerate_selectors(n: int, max_size: int | None = None, budget: int = DEFAULT_SELECTOR_BUDGET):
    """Stream every selector on coalitions of size <= ``max_size``.

    Coalitions larger than ``max_size`` always choose their minimum member.
    """
    max_size = n if max_size is None else max_size
    count = selector_count(n, max_size)
    if count > budget:
        raise ResourceBudgetError(f"{count} selectors for n={n}, max_size={max_size} exceed budget {budget}")
    free = [s for s in range(1, 1 << n) if 2 <= size(s) <= max_size]
    base = [0] + [members(s)[0] for s in range(1, 1 << n)]
    for picks in itertools.product(*(members(s) for s in free)):
        choice = list(base)
        for s, i in zip(free, picks):
            choice[s] = i
        yield Selector(n, tuple(choice))


def blocked_collection(alpha: Selector, bound: int) -> frozenset[Coalition]:
    """Proper nonempty S such that some K with 2 <= |K| <= bound meets S,
    leaves S, and has its chosen player inside S."""
    n = alpha.n
    if not 2 <= bound <= n:
        raise ValueError(f"bound must lie in 2..{n}, got {bound}")
    full = (1 << n) - 1
    ks = [k for k in range(1, 1 << n) if 2 <= size(k) <= bound]
    out = set()
    for s in range(1, full):
        for k in ks:
            if k & s and k & ~s and s >> (alpha(k) - 1) & 1:
                out.add(s)
                break
    return frozenset(out)


def union_closure_violations(alpha: Selector, k: int):
    """Triples (K, K', K'') breaking the union-closure property at order ``k``."""
    n = alpha.n
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in 2..{n}, got {k}")
    ks = [s for s in range(1, 1 << n) if 2 <= size(s) <= k]
    bad = []
    for a, k1 in enumerate(ks):
        i = alpha(k1)
        bit = 1 << (i - 1)
        for k2 in ks[a:]:
            if alpha(k2) != i:
                continue
            union = k1 | k2
            for k3 in ks:
                if k3 & bit and k3 & ~union == 0 and alpha(k3) != i:
                    bad.append((k1, k2, k3))
    return bad


def is_union_closed_selector(alpha: Selector, k: int) -> bool:
    return not union_closure_violations(alpha, k)


def selectope_vertices(v: SetFunction, budget: int = DEFAULT_SELECTOR_BUDGET):
    """Distinct selector values, sorted."""
    return sorted({selector_value(a, v) for a in enumerate_selectors(v.n, budget=budget)})


def weber_vertices(v: SetFunction):
    """Distinct marginal values, sorted."""
    return sorted({marginal_value(p, v) for p in all_permutations(v.n)})


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Accept ``2,1,3`` or a JSON array ``[2, 1, 3]``."""
    text = text.strip()
    try:
        order = json.loads(text) if text.startswith("[") else [int(t) for t in text.split(",")]
        sigma = Permutation(tuple(order))
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise GameFormatError(f"bad permutation {text!r}: {exc}") from None
    if n is not None and sigma.n != n:
        raise GameFormatError(f"permutation has {sigma.n} players, game has {n}")
    return sigma


def loads_selector(text: str, n: int) -> Selector:
    """Parse ``{"1,2": 2, ...}``; unlisted coalitions choose their minimum member."""
    doc = parse_json_document(text)
    if not isinstance(doc, dict):
        raise GameFormatError("selector document must be a map")
    choice = [0] + [members(s)[0] for s in range(1, 1 << n)]
    for key, i in doc.items():
        s = parse_coalition_key(key, n)
        if s == 0:
            raise GameFormatError("the empty coalition has no choice")
        if not isinstance(i, int) or isinstance(i, bool) or not s >> (i - 1) & 1 or i < 1:
            raise GameFormatError(f"key {key!r}: choice {i!r} is not a member")
        choice[s] = i
    return Selector(n, tuple(choice))


def loads_sharing(text: str, n: int) -> SharingFunction:
    """Parse ``{"1,2|1": "1/3", ...}``; unlisted coalitions share uniformly."""
    doc = parse_json_document(text)
    if not isinstance(doc, dict):
        raise GameFormatError("sharing document must be a map")
    rows = [list(r) for r in uniform_sharing(n).weights]
    given: dict[int, dict[int, Fraction]] = {}
    for key, raw in doc.items():
        if "|" not in key:
            raise GameFormatError(f"key {key!r} must read 'coalition|player'")
        ck, _, pk = key.partition("|")
        s = parse_coalition_key(ck, n)
        try:
            i = int(pk)
        except ValueError:
            raise GameFormatError(f"key {key!r}: bad player") from None
        if s == 0 or not 1 <= i <= n or not s >> (i - 1) & 1:
            raise GameFormatError(f"key {key!r}: player not in coalition")
        given.setdefault(s, {})[i] = parse_rational(raw)
    for s, entries in given.items():
        rows[s] = [entries.get(i, Fraction(0)) for i in range(1, n + 1)]
    try:
        return SharingFunction(n, tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise GameFormatError(str(exc)) from None
