"""Coalitions, set functions and the Mobius/zeta transforms.

A coalition is an ``int`` bitmask: player ``i`` (1-based) is bit ``i - 1``.
Iterating ``range(1 << n)`` therefore visits coalitions in canonical order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from . import kernels
from .errors import GameFormatError

Coalition = int


def coalition(players: Iterable[int]) -> Coalition:
    s = 0
    for i in players:
        if i < 1:
            raise ValueError(f"player indices are 1-based, got {i}")
        s |= 1 << (i - 1)
    return s


def members(s: Coalition) -> tuple[int, ...]:
    out = []
    i = 1
    while s:
        if s & 1:
            out.append(i)
        s >>= 1
        i += 1
    return tuple(out)


def size(s: Coalition) -> int:
    return bin(s).count("1")


def subsets(s: Coalition):
    """All subsets of ``s`` including the empty one, ascending."""
    t = 0
    while True:
        yield t
        if t == s:
            return
        t = (t - s) & s


def coalition_key(s: Coalition) -> str:
    return ",".join(str(i) for i in members(s))


def parse_coalition_key(text: str, n: int) -> Coalition:
    text = text.strip()
    if not text:
        return 0
    try:
        players = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise GameFormatError(f"bad coalition key {text!r}") from None
    if players != sorted(set(players)):
        raise GameFormatError(f"coalition key {text!r} must list distinct players ascending")
    if players[0] < 1 or players[-1] > n:
        raise GameFormatError(f"coalition key {text!r} out of range for n={n}")
    return coalition(players)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise GameFormatError(f"bad rational {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise GameFormatError(f"rationals must be strings like '3/4', got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise GameFormatError(f"bad rational {text!r}") from None


@dataclass(frozen=True)
class SetFunction:
    """Exact rational set function on all ``2**n`` coalitions.

    ``kind`` is "game" or "mobius" and is informational only.
    """

    n: int
    values: tuple[Fraction, ...]
    kind: str = "game"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("player count must be nonnegative")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(Fraction(x) for x in self.values))
        if self.values[0] != 0:
            raise ValueError("value of the empty coalition must be 0")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping, kind: str = "game") -> SetFunction:
        """Build from ``{coalition: value}``; keys may be bitmasks or player iterables."""
        values = [Fraction(0)] * (1 << n)
        for k, x in mapping.items():
            s = k if isinstance(k, int) else coalition(k)
            if s >> n:
                raise ValueError(f"coalition {members(s)} not inside N={{1..{n}}}")
            values[s] = Fraction(x)
        return cls(n, tuple(values), kind)

    @classmethod
    def from_function(cls, n: int, f, kind: str = "game") -> SetFunction:
        """Build from a callable on member tuples."""
        return cls(n, tuple([Fraction(0)] + [Fraction(f(members(s))) for s in range(1, 1 << n)]), kind)

    @property
    def grand(self) -> Coalition:
        return (1 << self.n) - 1

    def __getitem__(self, s: Coalition) -> Fraction:
        return self.values[s]

    def __call__(self, *players: int) -> Fraction:
        return self.values[coalition(players)]

    def _check(self, other):
        if not isinstance(other, SetFunction) or other.n != self.n:
            raise ValueError("set functions must share the player count")

    def __add__(self, other: SetFunction) -> SetFunction:
        self._check(other)
        return SetFunction(self.n, tuple(a + b for a, b in zip(self.values, other.values)), self.kind)

    def __sub__(self, other: SetFunction) -> SetFunction:
        self._check(other)
        return SetFunction(self.n, tuple(a - b for a, b in zip(self.values, other.values)), self.kind)

    def __mul__(self, c) -> SetFunction:
        c = Fraction(c)
        return SetFunction(self.n, tuple(c * a for a in self.values), self.kind)

    __rmul__ = __mul__

    def nonzero(self):
        """(coalition, value) pairs with a nonzero value, canonical order."""
        return [(s, x) for s, x in enumerate(self.values) if x != 0]

    def to_document(self) -> dict:
        return {
            "n": self.n,
            "v": {coalition_key(s): format_rational(x) for s, x in enumerate(self.values) if s and x != 0},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_document(), indent=2) + "\n"


def _subset_transform(f: SetFunction, sign: int, kind: str) -> SetFunction:
    scale = lcm(*(x.denominator for x in f.values))
    ints = [int(x * scale) for x in f.values]
    out = kernels.subset_sum(ints, f.n, sign)
    return SetFunction(f.n, tuple(Fraction(x, scale) for x in out), kind)


def mobius_transform(v: SetFunction) -> SetFunction:
    """Harsanyi dividends m(S) = sum over T in S of (-1)^|S-T| v(T)."""
    return _subset_transform(v, -1, "mobius")


def zeta_transform(m: SetFunction) -> SetFunction:
    """Inverse of :func:`mobius_transform`: v(S) = sum over T in S of m(T)."""
    return _subset_transform(m, 1, "game")


def mobius_direct(v: SetFunction) -> SetFunction:
    """Double-sum evaluation of the Mobius transform (reference oracle)."""
    vals = []
    for s in range(1 << v.n):
        total = Fraction(0)
        for t in subsets(s):
            total += v[t] if size(s ^ t) % 2 == 0 else -v[t]
        vals.append(total)
    return SetFunction(v.n, tuple(vals), "mobius")


def zeta_direct(m: SetFunction) -> SetFunction:
    return SetFunction(m.n, tuple(sum((m[t] for t in subsets(s)), Fraction(0)) for s in range(1 << m.n)), "game")


def is_k_additive(m: SetFunction, k: int, exact: bool = False) -> bool:
    """Whether the dividends ``m`` vanish above size ``k``.

    With ``exact=True`` some coalition of size exactly ``k`` must also carry
    a nonzero dividend.
    """
    if not 1 <= k <= max(m.n, 1):
        raise ValueError(f"k must lie in 1..{m.n}, got {k}")
    if any(x != 0 for s, x in enumerate(m.values) if size(s) > k):
        return False
    if exact:
        return any(x != 0 for s, x in enumerate(m.values) if size(s) == k)
    return True


def is_monotone(v: SetFunction) -> bool:
    full = v.grand
    for s in range(1 << v.n):
        rest = full & ~s
        while rest:
            bit = rest & -rest
            if v[s] > v[s | bit]:
                return False
            rest ^= bit
    return True


def is_additive(v: SetFunction) -> bool:
    m = mobius_transform(v)
    return all(x == 0 for s, x in enumerate(m.values) if size(s) >= 2)


def is_convex(v: SetFunction) -> bool:
    """Supermodularity: v(S+i) - v(S) <= v(T+i) - v(T) for S in T, i not in T.

    Checked through the equivalent local condition
    v(S+i+j) - v(S+i) - v(S+j) + v(S) >= 0.
    """
    full = v.grand
    for s in range(1 << v.n):
        rest = members(full & ~s)
        for a in range(len(rest)):
            bi = 1 << (rest[a] - 1)
            for b in range(a + 1, len(rest)):
                bj = 1 << (rest[b] - 1)
                if v[s | bi | bj] - v[s | bi] - v[s | bj] + v[s] < 0:
                    return False
    return True


def _unique_pairs(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise GameFormatError(f"duplicate key {key!r}")
        out[key] = value
    return out


def parse_json_document(text: str):
    """JSON with line diagnostics; duplicate keys are rejected."""
    try:
        return json.loads(text, object_pairs_hook=_unique_pairs)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"line {exc.lineno}: {exc.msg}") from None


def loads_game(text: str) -> SetFunction:
    """Parse the JSON game document ``{"n": int, "v": {"1,3": "p/q", ...}}``."""
    doc = parse_json_document(text)
    if not isinstance(doc, dict) or "n" not in doc or "v" not in doc:
        raise GameFormatError('game document needs fields "n" and "v"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GameFormatError(f'"n" must be a positive integer, got {n!r}')
    if not isinstance(doc["v"], dict):
        raise GameFormatError('"v" must map coalition keys to rationals')
    values = [Fraction(0)] * (1 << n)
    seen = set()
    for key, raw in doc["v"].items():
        s = parse_coalition_key(key, n)
        if s in seen:
            raise GameFormatError(f"duplicate coalition key {key!r}")
        seen.add(s)
        try:
            x = parse_rational(raw)
        except GameFormatError as exc:
            raise GameFormatError(f"key {key!r}: {exc}") from None
        if s == 0 and x != 0:
            raise GameFormatError("the empty coalition must have value 0")
        values[s] = x
    return SetFunction(n, tuple(values))


def load_game(path) -> SetFunction:
    with open(path) as fh:
        return loads_game(fh.read())
