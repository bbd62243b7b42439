import json
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kadditive.errors import GameFormatError
from kadditive.games import additive_game, pair_game, random_game, unanimity_game
from kadditive.setfunctions import (
    SetFunction,
    coalition,
    coalition_key,
    is_additive,
    is_convex,
    is_k_additive,
    is_monotone,
    loads_game,
    members,
    mobius_direct,
    mobius_transform,
    parse_coalition_key,
    subsets,
    zeta_direct,
    zeta_transform,
)


def games(max_n=5):
    rationals = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(rationals, min_size=(1 << n) - 1, max_size=(1 << n) - 1).map(
            lambda vals: SetFunction(n, (Fraction(0), *vals))))


def test_coalition_encoding():
    assert coalition([1, 3]) == 0b101
    assert members(0b101) == (1, 3)
    assert coalition_key(0b101) == "1,3"
    assert parse_coalition_key("1, 3", 3) == 0b101
    assert list(subsets(0b101)) == [0, 1, 4, 5]
    for bad in ("4", "3,1", "1,1", "a"):
        with pytest.raises(GameFormatError):
            parse_coalition_key(bad, 3)


def test_empty_coalition_must_be_zero():
    with pytest.raises(ValueError):
        SetFunction(1, (Fraction(1), Fraction(0)))


def test_mobius_of_additive():
    v = SetFunction.from_function(3, len)
    m = mobius_transform(v)
    assert [m[1 << i] for i in range(3)] == [1, 1, 1]
    assert all(m[s] == 0 for s in range(8) if bin(s).count("1") >= 2)


def test_mobius_of_unanimity():
    m = mobius_transform(unanimity_game(3, (1, 2)))
    assert m.nonzero() == [(0b011, 1)]


def test_mobius_matches_double_sum_n5():
    v = random_game(5, 7)
    m = mobius_transform(v)
    assert m.values == mobius_direct(v).values
    assert zeta_transform(m).values == v.values


def test_zeta_examples():
    m = SetFunction.from_mapping(3, {(1, 2): 1}, "mobius")
    assert zeta_transform(m).values == unanimity_game(3, (1, 2)).values
    zero = SetFunction(3, (Fraction(0),) * 8)
    assert zeta_transform(zero).values == zero.values


def test_round_trip_100_games():
    for seed in range(100):
        v = random_game(1 + seed % 6, seed)
        assert zeta_transform(mobius_transform(v)).values == v.values
        assert mobius_transform(zeta_transform(v)).values == v.values


@given(games())
def test_fast_transforms_match_direct(v):
    assert mobius_transform(v).values == mobius_direct(v).values
    assert zeta_transform(v).values == zeta_direct(v).values


@given(games(4), games(4), st.fractions(-5, 5, max_denominator=5), st.fractions(-5, 5, max_denominator=5))
def test_mobius_linearity(v, w, a, b):
    if v.n != w.n:
        return
    lhs = mobius_transform(v * a + w * b)
    rhs = mobius_transform(v) * a + mobius_transform(w) * b
    assert lhs.values == rhs.values


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mobius_of_every_unanimity_game_is_indicator(n):
    for t in range(1, 1 << n):
        m = mobius_transform(unanimity_game(n, members(t)))
        assert m.nonzero() == [(t, 1)]


def test_is_k_additive_examples():
    m = mobius_transform(additive_game([1, 2, 3]))
    assert is_k_additive(m, 1) and is_k_additive(m, 1, exact=True)
    assert not is_k_additive(mobius_transform(unanimity_game(3, (1, 2, 3))), 2)
    phi = SetFunction.from_mapping(3, {(1,): Fraction(2, 3), (2,): Fraction(2, 3), (3,): Fraction(2, 3),
                                       (1, 2): Fraction(-1, 3), (1, 3): Fraction(-1, 3), (2, 3): Fraction(-1, 3)})
    assert is_k_additive(phi, 2) and is_k_additive(phi, 2, exact=True)
    assert not is_k_additive(phi, 3, exact=True)
    with pytest.raises(ValueError):
        is_k_additive(phi, 0)
    with pytest.raises(ValueError):
        is_k_additive(phi, 4)


def test_is_monotone_examples():
    assert is_monotone(unanimity_game(3, (1, 2)))
    assert not is_monotone(SetFunction.from_mapping(2, {(1,): 1}))
    assert is_monotone(pair_game(3))


def _monotone_by_definition(v):
    return all(v[s] <= v[t] for t in range(1 << v.n) for s in subsets(t))


@given(games(4))
def test_is_monotone_matches_pairwise_definition(v):
    assert is_monotone(v) == _monotone_by_definition(v)


def test_is_additive_examples():
    assert is_additive(SetFunction.from_function(3, len))
    assert not is_additive(unanimity_game(3, (1, 2)))
    rng = random.Random(3)
    m = SetFunction.from_mapping(4, {(i,): Fraction(rng.randint(-5, 5), 3) for i in range(1, 5)}, "mobius")
    assert is_additive(zeta_transform(m))


@given(games(4))
def test_additive_iff_one_additive(v):
    assert is_additive(v) == is_k_additive(mobius_transform(v), 1)


def test_random_game_classes():
    for seed in range(10):
        assert is_monotone(random_game(4, seed, "monotone"))
        assert is_convex(random_game(4, seed, "convex"))
    assert random_game(3, 5).values == random_game(3, 5).values


def test_convexity_predicate():
    assert is_convex(SetFunction.from_function(3, lambda s: len(s) ** 2))
    assert not is_convex(pair_game(3))


def test_game_document_round_trip():
    for seed in range(20):
        v = random_game(3, seed)
        assert loads_game(v.dumps()).values == v.values


def test_game_document_defaults_and_errors():
    v = loads_game('{"n": 2, "v": {"1,2": "3/4", "1": 1}}')
    assert v.values == (0, 1, 0, Fraction(3, 4))
    assert loads_game('{"n": 1, "v": {"": "0"}}').values == (0, 0)
    bad = [
        ('{"n": 2, "v": {"1,2": "3/x"}}', "1,2"),
        ('{"n": 2, "v": {"3": "1"}}', "out of range"),
        ('{"n": 2, "v": {"": "1"}}', "empty coalition"),
        ('{"n": 2}', '"n" and "v"'),
        ('{"n": 2,\n "v": {', "line 2"),
        ('{"n": 2, "v": {"1,2": 1, "1,2": 2}}', "duplicate"),
    ]
    for text, fragment in bad:
        with pytest.raises(GameFormatError, match=fragment):
            loads_game(text)


def test_document_omits_zeros():
    doc = json.loads(unanimity_game(3, (1, 2)).dumps())
    assert doc == {"n": 3, "v": {"1,2": "1", "1,2,3": "1"}}
