import random

import pytest

from kadditive import _pykernels, kernels

try:
    from kadditive import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _rows(rng, count, width, lo=-9, hi=9):
    return [tuple(rng.randint(lo, hi) for _ in range(width)) for _ in range(count)]


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
    assert (kernels.BACKEND == "cython") == (kernels._ck is not None)


def test_subset_sum_round_trip():
    rng = random.Random(0)
    for n in range(0, 7):
        vals = [rng.randint(-50, 50) for _ in range(1 << n)]
        assert kernels.subset_sum(kernels.subset_sum(vals, n, -1), n, 1) == vals


def test_combine_pairs_eliminates_column():
    rng = random.Random(1)
    pos = [r[:2] + (rng.randint(1, 5),) + r[3:] for r in _rows(rng, 6, 5)]
    neg = [r[:2] + (-rng.randint(1, 5),) + r[3:] for r in _rows(rng, 6, 5)]
    out = kernels.combine_pairs(pos, neg, 2)
    assert len(out) == 36 and all(r[2] == 0 for r in out)


@needs_c
def test_compiled_kernels_match_python():
    rng = random.Random(2)
    for n in range(0, 7):
        vals = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(1 << n)]
        for sign in (1, -1):
            assert list(_ckernels.subset_sum(vals, n, sign)) == _pykernels.subset_sum(vals, n, sign)
    for t in range(30):
        pos = [r[:1] + (rng.randint(1, 7),) + r[2:] for r in _rows(rng, 5, 6)]
        neg = [r[:1] + (-rng.randint(1, 7),) + r[2:] for r in _rows(rng, 4, 6)]
        assert [tuple(r) for r in _ckernels.combine_pairs(pos, neg, 1)] == _pykernels.combine_pairs(pos, neg, 1)
    for t in range(30):
        zs = [rng.getrandbits(12) for _ in range(10)]
        plus, minus = [0, 1, 2, 3], [5, 6, 7, 8, 9]
        for mc in (1, 3, 5):
            assert [tuple(p) for p in _ckernels.adjacent_pairs(zs, plus, minus, mc)] == \
                _pykernels.adjacent_pairs(zs, plus, minus, mc)


def test_big_integers_stay_exact():
    big = 3 ** 80
    vals = [0, big, -big, big * 7]
    assert kernels.subset_sum(vals, 2, -1) == _pykernels.subset_sum(vals, 2, -1)
    pos, neg = [(big, 1, 5)], [(big + 1, -1, 2)]
    assert kernels.combine_pairs(pos, neg, 1) == _pykernels.combine_pairs(pos, neg, 1)
