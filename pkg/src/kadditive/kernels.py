"""Kernel dispatch: compiled extension when available, Python otherwise.

Set ``KADDITIVE_PURE_PYTHON=1`` to force the fallback.  The compiled kernels
work on int64 and signal overflow; those calls are transparently rerun on
Python integers, so results are exact either way.
"""

import os

from . import _pykernels

BACKEND = "python"
_ck = None

if not os.environ.get("KADDITIVE_PURE_PYTHON"):
    try:
        from . import _ckernels as _ck
        BACKEND = "cython"
    except ImportError:  # extension not built
        _ck = None


def subset_sum(values, n, sign):
    if _ck is not None:
        try:
            return _ck.subset_sum(values, n, sign)
        except OverflowError:
            pass
    return _pykernels.subset_sum(values, n, sign)


def combine_pairs(pos, neg, col):
    if _ck is not None:
        try:
            return _ck.combine_pairs(pos, neg, col)
        except OverflowError:
            pass
    return _pykernels.combine_pairs(pos, neg, col)


def adjacent_pairs(zero_sets, plus, minus, min_common):
    if _ck is not None:
        return _ck.adjacent_pairs(zero_sets, plus, minus, min_common)
    return _pykernels.adjacent_pairs(zero_sets, plus, minus, min_common)
