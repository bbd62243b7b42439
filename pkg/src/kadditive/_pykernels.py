"""Pure-Python implementations of the integer kernels.

These are the reference versions; ``_ckernels`` mirrors them on machine
integers and raises ``OverflowError`` when a value leaves int64, in which
case the dispatcher in :mod:`kadditive.kernels` reruns the call here.
"""

from math import gcd


def subset_sum(values, n, sign):
    """In-place style subset-sum transform over the 2**n bitmask lattice.

    ``sign=+1`` gives the zeta transform, ``sign=-1`` the Mobius transform.
    """
    a = list(values)
    size = 1 << n
    for i in range(n):
        bit = 1 << i
        for s in range(size):
            if s & bit:
                a[s] += sign * a[s ^ bit]
    return a


def combine_pairs(pos, neg, col):
    """Fourier-Motzkin combinations of every (positive, negative) row pair.

    Rows are integer tuples ``(a_1, ..., a_d, b)`` read as ``a.x >= b``.
    The returned rows have a zero in ``col`` and are divided by their gcd.
    """
    out = []
    for p in pos:
        cp = p[col]
        for q in neg:
            cq = -q[col]
            row = [cq * a + cp * b for a, b in zip(p, q)]
            g = gcd(*row)
            if g > 1:
                row = [x // g for x in row]
            out.append(tuple(row))
    return out


def adjacent_pairs(zero_sets, plus, minus, min_common):
    """Combinatorial adjacency test of the double description method.

    ``zero_sets[r]`` is a bitmask of constraints tight at ray ``r``.  A pair
    (i, j) is adjacent when their common zero set has at least ``min_common``
    members and no third ray is tight on all of it.
    """
    pairs = []
    nrays = len(zero_sets)
    for i in plus:
        zi = zero_sets[i]
        for j in minus:
            common = zi & zero_sets[j]
            if bin(common).count("1") < min_common:
                continue
            for r in range(nrays):
                if r != i and r != j and zero_sets[r] & common == common:
                    break
            else:
                pairs.append((i, j))
    return pairs
