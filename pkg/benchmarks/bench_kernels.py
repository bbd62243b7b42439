"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--end-to-end]

Inputs are seeded and sized like the fourth elimination step of a 4-player
2-additive core; results from both backends are checked for equality.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from kadditive import _pykernels

try:
    from kadditive import _ckernels
except ImportError:
    _ckernels = None


def workloads(rng):
    vals = [rng.randint(-1000, 1000) for _ in range(1 << 12)]
    pos = [tuple([rng.randint(-9, 9)] + [rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(10)])
           for _ in range(120)]
    neg = [tuple([rng.randint(-9, 9)] + [-rng.randint(1, 9)] + [rng.randint(-9, 9) for _ in range(10)])
           for _ in range(120)]
    zs = [rng.getrandbits(40) | rng.getrandbits(40) for _ in range(300)]
    plus, minus = list(range(0, 150)), list(range(150, 300))
    return {
        "subset_sum (n=12)": ("subset_sum", (vals, 12, -1)),
        "combine_pairs (120 x 120 rows)": ("combine_pairs", (pos, neg, 1)),
        "adjacent_pairs (300 rays)": ("adjacent_pairs", (zs, plus, minus, 18)),
    }


def _same(a, b):
    return [tuple(x) if isinstance(x, (list, tuple)) else x for x in a] == \
        [tuple(x) if isinstance(x, (list, tuple)) else x for x in b]


END_TO_END = """
import time
from kadditive import kernels
from kadditive.allocation import uniform_sharing
from kadditive.cores import verify_theorem1, verify_theorem4
from kadditive.games import random_game
t0 = time.perf_counter()
for seed in range(5):
    verify_theorem1(random_game(4, seed), 2, uniform_sharing(4))
    verify_theorem4(random_game(3, seed), 2)
print(kernels.BACKEND, (time.perf_counter() - t0) * 1e3)
"""


def end_to_end():
    """Five n=4 projections plus five selector sweeps, once per backend."""
    out = {}
    for pure in (True, False):
        env = dict(os.environ)
        env.pop("KADDITIVE_PURE_PYTHON", None)
        if pure:
            env["KADDITIVE_PURE_PYTHON"] = "1"
        res = subprocess.run([sys.executable, "-c", END_TO_END], env=env, capture_output=True, text=True, check=True)
        backend, ms = res.stdout.split()
        out[backend] = float(ms)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--end-to-end", action="store_true", help="also time whole theorem checks per backend")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)
    print(f"{'kernel':34} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, (name, call_args) in workloads(random.Random(args.seed)).items():
        py = getattr(_pykernels, name)
        t_py = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{label:34} {t_py:10.2f} {'-':>10} {'-':>8}")
            continue
        c = getattr(_ckernels, name)
        assert _same(c(*call_args), py(*call_args)), f"{name}: backends disagree"
        t_c = min(timeit.repeat(lambda: c(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:34} {t_py:10.2f} {t_c:10.2f} {t_py / t_c:7.1f}x")
    if args.end_to_end:
        t = end_to_end()
        t_c = t.get("cython")
        print(f"{'theorem checks, end to end':34} {t['python']:10.0f} "
              + (f"{t_c:10.0f} {t['python'] / t_c:7.1f}x" if t_c else f"{'-':>10} {'-':>8}"))


if __name__ == "__main__":
    main()
