"""Compare the compiled and pure-Python free-group kernels.

Run with ``python3 benchmarks/bench_kernels.py``. The kernel section times
the two modules side by side on the same inputs; the end-to-end section runs
the mapping class oracle on large monodromy words in a subprocess for each
backend (the backend is fixed at import time).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from palf_forge import _freegroup_py as py

try:
    from palf_forge import _freegroup_cy as cy
except ImportError:
    cy = None


def random_word(rng, rank, length):
    return tuple(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length))


def random_images(rng, rank, length):
    return tuple(random_word(rng, rank, length) for _ in range(rank))


def kernel_table(repeat):
    rng = random.Random(7)
    rank = 40
    word = random_word(rng, rank, 4000)
    imgs = random_images(rng, rank, 30)
    other = random_images(rng, rank, 30)
    cases = [
        ("reduce_word  (len 4000)", lambda m: m.reduce_word(word)),
        ("apply        (len 4000)", lambda m: m.apply(imgs, word[:400])),
        ("compose      (rank 40)", lambda m: m.compose(imgs, other)),
    ]
    rows = []
    for name, fn in cases:
        if cy is not None and fn(py) != fn(cy):
            raise SystemExit(f"backends disagree on {name}")
        t_py = min(timeit.repeat(lambda: fn(py), number=repeat, repeat=3)) / repeat
        t_cy = min(timeit.repeat(lambda: fn(cy), number=repeat, repeat=3)) / repeat if cy else None
        rows.append((name, t_py, t_cy))
    return rows


_E2E = """
import time
from math import gcd
from palf_forge import filling as fl, mcgcheck as mc, tuples as tp, freegroup as fg
t = time.perf_counter()
for p in range({lo}, {hi}):
    for q in range(1, p):
        if gcd(p, q) != 1:
            continue
        for n in tp.enumerate_fillings(p, q):
            mc.word_image(fl.monodromy(fl.lisca_filling(p, q, n)))
print(fg.BACKEND, time.perf_counter() - t)
"""


def end_to_end(lo, hi):
    out = {}
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("PALF_FORGE_PURE", None)
        if pure:
            env["PALF_FORGE_PURE"] = "1"
        res = subprocess.run([sys.executable, "-c", _E2E.format(lo=lo, hi=hi)],
                             env=env, capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--max-p", type=int, default=30)
    args = ap.parse_args()
    print(f"{'kernel':26s} {'python':>12s} {'cython':>12s} {'speedup':>8s}")
    for name, t_py, t_cy in kernel_table(args.repeat):
        if t_cy:
            print(f"{name:26s} {t_py * 1e6:10.1f}us {t_cy * 1e6:10.1f}us {t_py / t_cy:7.1f}x")
        else:
            print(f"{name:26s} {t_py * 1e6:10.1f}us {'n/a':>12s}")
    e2e = end_to_end(2, args.max_p + 1)
    print(f"\nword images of every filling with p <= {args.max_p}:")
    for backend, secs in sorted(e2e.items()):
        print(f"  {backend:8s} {secs:.3f}s")
    if "cython" in e2e:
        print(f"  speedup  {e2e['python'] / e2e['cython']:.1f}x")


if __name__ == "__main__":
    main()
