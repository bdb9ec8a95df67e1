"""Compare the compiled and pure-Python q-shuffle kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--quick]

Every workload is run through both ``accumulate`` implementations; the
outputs must agree exactly before a timing is reported.
"""

import argparse
import random
import sys
import time

from qshuffle import _pykernel
from qshuffle.relations import CATALOG, parameter_tuples

try:
    from qshuffle import _kernel
except ImportError:
    sys.exit("compiled kernel not built; run: python3 setup.py build_ext --inplace")


def word_pair(rng, r, s):
    return ((1 << r) | rng.getrandbits(r), (1 << s) | rng.getrandbits(s), 0, 1)


def family_terms(prefix, bound):
    terms = []
    for fid, fam in CATALOG.items():
        if not fid.startswith(prefix) or fam.kind == "series":
            continue
        for params in parameter_tuples(fid, bound):
            lhs, rhs = fam.build(params)
            terms += lhs.kernel_terms() + (-rhs).kernel_terms()
    return terms


def workloads(quick):
    rng = random.Random(1)
    sizes = [(4, 4), (6, 6), (8, 8), (10, 10)] if quick else [(4, 4), (6, 6), (8, 8), (10, 10), (11, 11), (12, 12)]
    for r, s in sizes:
        yield f"word x word {r}+{s}", [word_pair(rng, r, s)]
    yield "200 random pairs <= 6+6", [word_pair(rng, rng.randint(0, 6), rng.randint(0, 6)) for _ in range(200)]
    yield "letter commutators n<=4", family_terms("P4.", 4)
    yield "alternating relations i+j<=4", family_terms("A.", 4)
    yield "doubly alternating i+j<=" + ("2" if quick else "3"), family_terms("B.", 2 if quick else 3)


def best_of(fn, terms, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(terms)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args(argv)

    print(f"{'workload':<34} {'terms':>6} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, terms in workloads(args.quick):
        tp, out_p = best_of(_pykernel.accumulate, terms, args.repeat)
        tc, out_c = best_of(_kernel.accumulate, terms, args.repeat)
        if out_p != out_c:
            sys.exit(f"kernels disagree on {name}")
        print(f"{name:<34} {len(terms):>6} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
