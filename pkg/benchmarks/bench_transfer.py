"""Compare the compiled and pure-Python bracket transfer kernels.

    python benchmarks/bench_transfer.py [--repeat N]

Each case is a cable of a catalog companion, which is where satellite
computations spend their time.  Both kernels must return the same bracket.
"""

import argparse
import statistics
import sys
import time

from lassoknots import braid
from lassoknots.braid import BraidWord, bracket_closure, framed_cable

CASES = [
    ("3_1 2-cable", BraidWord(2, (-1, -1, -1)), 2),
    ("4_1 2-cable", BraidWord(3, (1, -2, 1, -2)), 2),
    ("3_1 3-cable", BraidWord(2, (-1, -1, -1)), 3),
    ("5_1 3-cable", BraidWord(2, (-1,) * 5), 3),
    ("8_19 2-cable", BraidWord(3, (1, 2) * 4), 2),
]


def timed(beta, kernel, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        value = bracket_closure(beta, "sphere", kernel=kernel)
        times.append(time.perf_counter() - start)
    return value, statistics.median(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if braid.KERNEL != "cython":
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'case':<14} {'strands':>7} {'letters':>7} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, beta, k in CASES:
        word = framed_cable(beta, k)
        if len(word.letters) > braid.NATIVE_MAX_LETTERS:
            print(f"{name:<14} skipped: {len(word.letters)} letters exceed the native bound")
            continue
        py_value, py_t = timed(word, "python", args.repeat)
        cy_value, cy_t = timed(word, "cython", args.repeat)
        if py_value != cy_value:
            print(f"{name}: kernels disagree", file=sys.stderr)
            return 2
        print(f"{name:<14} {word.strands:>7} {len(word.letters):>7} {py_t * 1e3:>10.1f} {cy_t * 1e3:>10.1f}"
              f" {py_t / cy_t:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
