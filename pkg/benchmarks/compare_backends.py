#!/usr/bin/env python3
"""Time the compiled scan kernel against the pure-Python fallback.

Both kernels must produce identical scan tuples; the script asserts
that while it measures.  The default cases cover every n=7 cyclomatic
class; --large adds the n=8 tricyclic scan, which takes about a minute
on the pure kernel.
"""

import argparse
import time

from zagreb import _corepy


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--large", action="store_true", help="add the n=8, m=10 case")
    args = ap.parse_args()
    try:
        from zagreb import _corecy
    except ImportError:
        print("compiled kernel not built; nothing to compare")
        return
    cases = [(7, 6), (7, 7), (7, 8), (7, 9)]
    if args.large:
        cases.append((8, 10))
    print(f"{'n':>3} {'m':>3} {'visited':>10} {'pure s':>9} {'compiled s':>11} {'speedup':>8}")
    for n, m in cases:
        t0 = time.perf_counter()
        a = _corepy.scan_extremal(n, m, "em1")
        t1 = time.perf_counter()
        b = _corecy.scan_extremal(n, m, "em1")
        t2 = time.perf_counter()
        assert a == b, f"kernel mismatch at n={n} m={m}"
        pure, comp = t1 - t0, t2 - t1
        print(f"{n:>3} {m:>3} {a[0]:>10} {pure:>9.3f} {comp:>11.3f} {pure / comp:>7.1f}x")


if __name__ == "__main__":
    main()
