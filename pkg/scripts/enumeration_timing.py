#!/usr/bin/env python3
"""Time Hall-basis generation per weight and compare against the Witt count.

    python scripts/enumeration_timing.py --gens 3 --max-weight 12
"""

import argparse
import time

from baerinv.hall import basis_of_weight, witt


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gens", type=int, default=3)
    ap.add_argument("--max-weight", type=int, default=12)
    args = ap.parse_args()

    print("weight\tcount\twitt\tseconds")
    total = 0.0
    for w in range(1, args.max_weight + 1):
        t0 = time.perf_counter()
        count = len(basis_of_weight(args.gens, w))
        dt = time.perf_counter() - t0
        total += dt
        flag = "" if count == witt(w, args.gens) else "  MISMATCH"
        print(f"{w}\t{count}\t{witt(w, args.gens)}\t{dt:.3f}{flag}")
    print(f"total\t\t\t{total:.3f}")


if __name__ == "__main__":
    main()
