#!/usr/bin/env python3
"""Table of VM ranks for the free nilpotent group, with the hypothesis status of each point.

    python scripts/rank_table.py --max-gens 4 --max-n 3 --max-class 8
"""

import argparse
import csv
import sys

from baerinv.multipliers import VParams, card_A, card_A_cap_C, check_hypotheses, v_multiplier_rank


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-gens", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=2)
    ap.add_argument("--max-class", type=int, default=6)
    ap.add_argument("--all", action="store_true", help="also list points outside the theorem")
    args = ap.parse_args()

    w = csv.writer(sys.stdout, delimiter="\t", lineterminator="\n")
    w.writerow(["m", "n", "c1", "c2", "case", "|A|", "|A&C|", "rank"])
    for m in range(1, args.max_gens + 1):
        for n in range(1, args.max_n + 1):
            for c1 in range(1, args.max_class + 1):
                for c2 in range(1, c1 + 1):
                    p = VParams(m, n, c1, c2)
                    rep = check_hypotheses(p)
                    if not rep.ok and not args.all:
                        continue
                    rank = v_multiplier_rank(p) if rep.ok else "-"
                    w.writerow([m, n, c1, c2, rep.case, card_A(p), card_A_cap_C(p), rank])


if __name__ == "__main__":
    main()
