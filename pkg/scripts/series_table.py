#!/usr/bin/env python3
"""Print partition-function coefficients for a grid of ranks.

Evaluates the localized sum and the closed form side by side at one seeded
point per rank, so the table doubles as a quick end-to-end sanity check.

    python scripts/series_table.py [--order N] [--seed S]
"""

import argparse

from quotloc import EvalContext, Ranks, rat_str, seeded_point, z_closed, z_localized


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=5)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    grid = [Ranks(1, 0), Ranks(0, 1), Ranks(1, 1), Ranks(2, 1), Ranks(2, 2)]
    for ranks in grid:
        ctx = EvalContext(seeded_point(ranks.variables(), args.seed), args.seed, args.order)
        localized = z_localized(ranks, ctx)
        closed = z_closed(ranks, ctx)
        tag = "ok" if localized == closed else "MISMATCH"
        print(f"ranks ({ranks.r1},{ranks.r2})  [{tag}]")
        for n, c in enumerate(localized.coefficients):
            print(f"  q^{n}: {rat_str(c)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
