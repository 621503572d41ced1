#!/usr/bin/env python3
"""Regenerate the three headline count tables (maps, bipartite maps,
triangulations) up to the sizes used in the acceptance suite."""

import argparse
import sys
import time

from surfcount.bipartite import BipTable
from surfcount.genus import genus_label
from surfcount.maps import MapsCounts
from surfcount.triangulations import TriTable


def show(title, rows, n_max, g2_max):
    print(f"\n{title}")
    genera = [f"g={genus_label(g2)}" for g2 in range(g2_max + 1)]
    header = ["n"] + genera
    table = [[str(n)] + [str(rows(n, g2)) for g2 in range(g2_max + 1)]
             for n in range(1, n_max + 1)]
    widths = [max(len(r[c]) for r in [header] + table) for c in range(len(header))]
    for row in [header] + table:
        print("  ".join(c.rjust(w) for c, w in zip(row, widths)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--g2-max", type=int, default=8, help="doubled genus bound")
    args = ap.parse_args()

    t0 = time.time()
    counts = MapsCounts().fill(args.n_max, args.g2_max)
    show("Rooted maps by edges and genus", counts.value, args.n_max, args.g2_max)

    bip = BipTable().fill(args.n_max, args.g2_max)
    show("Rooted bipartite maps by edges and genus",
         lambda n, g2: bip.count(n, g2) if g2 <= n else 0,
         args.n_max, args.g2_max)

    tri = TriTable().fill(max(1, args.n_max - 1), args.g2_max)
    show("Rooted triangulations by half the face count and genus",
         tri.value, max(1, args.n_max - 1), args.g2_max)

    print(f"\ntotal time: {time.time() - t0:.2f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
