#!/usr/bin/env python3
"""Sweep every bipartite graph up to given side sizes through the gadget
reduction and report the diameter-vs-threshold verdicts.

Sides beyond 2+2 grow fast: 3+3 already means 512 graphs whose gadgets need
the orientation search, so the defaults stay at the exhaustively checkable
range."""

import argparse
import itertools
import sys
import time

from ledlab.gadget import BipartiteGraph, verify_reduction_micro


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-a", type=int, default=2)
    ap.add_argument("--max-b", type=int, default=2)
    ap.add_argument("--k", type=int, default=1)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()

    start = time.time()
    total = 0
    inconsistent = 0
    for a in range(1, args.max_a + 1):
        for b in range(1, args.max_b + 1):
            cells = [(i, j) for i in range(a) for j in range(b)]
            for r in range(len(cells) + 1):
                for picks in itertools.combinations(cells, r):
                    g = BipartiteGraph(a, b, frozenset(picks))
                    rep = verify_reduction_micro(g, k=args.k, threads=args.threads)
                    total += 1
                    if not rep.consistent:
                        inconsistent += 1
                    edges = ",".join(f"{i}-{j}" for i, j in sorted(picks)) or "none"
                    print(
                        f"a={a} b={b} edges={edges} d={rep.d} thr={rep.threshold}"
                        f" led={rep.led} method={rep.method} bis={rep.has_bis}"
                        f" consistent={rep.consistent}"
                    )
    print(f"graphs={total} inconsistent={inconsistent} seconds={time.time() - start:.1f}")
    return 1 if inconsistent else 0


if __name__ == "__main__":
    sys.exit(main())
