#!/usr/bin/env python3
"""Decomposed checks behind the two weighted non-reversing candidates.

Full exhaustive confirmation over the expanded posets is out of reach, so
this runs the component facts: critical pair images, the exhibited pair
value, the constrained reversal maxima, and the resulting gap inequalities.
"""

import argparse
import time

from ledlab.verify import b4star_report, pstar_report


def show(name, report, fields):
    for f in fields:
        print(f"{name} {f}={getattr(report, f)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    b = b4star_report(threads=args.threads)
    show(
        "b4star",
        b,
        (
            "w",
            "crit_ok",
            "pair_distance",
            "exhibited",
            "pair_ok",
            "constrained_max",
            "constrained_ok",
            "bound",
            "gap_ok",
            "all_ok",
        ),
    )
    print(f"b4star seconds={time.perf_counter() - t0:.2f}")

    t0 = time.perf_counter()
    p = pstar_report(threads=args.threads)
    show(
        "pstar",
        p,
        (
            "w",
            "crit_ok",
            "red_led",
            "red_led_ok",
            "constrained_max",
            "constrained_ok",
            "lhs",
            "rhs",
            "gap_ok",
            "all_ok",
        ),
    )
    print(f"pstar seconds={time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
