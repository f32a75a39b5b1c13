#!/usr/bin/env python3
"""Exact led(B_n) for small n against the guessed closed form.

The guess undershoots badly; a variant with the linear term halved lines up
with every exact value we can reach, so both are printed for the record.
"""

import argparse
import time

from ledlab.boolexp import boolean_led_report


def adjusted(n):
    # same leading term, half the linear coefficient
    return (1 << (2 * n - 2)) - (n + 1) * (1 << (n - 2)) if n >= 2 else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4, choices=(1, 2, 3, 4))
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        r = boolean_led_report(n)
        dt = time.perf_counter() - t0
        for line in r.lines():
            print(line)
        print(f"n={n} adjusted={adjusted(n)} adjusted_matches={adjusted(n) == r.led}")
        print(f"n={n} seconds={dt:.2f}")


if __name__ == "__main__":
    main()
