"""Exhaustive diameter computation for small Boolean lattices.

Brute force over all pairs is hopeless for B_4 (1.68M extensions), but the
coordinate symmetry cuts one side of the pair down to orbit representatives
and a downset DP maximizes over the other side in bulk.  Everything is kept
in flat numpy arrays; element indices equal subset masks throughout.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import SizeExceeded
from .families import boolean_lattice, boolean_lex_pair
from .linext import distance, max_distance_each, order_ideals
from .poset import bit_indices

__all__ = [
    "all_boolean_les",
    "canonical_les",
    "boolean_led",
    "BooleanLedReport",
    "boolean_led_report",
    "conjectured_led",
]

_MAX_N = 4  # B_5 has ~10^17 extensions


def all_boolean_les(n):
    """All linear extensions of B_n as a (count, 2^n) uint8 array of masks.

    Rows are built layer by layer over the downset lattice, so peak memory
    stays within two layers' worth of prefixes.
    """
    if not 1 <= n <= _MAX_N:
        raise SizeExceeded(f"all_boolean_les supports 1 <= n <= {_MAX_N}, got {n}")
    p = boolean_lattice(n)
    size = 1 << n
    masks, transitions = order_ideals(p)
    by_src = [[] for _ in masks]
    for i, x, j in transitions:
        by_src[i].append((x, j))
    pieces = {0: [np.zeros((1, 0), dtype=np.uint8)]}
    for i in range(len(masks)):
        parts = pieces.pop(i, None)
        if not parts:
            continue
        arr = parts[0] if len(parts) == 1 else np.concatenate(parts)
        got = arr.shape[1]
        if got == size:
            return arr
        for x, j in by_src[i]:
            ext = np.empty((arr.shape[0], got + 1), dtype=np.uint8)
            ext[:, :got] = arr
            ext[:, got] = x
            pieces.setdefault(j, []).append(ext)
    raise AssertionError("downset lattice had no full ideal")


def _pack(rows, n):
    # n bits per mask, first element most significant, fits uint64 for n <= 4
    size = 1 << n
    packed = np.zeros(rows.shape[0], dtype=np.uint64)
    for i in range(size):
        packed |= rows[:, i].astype(np.uint64) << np.uint64(n * (size - 1 - i))
    return packed


def _unpack(packed, n):
    size = 1 << n
    out = np.empty((packed.shape[0], size), dtype=np.uint8)
    keep = np.uint64(size - 1)
    for i in range(size):
        out[:, i] = (packed >> np.uint64(n * (size - 1 - i))) & keep
    return out


def canonical_les(les, n):
    """Orbit representatives of extension rows under coordinate permutations.

    Permuting ground-set coordinates is an automorphism of B_n, acts on masks
    pointwise, and preserves pairwise distance, so the diameter only needs one
    row per orbit on the fixed side.
    """
    luts = []
    for perm in permutations(range(n)):
        lut = np.zeros(1 << n, dtype=np.uint8)
        for m in range(1 << n):
            lut[m] = sum(1 << perm[k] for k in bit_indices(m))
        luts.append(lut)
    best = None
    for lut in luts:
        packed = _pack(lut[les], n)
        best = packed if best is None else np.minimum(best, packed)
    return _unpack(np.unique(best), n)


def boolean_led(n):
    """led(B_n) by exhaustive symmetry-reduced search, exact for n <= 4."""
    p = boolean_lattice(n)
    les = all_boolean_les(n)
    reps = canonical_les(les, n)
    del les
    return int(max_distance_each(reps, p).max())


def conjectured_led(n):
    """Closed-form guess for led(B_n); recorded, never asserted."""
    return (1 << (2 * n - 2)) - (n + 1) * (1 << (n - 1))


@dataclass(frozen=True)
class BooleanLedReport:
    """Exact diameter of B_n next to the guessed value and the standard pair."""

    n: int
    led: int
    pair_distance: int
    conjectured: int

    @property
    def pair_is_diametral(self):
        return self.pair_distance == self.led

    @property
    def conjecture_matches(self):
        return self.conjectured == self.led

    def lines(self):
        yield f"n={self.n} led={self.led} pair_distance={self.pair_distance} conjectured={self.conjectured}"
        yield f"n={self.n} pair_is_diametral={self.pair_is_diametral} conjecture_matches={self.conjecture_matches}"


def boolean_led_report(n):
    """Compute led(B_n), the lex/antilex pair distance, and the guess."""
    p = boolean_lattice(n)
    l1, l2 = boolean_lex_pair(n)
    return BooleanLedReport(
        n=n,
        led=boolean_led(n),
        pair_distance=distance(p, l1, l2),
        conjectured=conjectured_led(n),
    )
