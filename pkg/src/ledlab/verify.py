"""Desk-scale verification reports for the two counterexample posets.

The full searches (28 elements at w=3, 912 at w=100) are far out of reach, so
each theorem is split into the checks that actually carry it: critical-pair
sets, the exhibited far pair, constrained maxima over the heavy elements, and
the closing gap arithmetic.
"""

import dataclasses

from .families import (
    antichain,
    b4_doubles_pair,
    b4_star,
    b4_star_weighted,
    boolean_lattice,
    counterexample_skeleton,
    p_star,
    red_core,
)
from .linext import brute_force_led, max_reversals_constrained, weighted_distance
from .poset import critical_pairs

B4_DOUBLES = ("12", "13", "14", "23", "24", "34")


def mapped_criticals(base, expanded, provenance):
    """Critical pairs an expansion must carry: (u, v) of the base becomes
    (bottom of u's chain, top of v's chain)."""
    first = {}
    last = {}
    for i, (x, r) in enumerate(provenance):
        if r == 1:
            first[x] = i
        last[x] = i
    return sorted((first[u], last[v]) for u, v in critical_pairs(base))


def _atom_split(labels, atom):
    lo = [i for i, lab in enumerate(labels) if atom not in lab]
    hi = [i for i, lab in enumerate(labels) if atom in lab]
    return [(u, v) for u in lo for v in hi]


def doubles_pattern(atom):
    """Order forced on the six doubles of B4 once (atom, complement) is
    reversed: doubles avoiding the atom sink below those containing it."""
    return _atom_split(B4_DOUBLES, atom)


def red_pattern():
    """Order forced on the nine red elements once (6, 12345) is reversed."""
    labels = red_core().labels
    return _atom_split(labels, "6")


@dataclasses.dataclass(frozen=True)
class B4StarReport:
    crit_ok: bool
    pair_distance: int
    exhibited: int
    constrained_max: int
    bound: int
    w: int = 3

    @property
    def pair_ok(self):
        return self.pair_distance == self.exhibited

    @property
    def constrained_ok(self):
        return self.constrained_max <= 14

    @property
    def gap_ok(self):
        return self.exhibited > self.bound

    @property
    def all_ok(self):
        return self.crit_ok and self.pair_ok and self.constrained_ok and self.gap_ok


def b4star_report(w=3, threads=None):
    b4 = boolean_lattice(4)
    expanded, prov = b4_star(w)
    want = [(1 << (i - 1), 15 ^ (1 << (i - 1))) for i in range(1, 5)]
    crit_ok = sorted(critical_pairs(b4)) == sorted(want) and sorted(
        critical_pairs(expanded)
    ) == mapped_criticals(b4, expanded, prov)

    wp = b4_star_weighted(w)
    l1, l2 = b4_doubles_pair()
    pair_distance = weighted_distance(wp, l1, l2)
    exhibited = 15 * w * w + 14 * w + 13

    doubles = antichain(6, B4_DOUBLES)
    constrained_max = max(
        max_reversals_constrained(
            doubles, doubles_pattern("1"), forced2=doubles_pattern(str(j)), threads=threads
        )
        for j in "1234"
    )
    bound = 14 * w * w + 16 * w + 14
    return B4StarReport(crit_ok, pair_distance, exhibited, constrained_max, bound, w)


@dataclasses.dataclass(frozen=True)
class PStarReport:
    crit_ok: bool
    red_led: int
    constrained_max: int
    w: int = 100

    @property
    def red_led_ok(self):
        return self.red_led == 30

    @property
    def constrained_ok(self):
        return self.constrained_max <= 29

    @property
    def lhs(self):
        return self.red_led * self.w * self.w

    @property
    def rhs(self):
        return 29 * self.w * self.w + 54 * self.w + 1441

    @property
    def gap_ok(self):
        return self.lhs > self.rhs

    @property
    def all_ok(self):
        return self.crit_ok and self.red_led_ok and self.constrained_ok and self.gap_ok


def pstar_report(w=100, crit_w=3, threads=None):
    skeleton = counterexample_skeleton()
    atoms = {lab: i for i, lab in enumerate(skeleton.labels) if len(lab) == 1}
    coatoms = {lab: i for i, lab in enumerate(skeleton.labels) if len(lab) == 5}
    want = sorted(
        (atoms[str(i)], coatoms["".join(str(j) for j in range(1, 7) if j != i)])
        for i in range(1, 7)
    )
    expanded, prov = p_star(crit_w)
    crit_ok = sorted(critical_pairs(skeleton)) == want and sorted(
        critical_pairs(expanded)
    ) == mapped_criticals(skeleton, expanded, prov)

    reds = red_core()
    red_led, _ = brute_force_led(reds, threads=threads)
    constrained_max = max_reversals_constrained(reds, red_pattern(), threads=threads)
    return PStarReport(crit_ok, red_led, constrained_max, w)
