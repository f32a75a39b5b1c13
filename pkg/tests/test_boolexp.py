"""Checks for the Boolean-lattice diameter machinery.

Everything here stays at n <= 3 where brute force over all linear extensions
is instant; n = 4 is exercised only through the acceptance suite.
"""

import pytest

from ledlab.boolexp import (
    all_boolean_les,
    boolean_led,
    boolean_led_report,
    canonical_les,
    conjectured_led,
)
from ledlab.errors import SizeExceeded
from ledlab.families import boolean_lattice
from ledlab.linext import enumerate_linear_extensions, max_distance_each, max_distance_from

from oracles import led_slow


def test_all_boolean_les_counts():
    assert all_boolean_les(1).shape == (1, 2)
    assert all_boolean_les(2).shape == (2, 4)
    assert all_boolean_les(3).shape == (48, 8)


def test_all_boolean_les_match_generic_enumeration():
    for n in (1, 2, 3):
        got = {tuple(int(v) for v in row) for row in all_boolean_les(n)}
        want = set(enumerate_linear_extensions(boolean_lattice(n)))
        assert got == want


def test_all_boolean_les_rejects_out_of_range():
    with pytest.raises(SizeExceeded):
        all_boolean_les(5)
    with pytest.raises(SizeExceeded):
        all_boolean_les(0)


def test_canonical_les_are_subset_and_cover_orbits():
    n = 3
    les = all_boolean_les(n)
    reps = canonical_les(les, n)
    all_set = {tuple(int(v) for v in row) for row in les}
    rep_set = {tuple(int(v) for v in row) for row in reps}
    assert rep_set <= all_set
    # orbits under the n! relabelings cannot be larger than n!
    import math

    assert len(reps) >= len(les) // math.factorial(n)
    assert len(reps) < len(les)


def test_max_distance_each_matches_scan():
    n = 3
    p = boolean_lattice(n)
    les = all_boolean_les(n)
    reps = canonical_les(les, n)
    best = max_distance_each(reps, p)
    assert best.shape == (len(reps),)
    for i in range(len(reps)):
        rep = tuple(int(v) for v in reps[i])
        assert best[i] == max_distance_from(p, rep)


def test_max_distance_each_invariant_under_relabeling():
    # the diameter must be reachable from the canonical representatives alone
    n = 3
    p = boolean_lattice(n)
    les = all_boolean_les(n)
    reps = canonical_les(les, n)
    assert int(max_distance_each(reps, p).max()) == led_slow(p)


def test_boolean_led_small():
    assert boolean_led(1) == 0
    assert boolean_led(2) == 1
    assert boolean_led(3) == led_slow(boolean_lattice(3)) == 8


def test_conjectured_values():
    assert [conjectured_led(n) for n in (1, 2, 3, 4)] == [-1, -2, 0, 24]


def test_report_fields():
    rep = boolean_led_report(2)
    assert rep.n == 2
    assert rep.led == 1
    assert rep.pair_distance == 1
    assert rep.conjectured == -2
    assert rep.pair_is_diametral
    assert not rep.conjecture_matches
    lines = list(rep.lines())
    assert len(lines) == 2 and all(line.startswith("n=2 ") for line in lines)
