import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ledlab.errors import WidthExceeded
from ledlab.families import (
    antichain,
    boolean_lattice,
    chain,
    m_poset,
    n_poset,
    random_width3,
    two_plus_two,
)
from ledlab.linext import brute_force_led
from ledlab.poset import from_cover_relations, width
from ledlab.width3 import Width3Solver, chain_cover, dp_led_width3, enumerate_downsets

seeds = st.integers(0, 10**6)


def test_fixture_values():
    assert dp_led_width3(chain(6)) == 0
    assert dp_led_width3(antichain(3)) == 3
    assert dp_led_width3(n_poset()) == 3
    assert dp_led_width3(two_plus_two()) == 4
    assert dp_led_width3(m_poset()) == brute_force_led(m_poset())[0]
    assert dp_led_width3(boolean_lattice(3)) == 8


def test_width_guard():
    with pytest.raises(WidthExceeded):
        dp_led_width3(antichain(4))
    with pytest.raises(WidthExceeded):
        dp_led_width3(boolean_lattice(4))


def test_removed_top_with_later_successor():
    # three chains {a}, {b}, {c1 > c2} plus a < c2: the removed top of one
    # chain can still have a successor inside the remaining downset
    p = from_cover_relations(4, [(3, 2), (0, 3)], labels=("a", "b", "c1", "c2"))
    assert width(p) <= 3
    assert dp_led_width3(p) == brute_force_led(p)[0]


@given(st.integers(1, 9), seeds)
def test_matches_brute_force(n, seed):
    p = random_width3(n, seed)
    assert dp_led_width3(p) == brute_force_led(p)[0]


@settings(max_examples=25)
@given(st.integers(4, 10), seeds)
def test_matches_brute_force_larger(n, seed):
    p = random_width3(n, seed)
    assert dp_led_width3(p) == brute_force_led(p)[0]


@given(st.integers(1, 8), seeds)
def test_chain_cover_is_valid(n, seed):
    p = random_width3(n, seed)
    chains = chain_cover(p)
    assert len(chains) == 3
    seen = set()
    for c in chains:
        # bottom element first
        for a, b in zip(c, c[1:]):
            assert p.lt(a, b)
        seen.update(c)
    assert seen == set(range(n))


@given(st.integers(1, 8), seeds)
def test_enumerate_downsets_closed(n, seed):
    p = random_width3(n, seed)
    chains = chain_cover(p)
    downs = enumerate_downsets(p, chains)
    assert len(set(downs)) == len(downs)
    for t in downs:
        mask = 0
        for c, cnt in enumerate(t):
            for x in chains[c][:cnt]:
                mask |= 1 << x
        for x in range(n):
            if mask & (1 << x):
                assert (p.below[x] & ~mask) == 0
    # counts: chain n+1 prefixes, antichain 2^n subsets
    assert len(enumerate_downsets(chain(4))) == 5
    assert len(enumerate_downsets(antichain(3))) == 8


@given(st.integers(2, 7), seeds)
def test_downset_values_are_subposet_diameters(n, seed):
    p = random_width3(n, seed)
    solver = Width3Solver(p, retain=True)
    solver.solve()
    chains = solver.chains
    for t in solver.downsets:
        members = sorted(x for c, cnt in enumerate(t) for x in chains[c][:cnt])
        sub = p.subposet(members)
        assert solver.downset_value(t) == brute_force_led(sub)[0]
