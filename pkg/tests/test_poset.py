import pytest
from hypothesis import given
from hypothesis import strategies as st

from ledlab.errors import CycleDetected
from ledlab.families import (
    antichain,
    boolean_lattice,
    chain,
    m_poset,
    n_poset,
    random_poset,
    random_with_module,
    random_with_twin,
    two_plus_two,
)
from ledlab.poset import (
    critical_pairs,
    decompose,
    find_twins,
    from_cover_relations,
    height,
    is_3layer,
    is_critical_pair,
    is_graded,
    is_module,
    max_antichain_exhaustive,
    substitute_chains,
    substitute_element,
    width,
)

from oracles import critical_pairs_slow, is_module_slow, width_slow

seeds = st.integers(0, 10**6)


def test_closure_consistency():
    p = n_poset()
    for x in range(p.n):
        for y in range(p.n):
            if x != y:
                assert p.lt(x, y) == bool(p.above[x] & (1 << y))
                assert p.lt(x, y) == bool(p.below[y] & (1 << x))
                assert p.incomparable(x, y) == bool(p.incmask[x] & (1 << y))


@given(st.integers(2, 8), seeds)
def test_closure_transitive(n, seed):
    p = random_poset(n, seed)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if p.lt(x, y) and p.lt(y, z):
                    assert p.lt(x, z)
                assert not (p.lt(x, y) and p.lt(y, x))


def test_from_cover_relations_cycle():
    with pytest.raises(CycleDetected):
        from_cover_relations(3, [(0, 1), (1, 2), (2, 0)])


def test_cover_pairs_chain():
    assert chain(3).cover_pairs() == [(0, 1), (1, 2)]


def test_dual_involution():
    p = m_poset()
    assert p.dual().dual() == p
    assert p.dual().above == p.below


@given(st.integers(1, 8), seeds)
def test_critical_pairs_match_definition(n, seed):
    p = random_poset(n, seed)
    got = sorted(critical_pairs(p))
    assert got == critical_pairs_slow(p)
    for u, v in got:
        assert is_critical_pair(p, u, v)


def test_critical_pairs_fixtures():
    assert critical_pairs(chain(4)) == []
    # every ordered incomparable pair of an antichain is critical
    assert sorted(critical_pairs(antichain(3))) == [
        (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1),
    ]
    n = n_poset()
    assert sorted(critical_pairs(n)) == [(0, 3), (1, 0), (3, 2)]
    # the M has four critical pairs, not two
    m = m_poset()
    assert len(critical_pairs(m)) == 4


@given(st.integers(1, 9), seeds)
def test_width_vs_exhaustive(n, seed):
    p = random_poset(n, seed)
    w = width(p)
    assert w == width_slow(p)
    assert max_antichain_exhaustive(p) == w


def test_width_height_fixtures():
    assert width(chain(5)) == 1 and height(chain(5)) == 5
    assert width(antichain(5)) == 5 and height(antichain(5)) == 1
    assert width(boolean_lattice(3)) == 3
    assert height(boolean_lattice(3)) == 4
    assert width(two_plus_two()) == 2


@given(st.integers(1, 9), seeds)
def test_decompose_is_chain_partition(n, seed):
    p = random_poset(n, seed)
    dec = decompose(p)
    assert len(dec) == width(p)
    seen = set()
    for c in dec.chains:
        # chains are stored top element first
        for a, b in zip(c, c[1:]):
            assert p.lt(b, a)
        seen.update(c)
    assert seen == set(range(n))


@given(st.integers(2, 8), seeds)
def test_planted_twin_found(n, seed):
    p, (x, t) = random_with_twin(n, seed)
    assert (min(x, t), max(x, t)) in find_twins(p)


def test_twins_are_critical_both_ways():
    p, (x, t) = random_with_twin(6, 11)
    assert is_critical_pair(p, x, t) and is_critical_pair(p, t, x)


@given(st.integers(3, 8), seeds)
def test_planted_module(n, seed):
    p, members = random_with_module(n, 2, seed)
    assert is_module(p, members)
    assert is_module_slow(p, members)


@given(st.integers(1, 7), seeds, st.data())
def test_is_module_matches_definition(n, seed, data):
    p = random_poset(n, seed)
    members = data.draw(
        st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True)
    )
    assert is_module(p, members) == is_module_slow(p, members)


def test_substitute_chains_identity():
    p = n_poset()
    q, prov = substitute_chains(p, (1, 1, 1, 1))
    assert q.above == p.above
    assert prov == tuple((x, 1) for x in range(4))


@given(st.integers(1, 6), seeds, st.data())
def test_substitute_chains_shape(n, seed, data):
    p = random_poset(n, seed)
    lengths = tuple(data.draw(st.integers(1, 3)) for _ in range(n))
    q, prov = substitute_chains(p, lengths)
    assert q.n == sum(lengths)
    assert len(prov) == q.n
    # each block is a chain and a module
    for x in range(n):
        block = [i for i, (orig, _) in enumerate(prov) if orig == x]
        ranks = [prov[i][1] for i in block]
        assert ranks == list(range(1, lengths[x] + 1))
        for a, b in zip(block, block[1:]):
            assert q.lt(a, b)
        if len(block) > 1:
            assert is_module(q, block)
    # comparabilities between blocks mirror the base poset
    for i, (ox, _) in enumerate(prov):
        for j, (oy, _) in enumerate(prov):
            if ox != oy:
                assert q.lt(i, j) == p.lt(ox, oy)


def test_substitute_element_plants_module():
    outer = n_poset()
    inner = antichain(2)
    q, members = substitute_element(outer, 2, inner)
    assert q.n == 5
    assert is_module(q, members)


def test_graded_and_3layer_fixtures():
    assert is_graded(chain(4))
    assert is_graded(boolean_lattice(3))
    assert is_graded(n_poset())
    assert not is_graded(from_cover_relations(4, [(0, 1), (1, 2), (0, 3)]))
    assert not is_3layer(n_poset())
    k22 = from_cover_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert not is_3layer(k22)
    layered = from_cover_relations(
        5, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
    )
    assert is_3layer(layered)
