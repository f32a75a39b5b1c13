import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ledlab.errors import NotIntervalOrder, SizeExceeded
from ledlab.families import (
    antichain,
    b4_doubles_pair,
    b4_star,
    b4_star_weighted,
    boolean_lattice,
    boolean_lex_pair,
    boolean_subposet,
    canonical_interval_representation,
    chain,
    counterexample_skeleton,
    interval_order,
    m_poset,
    maximal_antichains,
    n_poset,
    p_star,
    p_star_weighted,
    random_3layer,
    random_height2,
    random_interval_order,
    random_poset,
    random_two_dim,
    random_unit_interval_order,
    random_width3,
    red_core,
    two_plus_two,
    unit_interval_order,
)
from ledlab.linext import is_linear_extension
from ledlab.poset import bit_indices, height, is_3layer, width

seeds = st.integers(0, 10**6)


# -- small named posets ---------------------------------------------------------


def test_named_shapes():
    assert chain(4).cover_pairs() == [(0, 1), (1, 2), (2, 3)]
    assert antichain(3).inc_count() == 3
    n = n_poset()
    assert n.labels == ("1", "2", "3", "4")
    assert sorted(n.cover_pairs()) == [(0, 2), (1, 2), (1, 3)]
    m = m_poset()
    assert m.n == 5
    assert two_plus_two().inc_count() == 4


def test_boolean_lattice_index_is_mask():
    p = boolean_lattice(3)
    for x in range(8):
        for y in range(8):
            if x != y:
                assert p.lt(x, y) == (x & y == x and x != y)
    assert p.labels[0] == "∅"
    assert p.labels[0b101] == "13"
    with pytest.raises(SizeExceeded):
        boolean_lattice(9)


def test_boolean_subposet_sorting():
    p = boolean_subposet(3, ("1", "12", "2", "123"))
    assert p.labels == ("1", "2", "12", "123")
    assert p.lt(0, 2) and p.lt(1, 2) and p.lt(2, 3)
    assert p.incomparable(0, 1)


def test_red_core_shape():
    p = red_core()
    assert p.n == 9
    assert set(p.labels) == {
        "12", "34", "56", "1235", "1246", "1345", "2346", "1356", "2456",
    }
    assert p.inc_count() == 30


def test_counterexample_skeleton_shape():
    p = counterexample_skeleton()
    assert p.n == 21
    assert width(p) >= 6
    # atoms, three doubles, six quads, coatoms
    lens = sorted(len(l) for l in p.labels)
    assert lens.count(1) == 6 and lens.count(2) == 3
    assert lens.count(4) == 6 and lens.count(5) == 6


def test_b4_star_expansion():
    q, prov = b4_star(3)
    assert q.n == 16 + 6 * 2
    wp = b4_star_weighted(3)
    assert wp.poset.n == 16
    doubles = [x for x in range(16) if bin(x).count("1") == 2]
    assert all(wp.weight[x] == 3 for x in doubles)
    assert all(wp.weight[x] == 1 for x in range(16) if x not in doubles)


def test_p_star_expansion():
    q, prov = p_star(5)
    assert q.n == 12 + 9 * 5
    wp = p_star_weighted(5)
    assert wp.poset.n == 21
    reds = [x for x in range(21) if len(wp.poset.labels[x]) in (2, 4)]
    assert len(reds) == 9
    assert all(wp.weight[x] == 5 for x in reds)


def test_b4_doubles_pair_are_extensions():
    p = boolean_lattice(4)
    l1, l2 = b4_doubles_pair()
    assert is_linear_extension(p, l1)
    assert is_linear_extension(p, l2)


@given(st.integers(1, 6))
def test_boolean_lex_pair_are_extensions(n):
    p = boolean_lattice(n)
    l1, l2 = boolean_lex_pair(n)
    assert is_linear_extension(p, l1)
    assert is_linear_extension(p, l2)


# -- random families -------------------------------------------------------------


@given(st.integers(1, 9), seeds)
def test_random_families_deterministic(n, seed):
    assert random_poset(n, seed) == random_poset(n, seed)
    assert random_width3(n, seed) == random_width3(n, seed)


@given(st.integers(1, 9), seeds)
def test_random_width3_in_class(n, seed):
    assert width(random_width3(n, seed)) <= 3


@given(st.integers(2, 9), seeds)
def test_random_height2_in_class(n, seed):
    assert height(random_height2(n, seed)) <= 2


@given(st.integers(3, 9), seeds)
def test_random_3layer_in_class(n, seed):
    assert is_3layer(random_3layer(n, seed))


@given(st.integers(2, 8), seeds)
def test_random_two_dim_realizer(n, seed):
    p = random_two_dim(n, seed)
    # intersection of two linear orders: x < y iff both orders agree
    assert all(not p.lt(x, y) or not p.lt(y, x) for x in range(n) for y in range(n))


# -- interval orders --------------------------------------------------------------


def test_interval_order_fixture():
    p = interval_order(((0, 2), (1, 3), (4, 5)))
    assert p.lt(0, 2) and p.lt(1, 2)
    assert p.incomparable(0, 1)


def test_unit_interval_order_fixture():
    p = unit_interval_order((0, 1, 4))
    assert p.incomparable(0, 1)
    assert p.lt(0, 2) and p.lt(1, 2)


@given(st.integers(1, 9), seeds)
def test_random_interval_order_accepted(n, seed):
    p = random_interval_order(n, seed)
    rep = canonical_interval_representation(p)
    assert len(rep) == n


@given(st.integers(1, 9), seeds)
def test_random_unit_interval_order_accepted(n, seed):
    p = random_unit_interval_order(n, seed)
    canonical_interval_representation(p)


def test_two_plus_two_rejected():
    with pytest.raises(NotIntervalOrder):
        canonical_interval_representation(two_plus_two())


def test_canonical_representation_chain():
    rep = canonical_interval_representation(chain(3))
    assert rep.intervals == ((0, 1), (1, 2), (2, 3))


def test_canonical_representation_nested():
    p = interval_order(((0, 10), (2, 3), (4, 5), (6, 7)))
    rep = canonical_interval_representation(p)
    assert rep.intervals == ((0, 3), (0, 1), (1, 2), (2, 3))


@given(st.integers(1, 8), seeds)
def test_round_trip_rebuilds_order(n, seed):
    p = random_interval_order(n, seed)
    rep = canonical_interval_representation(p)
    for x in range(n):
        for y in range(n):
            if x != y:
                assert (rep.intervals[x][1] <= rep.intervals[y][0]) == p.lt(x, y)


@given(st.integers(1, 8), seeds)
def test_maximal_antichains_are_maximal(n, seed):
    p = random_poset(n, seed)
    mas = maximal_antichains(p)
    assert mas
    for m in mas:
        elems = list(bit_indices(m))
        for i, x in enumerate(elems):
            for y in elems[i + 1 :]:
                assert p.incomparable(x, y)
        for z in range(n):
            if not (m & (1 << z)):
                assert any(not p.incomparable(z, x) for x in elems if x != z)
