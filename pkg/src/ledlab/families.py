"""Constructors for the poset families used across the test-bed.

Random constructors take an integer seed and are pure functions of their
arguments: the same call always returns the same poset.
"""

from __future__ import annotations

import dataclasses
import random

from .errors import ClassViolation, NotIntervalOrder, SizeExceeded
from .poset import (
    Poset,
    WeightedPoset,
    bit_indices,
    from_cover_relations,
    is_3layer,
    substitute_chains,
    substitute_element,
)

# -- fixed small posets ------------------------------------------------------


def chain(n, labels=None):
    above = tuple(((1 << n) - 1) & ~((1 << (x + 1)) - 1) for x in range(n))
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    return Poset(n, above, tuple(labels))


def antichain(n, labels=None):
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    return Poset(n, (0,) * n, tuple(labels))


def n_poset():
    """Four elements shaped like the letter N: 1<3, 2<3, 2<4."""
    return from_cover_relations(4, [(0, 2), (1, 2), (1, 3)], labels="1234")


def m_poset():
    """Five elements shaped like the letter M: 1<x, 2<x, 2<y, 3<y."""
    return from_cover_relations(
        5, [(0, 3), (1, 3), (1, 4), (2, 4)], labels=("1", "2", "3", "x", "y")
    )


def two_plus_two():
    """Disjoint union of two 2-chains; the forbidden pattern of interval orders."""
    return from_cover_relations(4, [(0, 1), (2, 3)], labels="abcd")


# -- boolean lattices and subposets ------------------------------------------


def _subset_label(mask):
    if mask == 0:
        return "∅"
    return "".join(str(i + 1) for i in bit_indices(mask))


def boolean_lattice(n):
    """Subsets of {1..n} ordered by inclusion; element index == subset mask."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 8:
        raise SizeExceeded(f"boolean lattice on {n} ground elements is too large")
    size = 1 << n
    above = []
    for s in range(size):
        m = 0
        for t in range(size):
            if t != s and t & s == s:
                m |= 1 << t
        above.append(m)
    labels = tuple(_subset_label(s) for s in range(size))
    return Poset(size, tuple(above), labels)


def _as_subset_mask(subset):
    if isinstance(subset, str):
        items = [int(ch) for ch in subset]
    else:
        items = list(subset)
    mask = 0
    for i in items:
        if i < 1:
            raise ValueError("ground elements are numbered from 1")
        mask |= 1 << (i - 1)
    return mask


def boolean_subposet(n, subsets):
    """Induced subposet of the inclusion order on the given subsets of {1..n}.

    Subsets are written as digit strings ("1235") or iterables of 1-based
    ground elements.  Elements are ordered by (cardinality, mask).
    """
    masks = sorted({_as_subset_mask(s) for s in subsets})
    if any(m >> n for m in masks):
        raise ValueError("subset mentions a ground element past n")
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    idx = {m: i for i, m in enumerate(masks)}
    above = []
    for m in masks:
        row = 0
        for t in masks:
            if t != m and t & m == m:
                row |= 1 << idx[t]
        above.append(row)
    labels = tuple(_subset_label(m) for m in masks)
    return Poset(len(masks), tuple(above), labels)


_SKELETON_DOUBLES = ("12", "34", "56")
_SKELETON_QUADS = ("1235", "1246", "1345", "2346", "1356", "2456")


def red_core():
    """Nine subsets of {1..6}: three doubles, each under two of six quads."""
    return boolean_subposet(6, _SKELETON_DOUBLES + _SKELETON_QUADS)


def counterexample_skeleton():
    """21 subsets of {1..6}: atoms, three doubles, six quads, coatoms."""
    atoms = tuple(str(i) for i in range(1, 7))
    coatoms = tuple("".join(str(j) for j in range(1, 7) if j != i) for i in range(1, 7))
    return boolean_subposet(6, atoms + _SKELETON_DOUBLES + _SKELETON_QUADS + coatoms)


def _red_indices(p):
    return tuple(i for i, lab in enumerate(p.labels) if len(lab) in (2, 4))


def b4_star_weighted(w):
    """B4 with every 2-subset carrying multiplicity w."""
    p = boolean_lattice(4)
    weights = tuple(w if bin(s).count("1") == 2 else 1 for s in range(16))
    return WeightedPoset(p, weights)


def b4_star(w):
    """B4 with every 2-subset expanded into a w-chain; returns (poset, provenance)."""
    p = boolean_lattice(4)
    lengths = tuple(w if bin(s).count("1") == 2 else 1 for s in range(16))
    return substitute_chains(p, lengths)


def p_star_weighted(w):
    """The 21-element skeleton with doubles and quads carrying multiplicity w."""
    p = counterexample_skeleton()
    reds = set(_red_indices(p))
    weights = tuple(w if i in reds else 1 for i in range(p.n))
    return WeightedPoset(p, weights)


def p_star(w):
    """The 21-element skeleton with doubles and quads expanded into w-chains."""
    p = counterexample_skeleton()
    reds = set(_red_indices(p))
    lengths = tuple(w if i in reds else 1 for i in range(p.n))
    return substitute_chains(p, lengths)


def b4_doubles_pair():
    """Two extensions of B4 that disagree on all fifteen pairs of 2-subsets.

    Both are bottom-to-top index tuples for boolean_lattice(4).  The first
    sorts subsets by mask, putting the doubles in the order
    12,13,23,14,24,34; the second walks the doubles in exactly the opposite
    order.  Note the second is not the reversed-significance sort, which
    would leave the pair {14, 23} unreversed.
    """
    l1 = tuple(range(16))
    l2 = (0, 8, 4, 12, 2, 10, 1, 9, 6, 14, 5, 13, 3, 11, 7, 15)
    return l1, l2


def boolean_lex_pair(n):
    """The mask-ascending and reversed-significance extensions of B_n."""
    size = 1 << n
    l1 = tuple(range(size))
    l2 = tuple(
        sorted(range(size), key=lambda s: sum(1 << (n - 1 - i) for i in bit_indices(s)))
    )
    return l1, l2


# -- two-dimensional posets ---------------------------------------------------


def from_two_permutations(first, second):
    """Intersection of two linear orders: x < y iff x precedes y in both."""
    n = len(first)
    if sorted(first) != list(range(n)) or sorted(second) != list(range(n)):
        raise ValueError("arguments must both be permutations of range(n)")
    pos1 = [0] * n
    pos2 = [0] * n
    for i, x in enumerate(first):
        pos1[x] = i
    for i, x in enumerate(second):
        pos2[x] = i
    above = []
    for x in range(n):
        m = 0
        for y in range(n):
            if y != x and pos1[x] < pos1[y] and pos2[x] < pos2[y]:
                m |= 1 << y
        above.append(m)
    return Poset(n, tuple(above), tuple(str(i) for i in range(n)))


def random_two_dim(n, seed):
    rng = random.Random(seed)
    first = list(range(n))
    second = list(range(n))
    rng.shuffle(first)
    rng.shuffle(second)
    return from_two_permutations(first, second)


# -- random constructors -------------------------------------------------------


def random_poset(n, seed, p=0.3):
    """Random order: random linear order, keep forward pairs with probability p."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                covers.append((order[i], order[j]))
    return from_cover_relations(n, covers)


def random_width3(n, seed, p=0.25):
    """Random poset partitioned into three chains, so width is at most 3."""
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    lane = [rng.randrange(3) for _ in range(n)]
    covers = []
    last = [None, None, None]
    for pos in range(n):
        x = order[pos]
        c = lane[pos]
        if last[c] is not None:
            covers.append((last[c], x))
        last[c] = x
    for i in range(n):
        for j in range(i + 1, n):
            if lane[i] != lane[j] and rng.random() < p:
                covers.append((order[i], order[j]))
    return from_cover_relations(n, covers)


def random_height2(n, seed, p=0.3):
    """Random bipartite order (height at most 2, exactly 2 when n >= 2)."""
    rng = random.Random(seed)
    if n < 2:
        return antichain(n)
    k = rng.randint(1, n - 1)
    covers = []
    for a in range(k):
        for b in range(k, n):
            if rng.random() < p:
                covers.append((a, b))
    if not covers:
        covers.append((0, k))
    return from_cover_relations(n, covers)


def random_3layer(n, seed, p=0.3):
    """Random graded height-3 order with every minimal below every maximal."""
    if n < 3:
        raise ValueError("a 3-layer poset needs at least 3 elements")
    rng = random.Random(seed)
    for _ in range(300):
        n1 = rng.randint(1, n - 2)
        n2 = rng.randint(1, n - 1 - n1)
        low = list(range(n1))
        mid = list(range(n1, n1 + n2))
        high = list(range(n1 + n2, n))
        covers = set()
        for b in mid:
            covers.add((rng.choice(low), b))
            covers.add((b, rng.choice(high)))
        for a in low:
            for b in mid:
                if rng.random() < p:
                    covers.add((a, b))
        for b in mid:
            for c in high:
                if rng.random() < p:
                    covers.add((b, c))
        q = from_cover_relations(n, covers)
        for a in low:
            for c in high:
                if not q.lt(a, c):
                    b = rng.choice(mid)
                    covers.add((a, b))
                    covers.add((b, c))
        q = from_cover_relations(n, covers)
        if is_3layer(q):
            return q
    raise ClassViolation("could not sample a 3-layer poset with these parameters")


def random_with_twin(n, seed, p=0.3):
    """Random poset with one duplicated element; returns (poset, (x, twin))."""
    if n < 2:
        raise ValueError("need at least 2 elements for a twin pair")
    rng = random.Random(seed)
    base = random_poset(n - 1, rng.randrange(1 << 30), p)
    x = rng.randrange(n - 1)
    t = n - 1
    rows = []
    for z in range(n - 1):
        m = base.above[z]
        if m & (1 << x):
            m |= 1 << t
        rows.append(m)
    rows.append(base.above[x])
    labels = base.labels + (base.labels[x] + "'",)
    return Poset(n, tuple(rows), labels), (x, t)


def random_with_module(n, inner_size, seed, p=0.3):
    """Random poset with a planted module; returns (poset, member indices)."""
    if not 2 <= inner_size <= n:
        raise ValueError("module size must lie between 2 and n")
    rng = random.Random(seed)
    outer = random_poset(n - inner_size + 1, rng.randrange(1 << 30), p)
    inner = random_poset(inner_size, rng.randrange(1 << 30), p)
    x = rng.randrange(outer.n)
    return substitute_element(outer, x, inner)


# -- interval orders -----------------------------------------------------------


def interval_order(intervals, require_nonchain=False):
    """Order of intervals: u < v iff u's right end is at most v's left end."""
    ivs = [(l, r) for l, r in intervals]
    for l, r in ivs:
        if not l < r:
            raise ValueError("intervals must have positive length")
    n = len(ivs)
    above = []
    for x in range(n):
        m = 0
        for y in range(n):
            if y != x and ivs[x][1] <= ivs[y][0]:
                m |= 1 << y
        above.append(m)
    q = Poset(n, tuple(above), tuple(str(i) for i in range(n)))
    if require_nonchain and not q.incomparable_pairs():
        raise ClassViolation("interval family induces a chain")
    return q


def unit_interval_order(lefts, length=2):
    """Interval order of equal-length integer intervals [l, l+length)."""
    if not isinstance(length, int) or length < 1:
        raise ValueError("length must be a positive integer")
    if any(not isinstance(l, int) for l in lefts):
        raise ValueError("left endpoints must be integers")
    return interval_order([(l, l + length) for l in lefts])


def random_interval_order(n, seed, span=None):
    rng = random.Random(seed)
    span = span or max(2, n)
    ivs = []
    for _ in range(n):
        l = rng.randint(0, 2 * n)
        ivs.append((l, l + rng.randint(1, span)))
    return interval_order(ivs)


def random_unit_interval_order(n, seed, length=2):
    rng = random.Random(seed)
    lefts = [rng.randint(0, 2 * n) for _ in range(n)]
    return unit_interval_order(lefts, length)


def maximal_antichains(p):
    """All maximal antichains as element masks (exhaustive, n <= 16)."""
    if p.n > 16:
        raise SizeExceeded("maximal antichain scan is exponential; n is capped at 16")
    comp = [p.above[x] | p.below[x] for x in range(p.n)]
    out = []
    for m in range(1, 1 << p.n):
        ok = True
        for x in bit_indices(m):
            if comp[x] & m:
                ok = False
                break
        if not ok:
            continue
        addable = False
        for y in range(p.n):
            if not (m & (1 << y)) and not (comp[y] & m):
                addable = True
                break
        if not addable:
            out.append(m)
    return out


@dataclasses.dataclass(frozen=True)
class IntervalRepresentation:
    """Canonical interval model: intervals[x] = (l, r) over antichain indices."""

    intervals: tuple
    antichains: tuple

    def __len__(self):
        return len(self.intervals)


def canonical_interval_representation(p):
    """Intervals over the chain of maximal antichains, or NotIntervalOrder.

    Maximal antichains of an interval order are linearly ordered by strict
    containment of their down sets; each element must occupy a consecutive
    run.  The result is verified by rebuilding the order from the intervals.
    """
    if p.n == 0:
        return IntervalRepresentation((), ())
    mas = maximal_antichains(p)
    keyed = []
    for m in mas:
        dset = 0
        for x in bit_indices(m):
            dset |= p.below[x]
        keyed.append((bin(dset).count("1"), dset, m))
    keyed.sort(key=lambda t: t[0])
    for (s1, d1, _), (s2, d2, _) in zip(keyed, keyed[1:]):
        if s1 == s2 or d1 & ~d2:
            raise NotIntervalOrder("maximal antichains are not nested by down sets")
    order = [m for _, _, m in keyed]
    intervals = []
    for x in range(p.n):
        idxs = [i for i, m in enumerate(order) if m & (1 << x)]
        if idxs != list(range(idxs[0], idxs[-1] + 1)):
            raise NotIntervalOrder("an element skips a maximal antichain")
        intervals.append((idxs[0], idxs[-1] + 1))
    for x in range(p.n):
        for y in range(p.n):
            if x != y and (intervals[x][1] <= intervals[y][0]) != p.lt(x, y):
                raise NotIntervalOrder("interval model does not rebuild the order")
    return IntervalRepresentation(tuple(intervals), tuple(order))
