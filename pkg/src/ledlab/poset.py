"""Finite strict posets stored as bitmask relation rows.

Elements are integers 0..n-1 with string labels.  above[x] is the bitmask of
all y with x < y, so the full strict order is materialised and every
comparability query is a couple of bit operations.  All structural predicates
used elsewhere (critical pairs, modules, twins, chain substitution, Dilworth
decomposition, gradedness) live here.
"""

from __future__ import annotations

import dataclasses
from collections import deque

from .errors import CycleDetected


def bit_indices(mask):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclasses.dataclass(frozen=True)
class Poset:
    n: int
    above: tuple  # above[x] = bitmask of y with x < y
    labels: tuple
    below: tuple = dataclasses.field(init=False, compare=False, repr=False)
    incmask: tuple = dataclasses.field(init=False, compare=False, repr=False)

    def __post_init__(self):
        n = self.n
        if len(self.above) != n or len(self.labels) != n:
            raise ValueError("field lengths disagree with n")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be unique")
        full = (1 << n) - 1
        below = [0] * n
        for x in range(n):
            up = self.above[x]
            if up >> n:
                raise ValueError("relation mask out of range")
            if up & (1 << x):
                raise ValueError("relation must be irreflexive")
            for y in bit_indices(up):
                below[y] |= 1 << x
        inc = []
        for x in range(n):
            if self.above[x] & below[x]:
                raise ValueError("relation must be antisymmetric")
            for y in bit_indices(self.above[x]):
                if self.above[y] & ~self.above[x]:
                    raise ValueError("relation must be transitive")
            inc.append(full & ~(self.above[x] | below[x] | (1 << x)))
        object.__setattr__(self, "below", tuple(below))
        object.__setattr__(self, "incmask", tuple(inc))

    # -- elementary queries ------------------------------------------------

    def lt(self, x, y):
        return bool(self.above[x] & (1 << y))

    def leq(self, x, y):
        return x == y or self.lt(x, y)

    def incomparable(self, x, y):
        return bool(self.incmask[x] & (1 << y))

    def incomparable_pairs(self):
        """All unordered incomparable pairs as (x, y) with x < y."""
        out = []
        for x in range(self.n):
            rest = self.incmask[x] >> (x + 1)
            for off in bit_indices(rest):
                out.append((x, x + 1 + off))
        return out

    def inc_count(self):
        return sum(bin(m).count("1") for m in self.incmask) // 2

    def minimal_mask(self):
        return sum(1 << x for x in range(self.n) if not self.below[x])

    def maximal_mask(self):
        return sum(1 << x for x in range(self.n) if not self.above[x])

    def cover_pairs(self):
        """Transitive reduction as a list of (x, y) pairs, x covered by y."""
        out = []
        for x in range(self.n):
            for y in bit_indices(self.above[x]):
                if not (self.above[x] & self.below[y]):
                    out.append((x, y))
        return out

    def subposet(self, keep):
        """Induced subposet on the element list ``keep`` (order preserved)."""
        keep = list(keep)
        pos = {x: i for i, x in enumerate(keep)}
        rows = []
        for x in keep:
            m = 0
            for y in bit_indices(self.above[x]):
                if y in pos:
                    m |= 1 << pos[y]
            rows.append(m)
        return Poset(len(keep), tuple(rows), tuple(self.labels[x] for x in keep))

    def relabel(self, labels):
        return Poset(self.n, self.above, tuple(labels))

    def dual(self):
        return Poset(self.n, self.below, self.labels)

    def label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    def __str__(self):
        covers = ", ".join(
            f"{self.labels[x]}<{self.labels[y]}" for x, y in self.cover_pairs()
        )
        return f"Poset(n={self.n}, covers=[{covers}])"


@dataclasses.dataclass(frozen=True)
class WeightedPoset:
    """A poset with a positive integer multiplicity per element.

    A weighted reversal of the incomparable pair {x, y} counts
    weight[x] * weight[y]; this models elements that stand for collapsed
    chains of the given lengths.
    """

    poset: Poset
    weight: tuple

    def __post_init__(self):
        if len(self.weight) != self.poset.n:
            raise ValueError("one weight per element required")
        if any((not isinstance(w, int)) or w < 1 for w in self.weight):
            raise ValueError("weights must be positive integers")

    def pair_weight(self, x, y):
        return self.weight[x] * self.weight[y]


def from_cover_relations(n, covers, labels=None):
    """Build a poset from arbitrary acyclic generator pairs.

    ``covers`` may contain redundant pairs; the transitive closure is taken.
    Raises CycleDetected when the pairs are not acyclic.
    """
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    adj = [[] for _ in range(n)]
    indeg = [0] * n
    seen = set()
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError("cover endpoint out of range")
        if a == b:
            raise CycleDetected(f"self loop at element {a}")
        if (a, b) in seen:
            continue
        seen.add((a, b))
        adj[a].append(b)
        indeg[b] += 1
    queue = deque(x for x in range(n) if indeg[x] == 0)
    topo = []
    indeg2 = list(indeg)
    while queue:
        x = queue.popleft()
        topo.append(x)
        for y in adj[x]:
            indeg2[y] -= 1
            if indeg2[y] == 0:
                queue.append(y)
    if len(topo) != n:
        raise CycleDetected("generator pairs contain a directed cycle")
    above = [0] * n
    for x in reversed(topo):
        m = 0
        for y in adj[x]:
            m |= (1 << y) | above[y]
        above[x] = m
    return Poset(n, tuple(above), tuple(labels))


def from_relation_masks(n, above, labels=None):
    """Build a poset from already transitively closed relation rows."""
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    return Poset(n, tuple(above), tuple(labels))


# -- critical pairs, modules, twins ---------------------------------------


def critical_pairs(p):
    """Ordered pairs (u, v): u and v incomparable, every element below u is
    below v, and every element above v is above u.  Lexicographic order."""
    out = []
    for u in range(p.n):
        for v in range(p.n):
            if u == v or not p.incomparable(u, v):
                continue
            if p.below[u] & ~p.below[v]:
                continue
            if p.above[v] & ~p.above[u]:
                continue
            out.append((u, v))
    return out


def is_critical_pair(p, u, v):
    return (
        u != v
        and p.incomparable(u, v)
        and not (p.below[u] & ~p.below[v])
        and not (p.above[v] & ~p.above[u])
    )


def is_module(p, members):
    """True iff every element outside relates uniformly to all of ``members``."""
    mask = 0
    for x in members:
        mask |= 1 << x
    size = bin(mask).count("1")
    for z in range(p.n):
        if mask & (1 << z):
            continue
        hits = (
            bin(p.above[z] & mask).count("1"),
            bin(p.below[z] & mask).count("1"),
            bin(p.incmask[z] & mask).count("1"),
        )
        if size not in hits:
            return False
    return True


def find_twins(p):
    """Unordered pairs with identical strict down sets and up sets."""
    out = []
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.below[x] == p.below[y] and p.above[x] == p.above[y]:
                out.append((x, y))
    return out


def substitute_chains(p, lengths):
    """Replace element x by a chain of lengths[x] new elements.

    Returns (expanded poset, provenance) where provenance[i] = (x, r) maps new
    element i to original element x and 1-based bottom-to-top chain rank r.
    """
    n = p.n
    if len(lengths) != n:
        raise ValueError("one length per element required")
    if any((not isinstance(k, int)) or k < 1 for k in lengths):
        raise ValueError("chain lengths must be positive integers")
    offset = [0] * n
    total = 0
    for x in range(n):
        offset[x] = total
        total += lengths[x]
    chainmask = [((1 << lengths[x]) - 1) << offset[x] for x in range(n)]
    above = [0] * total
    labels = [""] * total
    provenance = [None] * total
    for x in range(n):
        k = lengths[x]
        upper = 0
        for y in bit_indices(p.above[x]):
            upper |= chainmask[y]
        for t in range(k):
            i = offset[x] + t
            within = chainmask[x] & ~((1 << (i + 1)) - 1)
            above[i] = within | upper
            labels[i] = p.labels[x] if k == 1 else f"{p.labels[x]}.{t + 1}"
            provenance[i] = (x, t + 1)
    q = Poset(total, tuple(above), tuple(labels))
    return q, tuple(provenance)


def substitute_element(p, x, inner):
    """Replace element x by the poset ``inner`` as a module.

    Returns (expanded poset, members) where members are the new indices of the
    inner copy.  Inner elements inherit all outer relations of x.
    """
    n = p.n
    m = inner.n
    outer = [z for z in range(n) if z != x]
    idx_outer = {z: i for i, z in enumerate(outer)}
    total = n - 1 + m
    above = [0] * total
    labels = []
    inner_mask = ((1 << m) - 1) << (n - 1)
    for z in outer:
        i = idx_outer[z]
        mask = 0
        for y in bit_indices(p.above[z]):
            if y == x:
                mask |= inner_mask
            else:
                mask |= 1 << idx_outer[y]
        above[i] = mask
        labels.append(p.labels[z])
    upper = 0
    for y in bit_indices(p.above[x]):
        upper |= 1 << idx_outer[y]
    for t in range(m):
        i = n - 1 + t
        mask = upper
        for u in bit_indices(inner.above[t]):
            mask |= 1 << (n - 1 + u)
        above[i] = mask
        labels.append(f"{p.labels[x]}/{inner.labels[t]}")
    q = Poset(total, tuple(above), tuple(labels))
    return q, tuple(range(n - 1, total))


# -- chain decomposition and shape predicates ------------------------------


@dataclasses.dataclass(frozen=True)
class ChainDecomposition:
    """A partition into chains, each stored top element first."""

    chains: tuple

    def __len__(self):
        return len(self.chains)


def decompose(p):
    """Minimum chain partition via lowest-index augmenting matching.

    Deterministic: elements are scanned in index order and augmenting paths
    prefer smaller successors, so repeated calls agree bit for bit.
    """
    n = p.n
    succ = [-1] * n
    pred = [-1] * n

    def augment(x, seen):
        for y in bit_indices(p.above[x]):
            if not seen[y]:
                seen[y] = True
                if pred[y] < 0 or augment(pred[y], seen):
                    succ[x] = y
                    pred[y] = x
                    return True
        return False

    for x in range(n):
        augment(x, [False] * n)
    chains = []
    for start in range(n):
        if pred[start] >= 0:
            continue
        chain = []
        x = start
        while x >= 0:
            chain.append(x)
            x = succ[x]
        chains.append(tuple(reversed(chain)))
    return ChainDecomposition(tuple(chains))


def width(p):
    return len(decompose(p).chains)


def max_antichain_exhaustive(p):
    """Largest antichain size by scanning all subsets.  Oracle use only."""
    best = 0
    for mask in range(1 << p.n):
        ok = True
        for x in bit_indices(mask):
            if (p.above[x] | p.below[x]) & mask:
                ok = False
                break
        if ok:
            best = max(best, bin(mask).count("1"))
    return best


def height(p):
    """Number of elements in a longest chain."""
    if p.n == 0:
        return 0
    order = sorted(range(p.n), key=lambda x: bin(p.below[x]).count("1"))
    h = [1] * p.n
    for x in order:
        for y in bit_indices(p.below[x]):
            if h[y] + 1 > h[x]:
                h[x] = h[y] + 1
    return max(h)


def is_graded(p):
    """True iff all maximal chains share one length.

    Equivalent formulation on the cover DAG: for every maximal element the
    shortest and longest source-to-it cover path agree, and that common value
    is the same for all maximal elements.
    """
    if p.n == 0:
        return True
    children = [[] for _ in range(p.n)]
    indeg = [0] * p.n
    for x, y in p.cover_pairs():
        children[x].append(y)
        indeg[y] += 1
    queue = deque()
    seen_lo = [None] * p.n
    seen_hi = [None] * p.n
    for x in range(p.n):
        if indeg[x] == 0:
            seen_lo[x] = seen_hi[x] = 1
            queue.append(x)
    indeg2 = list(indeg)
    while queue:
        x = queue.popleft()
        for y in children[x]:
            if seen_lo[y] is None or seen_lo[x] + 1 < seen_lo[y]:
                seen_lo[y] = seen_lo[x] + 1
            if seen_hi[y] is None or seen_hi[x] + 1 > seen_hi[y]:
                seen_hi[y] = seen_hi[x] + 1
            indeg2[y] -= 1
            if indeg2[y] == 0:
                queue.append(y)
    tops = [x for x in range(p.n) if not p.above[x]]
    values = set()
    for x in tops:
        if seen_lo[x] != seen_hi[x]:
            return False
        values.add(seen_lo[x])
    return len(values) == 1


def is_3layer(p):
    """Graded, height exactly 3, and every minimal below every maximal."""
    if not is_graded(p) or height(p) != 3:
        return False
    mins = p.minimal_mask()
    for x in bit_indices(mins):
        if p.above[x] & p.maximal_mask() != p.maximal_mask():
            return False
    return True
