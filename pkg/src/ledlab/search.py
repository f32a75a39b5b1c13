"""Exact weighted diameter by branch and bound over joint pair orientations.

A pair of linear extensions is a pair of total orders extending the poset, so
the search fixes, one incomparable pair at a time, how the pair is oriented in
each of the two extensions being built.  Both orientations are kept as
transitively closed relation masks; fixing a pair can decide many others, and
the weight of every pair not yet decided in both orders bounds the remaining
gain.  Leaves are pairs of total orders and the incumbent tracks the best
weighted distance seen.
"""

from __future__ import annotations

import sys

from .errors import CapExceeded
from .linext import _as_weighted, _require_le, weighted_distance
from .poset import bit_indices

DEFAULT_NODE_BUDGET = 3_000_000


def _lexmin_le(n, dn):
    # dn is a total order's strict down-set masks, so counts are all distinct
    return tuple(sorted(range(n), key=lambda x: bin(dn[x]).count("1")))


def exact_weighted_led(wp, node_budget=DEFAULT_NODE_BUDGET, initial=None):
    """Weighted linear extension diameter with a realizing pair.

    ``initial`` seeds the incumbent with a known pair of extensions; the
    search then only explores branches that could strictly improve on it.
    Raises CapExceeded when the node budget runs out.
    """
    p, weight = _as_weighted(wp)
    n = p.n
    pairs = []
    W = [[0] * n for _ in range(n)]
    for x in range(n):
        rest = p.incmask[x] >> (x + 1)
        for off in bit_indices(rest):
            y = x + 1 + off
            w = weight[x] * weight[y]
            W[x][y] = W[y][x] = w
            pairs.append((w, x, y))
    pairs.sort(key=lambda t: (-t[0], t[1], t[2]))

    best = -1
    best_pair = None
    if initial is not None:
        l1, l2 = initial
        _require_le(p, l1, "initial first extension")
        _require_le(p, l2, "initial second extension")
        best = weighted_distance(wp, l1, l2)
        best_pair = (tuple(l1), tuple(l2))

    if not pairs:
        le = _lexmin_le(n, p.below)
        return 0, (le, le)

    up = [list(p.above), list(p.above)]
    dn = [list(p.below), list(p.below)]
    trail = []
    nodes = 0

    def apply(side, x, y):
        """Add x -> y to side's closure; returns (gain delta, decided weight)."""
        u, d = up[side], dn[side]
        ou, od = up[side ^ 1], dn[side ^ 1]
        srcs = d[x] | (1 << x)
        dsts = u[y] | (1 << y)
        dg = dp = 0
        for a in bit_indices(srcs):
            add = dsts & ~u[a]
            for b in bit_indices(add):
                u[a] |= 1 << b
                d[b] |= 1 << a
                trail.append((side, a, b))
                if ou[a] & (1 << b):
                    dp += W[a][b]
                elif od[a] & (1 << b):
                    dp += W[a][b]
                    dg += W[a][b]
        return dg, dp

    def branch(ptr, gain, pot):
        nonlocal best, best_pair, nodes
        if gain + pot <= best:
            return
        if pot == 0:
            best = gain
            best_pair = (_lexmin_le(n, dn[0]), _lexmin_le(n, dn[1]))
            return
        while True:
            w, x, y = pairs[ptr]
            bit = 1 << y
            dec1 = (up[0][x] | dn[0][x]) & bit
            dec2 = (up[1][x] | dn[1][x]) & bit
            if dec1 and dec2:
                ptr += 1
                continue
            break
        nodes += 1
        if nodes > node_budget:
            raise CapExceeded(node_budget, f"orientation search passed {node_budget} nodes")
        # opposite orientations first so strong incumbents appear early
        for o1, o2 in ((0, 1), (1, 0), (0, 0), (1, 1)):
            mark = len(trail)
            ok = True
            dg = dp = 0
            for side, o in ((0, o1), (1, o2)):
                a, b = (x, y) if o == 0 else (y, x)
                if up[side][a] & (1 << b):
                    continue
                if dn[side][a] & (1 << b):
                    ok = False
                    break
                g1, p1 = apply(side, a, b)
                dg += g1
                dp += p1
            if ok:
                branch(ptr + 1, gain + dg, pot - dp)
            while len(trail) > mark:
                side, a, b = trail.pop()
                up[side][a] &= ~(1 << b)
                dn[side][b] &= ~(1 << a)

    limit = len(pairs) * 2 + 200
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    branch(0, 0, sum(w for w, _, _ in pairs))
    return best, best_pair
