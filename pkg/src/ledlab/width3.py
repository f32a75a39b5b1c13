"""Diameter of posets of width at most three, in polynomial time.

The poset is split into three chains.  States are downsets D (tracked as a
triple of per-chain prefix counts) together with a signature per side: which
chain holds the top element of the extension and at which top-down position
the second chain first shows up.  led_D[(V,W), i, (X,Y), j] is the largest
distance between two extensions of P_D carrying those signatures.  Removing
the top element of a chain common to both signatures reduces D by one element,
so tables are filled downset by downset in ascending size.

Extensions that never leave their first chain exist only when D lies inside a
single chain; such downsets are handled as bases (value 0), as are downsets
that are a chain plus one element, where every extension is pinned by one
insertion position.
"""

from __future__ import annotations

import numpy as np

from .errors import WidthExceeded
from .poset import bit_indices, decompose

NEG = -(1 << 30)

SIGS = ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))
SIG_INDEX = {vw: k for k, vw in enumerate(SIGS)}


def _others(c):
    return tuple(z for z in range(3) if z != c)


def chain_cover(p):
    """Three chains, bottom element first, padded with empty chains."""
    dec = decompose(p)
    if len(dec.chains) > 3:
        raise WidthExceeded(f"width {len(dec.chains)} poset handed to the width-3 solver")
    chains = [tuple(reversed(ch)) for ch in dec.chains]
    while len(chains) < 3:
        chains.append(())
    return tuple(chains)


def enumerate_downsets(p, chains=None):
    """All downsets as per-chain prefix count triples, ascending by size."""
    if chains is None:
        chains = chain_cover(p)
    lens = [len(c) for c in chains]
    prefix_mask = []
    need_mask = []
    for c in range(3):
        pm = [0]
        nm = [0]
        for q, x in enumerate(chains[c]):
            pm.append(pm[q] | (1 << x))
            nm.append(nm[q] | p.below[x])
        prefix_mask.append(pm)
        need_mask.append(nm)
    out = []
    for ta in range(lens[0] + 1):
        for tb in range(lens[1] + 1):
            for tc in range(lens[2] + 1):
                t = (ta, tb, tc)
                s = prefix_mask[0][ta] | prefix_mask[1][tb] | prefix_mask[2][tc]
                need = need_mask[0][ta] | need_mask[1][tb] | need_mask[2][tc]
                if not (need & ~s):
                    out.append(t)
    out.sort(key=sum)
    return out


def feasibility_check(p, chains, counts, removed, prefix_chain, prefix_len):
    """One-sided placement check for the removed top element.

    prefix = the top ``prefix_len`` elements of ``prefix_chain`` inside the
    downset given by ``counts`` (zero for a side whose extension starts with
    the removed element).  True iff every successor of ``removed`` inside the
    downset lies in the prefix and ``removed`` is incomparable to every prefix
    element.
    """
    dmask = 0
    for c in range(3):
        for q in range(counts[c]):
            dmask |= 1 << chains[c][q]
    tc = counts[prefix_chain]
    pref = 0
    for q in range(tc - prefix_len, tc):
        pref |= 1 << chains[prefix_chain][q]
    if p.above[removed] & dmask & ~pref:
        return False
    if (p.above[removed] | p.below[removed]) & pref:
        return False
    return True


class Width3Solver:
    """Fills the downset tables; retain=True keeps them all for inspection."""

    def __init__(self, p, retain=False):
        self.p = p
        self.retain = retain
        self.chains = chain_cover(p)
        self.downsets = enumerate_downsets(p, self.chains)
        self.tables = {}
        self.value = None
        # prefix element masks per chain
        self.pm = []
        for c in range(3):
            pm = [0]
            for q, x in enumerate(self.chains[c]):
                pm.append(pm[q] | (1 << x))
            self.pm.append(pm)
        self.L = p.n + 2

    # -- small helpers ------------------------------------------------------

    def _dmask(self, t):
        return self.pm[0][t[0]] | self.pm[1][t[1]] | self.pm[2][t[2]]

    def _top(self, c, t):
        return self.chains[c][t[c] - 1]

    def _gbound(self, e, c, t):
        """Largest prefix length of chain c in D avoiding elements below e."""
        below_cnt = bin(self.p.below[e] & self.pm[c][t[c]]).count("1")
        return t[c] - below_cnt

    def _imask(self, limit):
        """Bool vector over positions: 2 <= i and i - 1 <= limit."""
        ii = np.arange(self.L)
        return (ii >= 2) & (ii - 1 <= limit)

    # -- per-downset table construction --------------------------------------

    def _base_single(self):
        return np.full((6, self.L, 6, self.L), NEG, dtype=np.int32)

    def _base_chain_plus_one(self, t, nonzero):
        T = self._base_single()
        a, b = nonzero
        if t[a] == t[b] == 1:
            v_chain, u_chain = (a, b)
        elif t[a] == 1:
            v_chain, u_chain = (b, a)
        else:
            v_chain, u_chain = (a, b)
        m = t[v_chain]
        x = self.chains[u_chain][0]
        vmask = self.pm[v_chain][m]
        g = bin(self.p.above[x] & vmask).count("1")
        low = bin(self.p.below[x] & vmask).count("1")
        sig_first = SIG_INDEX[(u_chain, v_chain)]
        sig_second = SIG_INDEX[(v_chain, u_chain)]

        def key(pos):
            return (sig_first, 2) if pos == 1 else (sig_second, pos)

        positions = range(g + 1, m - low + 2)
        for p1 in positions:
            k1, i1 = key(p1)
            for p2 in positions:
                k2, i2 = key(p2)
                T[k1, i1, k2, i2] = abs(p1 - p2)
        return T

    def _recursive_table(self, t, prev):
        T = self._base_single()
        s_mask = self._dmask(t)
        for s1, (V, W) in enumerate(SIGS):
            if t[V] == 0 or t[W] == 0:
                continue
            for s2, (X, Y) in enumerate(SIGS):
                if t[X] == 0 or t[Y] == 0:
                    continue
                if V == X:
                    grid = self._ff(t, s_mask, prev, V, W, Y)
                elif V == Y:
                    grid = self._fs(t, s_mask, prev, V, W, X)
                elif W == X:
                    grid = self._fs(t, s_mask, prev, X, Y, V)
                    if grid is not None:
                        grid = grid.T
                else:
                    grid = self._ss(t, s_mask, prev, V, W, X)
                if grid is not None:
                    T[s1, :, s2, :] = grid
        return T

    def _ff(self, t, s_mask, prev, V, W, Y):
        e = self._top(V, t)
        if self.p.above[e] & s_mask:
            return None
        t2 = tuple(t[c] - (c == V) for c in range(3))
        T2, SM2, RS2, CM2 = prev[t2]
        L = self.L
        G = np.full((L, L), NEG, dtype=np.int32)
        svw = SIG_INDEX[(V, W)]
        svy = SIG_INDEX[(V, Y)]
        G[3:L, 3:L] = T2[svw, 2 : L - 1, svy, 2 : L - 1]
        row = np.full(L, NEG, dtype=np.int32)
        for z in _others(W):
            row = np.maximum(row, CM2[SIG_INDEX[(W, z)], svy])
        G[2, 3:L] = row[2 : L - 1]
        col = np.full(L, NEG, dtype=np.int32)
        for z in _others(Y):
            col = np.maximum(col, CM2[SIG_INDEX[(Y, z)], svw])
        G[3:L, 2] = col[2 : L - 1]
        corner = NEG
        for z1 in _others(W):
            for z2 in _others(Y):
                corner = max(corner, int(SM2[SIG_INDEX[(W, z1)], 2, SIG_INDEX[(Y, z2)], 2]))
        G[2, 2] = corner
        w1 = self._top(W, t)
        y1 = self._top(Y, t)
        mi = self._imask(min(t[V], self._gbound(w1, V, t)))
        mj = self._imask(min(t[V], self._gbound(y1, V, t)))
        return np.where(mi[:, None] & mj[None, :], G, NEG)

    def _fs(self, t, s_mask, prev, V, W, X):
        """Common chain V first in side one, second in side two (chain X)."""
        e = self._top(V, t)
        if self.p.above[e] & s_mask:
            return None
        t2 = tuple(t[c] - (c == V) for c in range(3))
        T2, SM2, RS2, CM2 = prev[t2]
        L = self.L
        svw = SIG_INDEX[(V, W)]
        G = np.full((L, L), NEG, dtype=np.int32)
        body = np.full((L - 3, L), NEG, dtype=np.int32)
        for z in _others(X):
            body = np.maximum(body, RS2[svw, 2 : L - 1, SIG_INDEX[(X, z)], :])
        G[3:L, :] = body
        row = np.full(L, NEG, dtype=np.int32)
        for z1 in _others(W):
            for z in _others(X):
                row = np.maximum(row, SM2[SIG_INDEX[(W, z1)], 2, SIG_INDEX[(X, z)], :])
        G[2, :] = row
        jj = np.arange(L, dtype=np.int32)
        G = G + (jj - 1)[None, :]
        w1 = self._top(W, t)
        mi = self._imask(min(t[V], self._gbound(w1, V, t)))
        mj = self._imask(min(t[X], self._gbound(e, X, t)))
        return np.where(mi[:, None] & mj[None, :], G, NEG)

    def _ss(self, t, s_mask, prev, V, W, X):
        """Common chain W second on both sides; first chains V != X."""
        e = self._top(W, t)
        if self.p.above[e] & s_mask:
            return None
        t2 = tuple(t[c] - (c == W) for c in range(3))
        T2, SM2, RS2, CM2 = prev[t2]
        L = self.L
        G = np.full((L, L), NEG, dtype=np.int32)
        for z1 in _others(V):
            for z2 in _others(X):
                G = np.maximum(G, SM2[SIG_INDEX[(V, z1)], :, SIG_INDEX[(X, z2)], :])
        ii = np.arange(L, dtype=np.int32)
        G = G + (ii - 1)[:, None] + (ii - 1)[None, :]
        mi = self._imask(min(t[V], self._gbound(e, V, t)))
        mj = self._imask(min(t[X], self._gbound(e, X, t)))
        return np.where(mi[:, None] & mj[None, :], G, NEG)

    # -- driver ---------------------------------------------------------------

    @staticmethod
    def _helpers(T):
        SM = np.flip(np.maximum.accumulate(np.flip(T, axis=1), axis=1), axis=1)
        SM = np.flip(np.maximum.accumulate(np.flip(SM, axis=3), axis=3), axis=3)
        RS = np.flip(np.maximum.accumulate(np.flip(T, axis=3), axis=3), axis=3)
        CM = T.max(axis=1)
        return SM, RS, CM

    def solve(self):
        if self.value is not None:
            return self.value
        if self.p.n <= 1:
            self.value = 0
            return 0
        layers = {}
        for t in self.downsets:
            layers.setdefault(sum(t), []).append(t)
        prev = {}
        current = {}
        for size in sorted(layers):
            current = {}
            for t in layers[size]:
                nonzero = [c for c in range(3) if t[c] > 0]
                if len(nonzero) <= 1:
                    T = self._base_single()
                elif len(nonzero) == 2 and min(t[c] for c in nonzero) == 1:
                    T = self._base_chain_plus_one(t, nonzero)
                else:
                    T = self._recursive_table(t, prev)
                current[t] = (T, *self._helpers(T))
                if self.retain:
                    self.tables[t] = current[t]
            prev = current
        full = max(self.downsets, key=sum)
        self.value = self._value_of(current[full][0], full)
        return self.value

    @staticmethod
    def _value_of(T, t):
        if sum(1 for c in range(3) if t[c] > 0) <= 1:
            return 0
        return int(T.max())

    def downset_value(self, t):
        """Diameter of the induced subposet P_D, read off the stored table."""
        if not self.retain:
            raise ValueError("solver was not constructed with retain=True")
        return self._value_of(self.tables[t][0], t)


def dp_led_width3(p):
    """Linear extension diameter of a width <= 3 poset."""
    return Width3Solver(p).solve()
