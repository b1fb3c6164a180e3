"""Numba-compiled search kernels over uint64-array bitsets.

Three kernels, all deterministic and resumable via node budgets so the
caller keeps wall-clock control (and the compiled code stays cacheable):

* ``mcs_chunk``       - branch and bound with greedy coloring bounds and
                        single-conflict recoloring (strong on even-d,
                        sparser compatibility graphs).
* ``suffix_chunk``    - suffix-table branch and bound in the style of
                        Ostergard's cliquer, with an optional greedy
                        coloring cut at node entry (strong on odd-d,
                        dense compatibility graphs).
* ``local_search``    - penalty-free plateau search used only to find
                        good incumbent cliques quickly; never used as a
                        bound.

Vertices are ints 0..m-1; bitsets are little-endian uint64 words.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

_DB_CONST = 0x03F79D71B4CB0A89

CTZ_TABLE = np.zeros(64, np.int64)
for _i in range(64):
    CTZ_TABLE[(((1 << _i) * _DB_CONST) & ((1 << 64) - 1)) >> 58] = _i

POP16_TABLE = np.zeros(1 << 16, np.int64)
for _i in range(1, 1 << 16):
    POP16_TABLE[_i] = POP16_TABLE[_i >> 1] + (_i & 1)


@njit(cache=True, nogil=True, inline="always")
def _popcnt64(x, pop):
    m16 = uint64(0xFFFF)
    return (pop[x & m16] + pop[(x >> uint64(16)) & m16]
            + pop[(x >> uint64(32)) & m16] + pop[(x >> uint64(48)) & m16])


@njit(cache=True, nogil=True)
def _color_renumber(adj, W, P, order, colors, sp, uncol, Q, cls, ctz, pop,
                    threshold):
    """Greedy coloring of P[sp] with recoloring below `threshold`.

    Emits vertices into order/colors (colors nondecreasing) and returns
    the count.  A vertex about to open a color class above the threshold
    is re-seated into a low class when it conflicts with exactly one
    vertex there and that vertex fits some other low class.
    """
    one = uint64(1)
    db = uint64(_DB_CONST)
    sh = uint64(58)
    filled = 0
    for k in range(W):
        uncol[k] = P[sp, k]
    ncls = 0
    while True:
        nonzero = False
        for k in range(W):
            if uncol[k] != 0:
                nonzero = True
                break
        if not nonzero:
            break
        c = ncls
        for k in range(W):
            Q[k] = uncol[k]
            cls[c, k] = uint64(0)
        while True:
            vk = -1
            for k in range(W):
                if Q[k] != 0:
                    vk = k
                    break
            if vk < 0:
                break
            b = Q[vk] & (uint64(0) - Q[vk])
            v = vk * 64 + ctz[(b * db) >> sh]
            placed = False
            L = c if c < threshold else threshold
            if c + 1 > threshold and L >= 2:
                for k1 in range(L - 1):
                    cw = -1
                    conflicts = 0
                    for k in range(W):
                        x = cls[k1, k] & adj[v * W + k]
                        if x != 0:
                            conflicts += _popcnt64(x, pop)
                            if conflicts > 1:
                                break
                            cw = k * 64 + ctz[((x & (uint64(0) - x)) * db) >> sh]
                    if conflicts != 1:
                        continue
                    for k2 in range(k1 + 1, L):
                        ok = True
                        for k in range(W):
                            if cls[k2, k] & adj[cw * W + k] != 0:
                                ok = False
                                break
                        if ok:
                            cls[k1, cw >> 6] &= ~(one << uint64(cw & 63))
                            cls[k2, cw >> 6] |= one << uint64(cw & 63)
                            cls[k1, v >> 6] |= one << uint64(v & 63)
                            placed = True
                            break
                    if placed:
                        break
            if not placed:
                cls[c, v >> 6] |= one << uint64(v & 63)
            uncol[v >> 6] &= ~(one << uint64(v & 63))
            for k in range(W):
                Q[k] &= ~adj[v * W + k]
            Q[v >> 6] &= ~(one << uint64(v & 63))
        ncls = c + 1
    for c in range(ncls):
        for k in range(W):
            x = cls[c, k]
            while x != 0:
                b = x & (uint64(0) - x)
                v = k * 64 + ctz[(b * db) >> sh]
                x &= ~b
                order[sp, filled] = v
                colors[sp, filled] = c + 1
                filled += 1
    return filled


@njit(cache=True, nogil=True)
def mcs_chunk(adj, m, W, P, order, colors, ptr, chosen, sp_in, fresh,
              base_size, best_in, witness, wit_len_in, node_budget,
              ctz, pop, cls):
    """Resumable coloring branch and bound.

    Returns (best, nodes, sp, wit_len, done); state lives in the caller's
    arrays so a later call continues exactly where this one stopped.
    """
    one = uint64(1)
    uncol = np.zeros(W, np.uint64)
    Q = np.zeros(W, np.uint64)
    child = np.zeros(W, np.uint64)
    best = best_in
    wit_len = wit_len_in
    nodes = 0
    sp = sp_in
    if fresh == 1:
        thr = best - base_size
        cnt = _color_renumber(adj, W, P, order, colors, 0, uncol, Q, cls,
                              ctz, pop, thr if thr > 0 else 0)
        ptr[0] = cnt - 1
        nodes += 1
    while sp >= 0:
        i = ptr[sp]
        if i < 0:
            sp -= 1
            continue
        if base_size + sp + colors[sp, i] <= best:
            sp -= 1
            continue
        v = order[sp, i]
        ptr[sp] = i - 1
        chosen[sp] = v
        empty = True
        for k in range(W):
            t = P[sp, k] & adj[v * W + k]
            child[k] = t
            if t != 0:
                empty = False
        P[sp, v >> 6] &= ~(one << uint64(v & 63))
        if empty:
            size = base_size + sp + 1
            if size > best:
                best = size
                wit_len = sp + 1
                for j in range(sp + 1):
                    witness[j] = chosen[j]
        else:
            sp += 1
            for k in range(W):
                P[sp, k] = child[k]
            thr = best - base_size - sp
            cnt = _color_renumber(adj, W, P, order, colors, sp, uncol, Q, cls,
                                  ctz, pop, thr if thr > 0 else 0)
            ptr[sp] = cnt - 1
            nodes += 1
            if nodes >= node_budget:
                return best, nodes, sp, wit_len, False
    return best, nodes, -1, wit_len, True


@njit(cache=True, nogil=True)
def _chi_greedy(adj, W, U, limit, uncol, Q, ctz):
    """Greedy coloring count of the set U, stopping once above `limit`."""
    one = uint64(1)
    db = uint64(_DB_CONST)
    sh = uint64(58)
    c = 0
    for k in range(W):
        uncol[k] = U[k]
    while True:
        nz = False
        for k in range(W):
            if uncol[k] != 0:
                nz = True
                break
        if not nz:
            break
        c += 1
        if c > limit:
            return c
        for k in range(W):
            Q[k] = uncol[k]
        while True:
            vk = -1
            for k in range(W):
                if Q[k] != 0:
                    vk = k
                    break
            if vk < 0:
                break
            b = Q[vk] & (uint64(0) - Q[vk])
            v = vk * 64 + ctz[(b * db) >> sh]
            uncol[v >> 6] &= ~(one << uint64(v & 63))
            for k in range(W):
                Q[k] &= ~adj[v * W + k]
            Q[v >> 6] &= ~(one << uint64(v & 63))
    return c


@njit(cache=True, nogil=True)
def suffix_chunk(adj, m, W, sub_mask, ctab, i_start, best_in, witness,
                 wit_len_in, node_budget, ctz, pop, color_min_size):
    """Resumable suffix-table branch and bound over sub_mask.

    ctab[i] upper-bounds cliques within {v_j : j >= i} ∩ sub_mask; levels
    run from i_start down to 0, each looking for one clique larger than
    the running best that contains v_i (first hit wins).  Candidate sets
    of at least `color_min_size` vertices also get a greedy-coloring cut.
    Returns (best, wit_len, nodes, i_next, done); an interrupted level is
    restarted from scratch on resume.
    """
    one = uint64(1)
    db = uint64(_DB_CONST)
    sh = uint64(58)
    best = best_in
    wit_len = wit_len_in
    nodes = 0
    U = np.zeros((m + 2, W), np.uint64)
    chosen = np.zeros(m + 2, np.int64)
    uncol = np.zeros(W, np.uint64)
    Q = np.zeros(W, np.uint64)

    for i in range(i_start, -1, -1):
        if (sub_mask[i >> 6] >> uint64(i & 63)) & one == uint64(0):
            ctab[i] = ctab[i + 1]
            continue
        found = False
        kw = i >> 6
        bi = i & 63
        if bi == 63:
            mask_hi = uint64(0)
        else:
            mask_hi = ~((one << uint64(bi + 1)) - one)
        for k in range(kw):
            U[0, k] = uint64(0)
        U[0, kw] = adj[i * W + kw] & sub_mask[kw] & mask_hi
        for k in range(kw + 1, W):
            U[0, k] = adj[i * W + k] & sub_mask[k]
        chosen[0] = i
        sp = 0
        while sp >= 0:
            cnt = 0
            for k in range(W):
                cnt += _popcnt64(U[sp, k], pop)
            size = sp + 1
            if cnt == 0:
                if size > best:
                    best = size
                    wit_len = size
                    for j in range(size):
                        witness[j] = chosen[j]
                    found = True
                sp -= 1
                if found:
                    break
                continue
            if size + cnt <= best:
                sp -= 1
                continue
            vk = -1
            for k in range(W):
                if U[sp, k] != 0:
                    vk = k
                    break
            b = U[sp, vk] & (uint64(0) - U[sp, vk])
            v = vk * 64 + ctz[(b * db) >> sh]
            if size + ctab[v] <= best:
                sp -= 1
                continue
            if cnt >= color_min_size:
                chi = _chi_greedy(adj, W, U[sp], best - size, uncol, Q, ctz)
                nodes += 1
                if size + chi <= best:
                    sp -= 1
                    continue
            U[sp, vk] &= ~b
            chosen[sp + 1] = v
            for k in range(W):
                U[sp + 1, k] = U[sp, k] & adj[v * W + k]
            sp += 1
            nodes += 1
            if nodes >= node_budget:
                return best, wit_len, nodes, i, False
        ctab[i] = best
    return best, wit_len, nodes, -1, True


@njit(cache=True, nogil=True)
def local_search(adj, m, W, iterations, seed, target, witness):
    """Plateau-and-swap clique search; returns the best clique size found.

    Moves: add any vertex compatible with the whole clique; otherwise swap
    in a vertex conflicting with exactly one member (short tabu on the
    ejected member); otherwise restart from a random vertex.  Purely a
    lower-bound finder; the witness is written into `witness`.
    """
    one = uint64(1)
    rng = uint64(seed * 2685821657736338717 + 1442695040888963407)
    miss = np.zeros(m, np.int64)       # clique members not adjacent to v
    in_c = np.zeros(m, np.int64)
    tabu_until = np.full(m, -1, np.int64)
    cur = np.zeros(m + 1, np.int64)    # members list
    csize = 0
    best = 0
    wit_len = 0
    buf = np.zeros(m, np.int64)

    for step in range(iterations):
        # collect admissible additions
        nadd = 0
        for v in range(m):
            if in_c[v] == 0 and miss[v] == 0 and tabu_until[v] < step:
                buf[nadd] = v
                nadd += 1
        if nadd > 0:
            rng ^= rng << uint64(13)
            rng ^= rng >> uint64(7)
            rng ^= rng << uint64(17)
            v = buf[int(rng % uint64(nadd))]
            in_c[v] = 1
            cur[csize] = v
            csize += 1
            for u in range(m):
                if (adj[v * W + (u >> 6)] >> uint64(u & 63)) & one == uint64(0):
                    miss[u] += 1
            miss[v] -= 1  # v is not its own non-neighbor
            if csize > best:
                best = csize
                wit_len = csize
                for j in range(csize):
                    witness[j] = cur[j]
                if target > 0 and best >= target:
                    return best
            continue
        # collect 1-conflict swaps
        nsw = 0
        for v in range(m):
            if in_c[v] == 0 and miss[v] == 1 and tabu_until[v] < step:
                buf[nsw] = v
                nsw += 1
        if nsw > 0 and csize > 1:
            rng ^= rng << uint64(13)
            rng ^= rng >> uint64(7)
            rng ^= rng << uint64(17)
            v = buf[int(rng % uint64(nsw))]
            # find the unique member blocking v
            blocker = -1
            for jj in range(csize):
                u = cur[jj]
                if (adj[v * W + (u >> 6)] >> uint64(u & 63)) & one == uint64(0):
                    blocker = jj
                    break
            u = cur[blocker]
            in_c[u] = 0
            cur[blocker] = cur[csize - 1]
            csize -= 1
            for t in range(m):
                if (adj[u * W + (t >> 6)] >> uint64(t & 63)) & one == uint64(0):
                    miss[t] -= 1
            miss[u] += 1
            tabu_until[u] = step + 7
            in_c[v] = 1
            cur[csize] = v
            csize += 1
            for t in range(m):
                if (adj[v * W + (t >> 6)] >> uint64(t & 63)) & one == uint64(0):
                    miss[t] += 1
            miss[v] -= 1
            continue
        # stuck: restart from a random vertex
        for jj in range(csize):
            in_c[cur[jj]] = 0
        for t in range(m):
            miss[t] = 0
            tabu_until[t] = -1
        csize = 0
        rng ^= rng << uint64(13)
        rng ^= rng >> uint64(7)
        rng ^= rng << uint64(17)
        v = int(rng % uint64(m))
        in_c[v] = 1
        cur[0] = v
        csize = 1
        for u in range(m):
            if (adj[v * W + (u >> 6)] >> uint64(u & 63)) & one == uint64(0):
                miss[u] += 1
        miss[v] -= 1
    return best
