"""Pure-Python twins of the compiled search kernels.

Same algorithms as ``_numba_kernels`` but over arbitrary-precision int
bitmasks; used when numba is unavailable or BWCODE_PURE=1 is set.  Slower
by roughly two orders of magnitude, fine for small instances.
"""

from __future__ import annotations

import random


def color_renumber(adj: list[int], P: int, threshold: int) -> tuple[list[int], list[int]]:
    """Greedy coloring with single-conflict recoloring below `threshold`.

    Returns (order, colors) with colors nondecreasing.
    """
    classes: list[int] = []
    uncol = P
    while uncol:
        cidx = len(classes)
        cmask = 0
        Q = uncol
        while Q:
            b = Q & -Q
            v = b.bit_length() - 1
            placed = False
            limit = min(cidx, threshold)
            if cidx + 1 > threshold and limit >= 2:
                for k1 in range(limit - 1):
                    x = classes[k1] & adj[v]
                    if x and (x & (x - 1)) == 0:  # exactly one conflict
                        cw = x.bit_length() - 1
                        for k2 in range(k1 + 1, limit):
                            if classes[k2] & adj[cw] == 0:
                                classes[k1] = (classes[k1] & ~x) | b
                                classes[k2] |= x
                                placed = True
                                break
                        if placed:
                            break
            if not placed:
                cmask |= b
            uncol &= ~b
            Q &= ~adj[v] & ~b
        classes.append(cmask)
    order: list[int] = []
    colors: list[int] = []
    for ci, cmask in enumerate(classes, start=1):
        while cmask:
            b = cmask & -cmask
            cmask &= ~b
            order.append(b.bit_length() - 1)
            colors.append(ci)
    return order, colors


class MCSState:
    """Resumable state for the coloring branch and bound."""

    def __init__(self, P0: int):
        self.P = [P0]
        self.order: list[list[int]] = [[]]
        self.colors: list[list[int]] = [[]]
        self.ptr: list[int] = [-1]
        self.chosen: list[int] = [-1]
        self.sp = 0
        self.fresh = True
        self.done = False


def mcs_chunk(adj: list[int], state: MCSState, base_size: int, best_in: int,
              witness: list[int], node_budget: int) -> tuple[int, int, bool]:
    """Run the coloring branch and bound for at most node_budget nodes.

    Returns (best, nodes, done); improved witnesses are written in place.
    """
    best = best_in
    nodes = 0
    P = state.P
    order, colors, ptr, chosen = state.order, state.colors, state.ptr, state.chosen
    sp = state.sp
    if state.fresh:
        state.fresh = False
        thr = max(best - base_size, 0)
        order[0], colors[0] = color_renumber(adj, P[0], thr)
        ptr[0] = len(order[0]) - 1
        nodes += 1
    while sp >= 0:
        i = ptr[sp]
        if i < 0 or base_size + sp + colors[sp][i] <= best:
            sp -= 1
            continue
        v = order[sp][i]
        ptr[sp] = i - 1
        chosen[sp] = v
        child = P[sp] & adj[v]
        P[sp] &= ~(1 << v)
        if child == 0:
            size = base_size + sp + 1
            if size > best:
                best = size
                witness[:] = chosen[: sp + 1]
        else:
            sp += 1
            thr = max(best - base_size - sp, 0)
            o, c = color_renumber(adj, child, thr)
            if len(P) == sp:
                P.append(child)
                order.append(o)
                colors.append(c)
                ptr.append(len(o) - 1)
                chosen.append(-1)
            else:
                P[sp] = child
                order[sp] = o
                colors[sp] = c
                ptr[sp] = len(o) - 1
                chosen[sp] = -1
            nodes += 1
            if nodes >= node_budget:
                state.sp = sp
                return best, nodes, False
    state.sp = -1
    state.done = True
    return best, nodes, True


def chi_greedy(adj: list[int], U: int, limit: int) -> int:
    """Greedy coloring count of U, stopping once above `limit`."""
    c = 0
    uncol = U
    while uncol:
        c += 1
        if c > limit:
            return c
        Q = uncol
        while Q:
            b = Q & -Q
            v = b.bit_length() - 1
            uncol &= ~b
            Q &= ~adj[v] & ~b
    return c


class SuffixState:
    """Resumable state for the suffix-table branch and bound."""

    def __init__(self, m: int, sub_mask: int):
        self.sub_mask = sub_mask
        self.ctab = [0] * (m + 2)
        self.i_next = m - 1
        self.done = False


def suffix_chunk(adj: list[int], m: int, state: SuffixState, best_in: int,
                 witness: list[int], node_budget: int,
                 color_min_size: int) -> tuple[int, int, bool]:
    """Suffix-table branch and bound (interrupted levels restart)."""
    best = best_in
    nodes = 0
    sub_mask = state.sub_mask
    ctab = state.ctab
    for i in range(state.i_next, -1, -1):
        if not (sub_mask >> i) & 1:
            ctab[i] = ctab[i + 1]
            continue
        found = False
        hi_mask = ~((1 << (i + 1)) - 1)
        stack = [adj[i] & sub_mask & hi_mask]
        chosen = [i]
        while stack:
            U = stack[-1]
            cnt = U.bit_count()
            size = len(stack)
            if cnt == 0:
                if size > best:
                    best = size
                    witness[:] = chosen[:size]
                    found = True
                stack.pop()
                chosen.pop()
                if found:
                    break
                continue
            if size + cnt <= best:
                stack.pop()
                chosen.pop()
                continue
            b = U & -U
            v = b.bit_length() - 1
            if size + ctab[v] <= best:
                stack.pop()
                chosen.pop()
                continue
            if cnt >= color_min_size:
                nodes += 1
                if size + chi_greedy(adj, U, best - size) <= best:
                    stack.pop()
                    chosen.pop()
                    continue
            stack[-1] &= ~b
            stack.append(U & adj[v] & ~b)
            chosen.append(v)
            nodes += 1
            if nodes >= node_budget:
                state.i_next = i
                return best, nodes, False
        ctab[i] = best
    state.i_next = -1
    state.done = True
    return best, nodes, True


def local_search(adj: list[int], m: int, iterations: int, seed: int,
                 target: int, witness: list[int]) -> int:
    """Plateau-and-swap clique finder (incumbent heuristic only)."""
    rng = random.Random(seed)
    in_c = 0
    cur: list[int] = []
    miss = [0] * m
    tabu_until = [-1] * m
    best = 0

    def add(v: int) -> None:
        nonlocal in_c
        in_c |= 1 << v
        cur.append(v)
        non_nb = ~adj[v]
        for u in range(m):
            if (non_nb >> u) & 1:
                miss[u] += 1
        miss[v] -= 1

    def remove(pos: int, step: int) -> None:
        nonlocal in_c
        u = cur[pos]
        in_c &= ~(1 << u)
        cur[pos] = cur[-1]
        cur.pop()
        non_nb = ~adj[u]
        for t in range(m):
            if (non_nb >> t) & 1:
                miss[t] -= 1
        miss[u] += 1
        tabu_until[u] = step + 7

    for step in range(iterations):
        adds = [v for v in range(m)
                if not (in_c >> v) & 1 and miss[v] == 0 and tabu_until[v] < step]
        if adds:
            add(rng.choice(adds))
            if len(cur) > best:
                best = len(cur)
                witness[:] = cur
                if target and best >= target:
                    return best
            continue
        swaps = [v for v in range(m)
                 if not (in_c >> v) & 1 and miss[v] == 1 and tabu_until[v] < step]
        if swaps and len(cur) > 1:
            v = rng.choice(swaps)
            blockers = in_c & ~adj[v]
            remove(cur.index(blockers.bit_length() - 1), step)
            add(v)
            continue
        # stuck: restart
        in_c = 0
        cur.clear()
        miss = [0] * m
        tabu_until = [-1] * m
        add(rng.randrange(m))
    return best
