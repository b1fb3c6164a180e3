"""Search-instance plumbing: vertex enumeration, adjacency, greedy cliques.

A search instance is the compatibility graph over all words of weight at
most e: vertices are the words (stored as packed ints) and edges join
pairs at Hamming distance at least d.  Maximum cliques of this graph are
exactly the maximum bounded-weight codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ORACLE_MAX_N = 32


def iter_weight_exact(n: int, w: int):
    """Yield weight-w ints below 2^n in increasing order (Gosper's hack)."""
    if w == 0:
        yield 0
        return
    x = (1 << w) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def words_up_to_weight(n: int, e: int) -> list[int]:
    """All words of weight <= e, ordered by weight descending then value."""
    out: list[int] = []
    for w in range(min(e, n), -1, -1):
        out.extend(iter_weight_exact(n, w))
    return out


@dataclass
class Instance:
    """Compatibility graph for an (n, d, e) search, with bitset adjacency."""

    n: int
    d: int
    e: int
    words: list[int]                      # vertex id -> packed word
    adj: list[int] = field(repr=False)    # vertex id -> neighbor bitmask
    index: dict[int, int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.words)

    def weight(self, v: int) -> int:
        return self.words[v].bit_count()


def build_instance(n: int, d: int, e: int) -> Instance:
    if not 1 <= e <= n:
        raise ValueError(f"need 1 <= e <= n, got e={e}, n={n}")
    if n > ORACLE_MAX_N:
        raise ValueError(f"exact search capped at n <= {ORACLE_MAX_N}, got {n}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d={d}")
    words = words_up_to_weight(n, e)
    m = len(words)
    adj = [0] * m
    for i in range(m):
        wi = words[i]
        for j in range(i + 1, m):
            if (wi ^ words[j]).bit_count() >= d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Instance(n, d, e, words, adj, {w: i for i, w in enumerate(words)})


def greedy_clique_order(inst: Instance, order: list[int]) -> list[int]:
    """Greedy maximal clique scanned in the given vertex order."""
    allowed = (1 << inst.size) - 1
    picked: list[int] = []
    for v in order:
        if (allowed >> v) & 1:
            picked.append(v)
            allowed &= inst.adj[v]
    return picked


def greedy_orders(inst: Instance) -> list[list[int]]:
    """A small portfolio of scan orders for the initial incumbent."""
    m = inst.size
    base = list(range(m))  # weight desc, then value
    by_weight_asc = sorted(base, key=lambda v: (inst.weight(v), inst.words[v]))
    same_parity = [v for v in base if inst.weight(v) % 2 == inst.e % 2]
    other_parity = [v for v in base if inst.weight(v) % 2 != inst.e % 2]
    return [base, same_parity + other_parity, by_weight_asc]


def best_greedy_clique(inst: Instance) -> list[int]:
    best: list[int] = []
    for order in greedy_orders(inst):
        picked = greedy_clique_order(inst, order)
        if len(picked) > len(best):
            best = picked
    return best


def verify_clique(inst: Instance, vertices: list[int]) -> None:
    """Assert the vertex set really is pairwise compatible (defense in depth)."""
    for a_pos, v in enumerate(vertices):
        for u in vertices[a_pos + 1:]:
            if (inst.words[v] ^ inst.words[u]).bit_count() < inst.d:
                raise AssertionError(
                    f"internal error: reported clique violates distance "
                    f"{inst.d} on words {inst.words[v]:b}, {inst.words[u]:b}"
                )
