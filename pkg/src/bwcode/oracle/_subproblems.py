"""Symmetry-reduced subproblem enumeration for the exact search.

Coordinate permutations preserve weights and distances, so a maximum code
can always be permuted so that its maximum-weight word is the left-packed
pattern 1^w 0^(n-w).  That gives one subproblem per weight w (base size
1).  Large subproblems are split once more: the stabilizer of the first
word is the product of the symmetric groups on its support and co-support,
so a second codeword is determined up to symmetry by how much of its
weight sits inside the first word's support.  Each (w, t, i) orbit
representative yields a base-2 subproblem; together with the singleton
case this is exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass

from bwcode.oracle._instance import Instance

# Only split to base-2 subproblems when the base-1 candidate set is big.
LEVEL2_MIN_CANDIDATES = 96


@dataclass(frozen=True)
class Subproblem:
    """A base clique plus the candidate set that may extend it."""

    base: tuple[int, ...]       # vertex ids, pairwise compatible
    candidates: int             # bitmask over vertex ids
    label: str

    @property
    def base_size(self) -> int:
        return len(self.base)


def left_packed(n: int, w: int) -> int:
    """The word 1^w 0^(n-w)."""
    return ((1 << w) - 1) << (n - w)


def second_word_pattern(n: int, w: int, t: int, i: int) -> int:
    """Weight-t word with i ones inside [1..w], left-packed in both parts."""
    inside = ((1 << i) - 1) << (w - i) if i else 0
    outside = ((1 << (t - i)) - 1) << (n - w - (t - i)) if t - i else 0
    return (inside << (n - w)) | outside


def _candidates_below_weight(inst: Instance, anchor: int, w: int) -> int:
    """Bitmask of vertices of weight <= w compatible with `anchor`."""
    mask = 0
    adj_anchor = inst.adj[anchor]
    for j in range(inst.size):
        if j != anchor and inst.weight(j) <= w and (adj_anchor >> j) & 1:
            mask |= 1 << j
    return mask


def canonical_subproblems(inst: Instance, level2: bool = True) -> list[Subproblem]:
    """Exhaustive list of symmetry-reduced subproblems for the full search."""
    n, d, e = inst.n, inst.d, inst.e
    subs: list[Subproblem] = []
    for w in range(min(e, n), -1, -1):
        u = inst.index[left_packed(n, w)]
        cand = _candidates_below_weight(inst, u, w)
        count = cand.bit_count()
        if not level2 or count < LEVEL2_MIN_CANDIDATES:
            subs.append(Subproblem((u,), cand, f"w={w}"))
            continue
        # split on the orbit of the second word under the first's stabilizer
        for t in range(w, -1, -1):
            for i in range(min(w, t), -1, -1):
                if t - i > n - w:
                    continue
                if w + t - 2 * i < d:
                    continue
                v_bits = second_word_pattern(n, w, t, i)
                v = inst.index[v_bits]
                if not (cand >> v) & 1:
                    continue
                pair_cand = cand & inst.adj[v] & ~(1 << v)
                subs.append(Subproblem((u, v), pair_cand, f"w={w},t={t},i={i}"))
    return subs


def forced_subproblem(inst: Instance, forced: list[int]) -> Subproblem:
    """Single subproblem for a search that must contain the given vertices."""
    cand = (1 << inst.size) - 1
    for v in forced:
        cand &= inst.adj[v]
    for v in forced:
        cand &= ~(1 << v)
    return Subproblem(tuple(forced), cand, "forced")
