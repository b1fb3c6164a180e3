"""Constructions for bounded-weight codes.

Covers the lower-bound side of the toolkit: greedy constant-weight codes,
the constant-weight-plus-zero construction, coordinate puncturing, the
weight-two lifting trick, and verbatim optimal codes for small lengths
found by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from bwcode.core import Code, Word


@dataclass(frozen=True)
class GreedyScan:
    """Result of a (possibly work-capped) greedy scan."""

    code: Code
    exhausted: bool  # True when every candidate word was considered


def _iter_weight_w(n: int, w: int):
    """Yield all weight-w ints below 2^n in increasing order (Gosper's hack)."""
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


@lru_cache(maxsize=32)
def greedy_constant_weight_code(
    n: int, d: int, w: int, max_candidates: int | None = None
) -> GreedyScan:
    """Greedy lexicographic constant-weight code (a lower bound witness).

    Scans weight-w words in increasing order, keeping each word that stays
    at distance >= d from everything kept so far.  Two weight-w words are
    at distance >= d iff their supports share at most w - ceil(d/2)
    positions, so conflicts are detected by hashing the forbidden support
    subsets instead of pairwise distance checks.

    ``max_candidates`` caps the number of words scanned; a truncated scan
    still yields a valid code, just not necessarily a maximal one.
    """
    if n < 0 or w < 0 or d < 1:
        raise ValueError(f"bad parameters n={n} d={d} w={w}")
    if w > n:
        return GreedyScan(Code([], n=max(n, 1)), True)
    if w == 0:
        return GreedyScan(Code([Word.zero(n)]), True)
    t = w - (d + 1) // 2  # max tolerated support overlap
    accepted: list[int] = []
    covered: set[tuple[int, ...]] = set()
    exhausted = True
    scanned = 0
    for cand in _iter_weight_w(n, w):
        if max_candidates is not None and scanned >= max_candidates:
            exhausted = False
            break
        scanned += 1
        if t < 0:
            if accepted:
                continue
            accepted.append(cand)
            continue
        positions = [b for b in range(cand.bit_length()) if (cand >> b) & 1]
        keys = list(combinations(positions, t + 1))
        if any(k in covered for k in keys):
            continue
        accepted.append(cand)
        covered.update(keys)
    words = [Word(n, v) for v in accepted]
    return GreedyScan(Code(words, n=n), exhausted)


def cwc_plus_zero(cw: Code) -> Code:
    """Adjoin the zero word to a constant-weight code.

    The new minimum distance is min(old distance, the common weight); the
    caller is expected to re-validate if that matters.
    """
    zero = Word.zero(cw.n)
    if zero in cw:
        raise ValueError("code already contains the zero word")
    return Code(list(cw.words) + [zero], n=cw.n)


def puncture(code: Code, position: int) -> Code:
    """Delete one coordinate (1-based) from every codeword.

    Length drops by one and the minimum distance by at most one.  If two
    codewords collide after deletion the operation is refused.
    """
    n = code.n
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside 1..{n}")
    if n < 2:
        raise ValueError("cannot puncture a length-1 code")
    b = n - position
    low_mask = (1 << b) - 1
    seen: dict[int, Word] = {}
    out = []
    for w in code:
        bits = ((w.bits >> (b + 1)) << b) | (w.bits & low_mask)
        if bits in seen:
            raise ValueError(
                f"puncturing at position {position} merges {seen[bits]} and {w}"
            )
        seen[bits] = w
        out.append(Word(n - 1, bits))
    return Code(out, n=n - 1)


def lift_weight_two(code: Code, position: int) -> Code:
    """Turn every weight-2 word into a weight-3 word by setting `position`.

    Requires a distance-4 code of maximum weight 3 whose weight-2 words
    all have 0 at the given position; under those conditions the lift
    preserves size and keeps the minimum distance at least 4 (weight-2
    words sit at distance 5 from every weight-3 word, so the single
    flipped coordinate cannot drop any pair below 4).
    """
    n = code.n
    if not 1 <= position <= n:
        raise ValueError(f"position {position} outside 1..{n}")
    if code.max_weight() > 3:
        raise ValueError("lift applies to codes of maximum weight 3")
    if len(code) >= 2 and code.min_distance() < 4:
        raise ValueError("lift applies to codes of minimum distance >= 4")
    bit = 1 << (n - position)
    out = []
    for w in code:
        if w.weight == 2:
            if w.bits & bit:
                raise ValueError(
                    f"weight-2 word {w} already has a 1 at position {position}"
                )
            out.append(Word(n, w.bits | bit))
        else:
            out.append(w)
    return Code(out, n=n)


# Optimal bounded-weight codes (d=4, e=4) for small lengths, found by
# exhaustive search; sizes 4, 8 and 19.
_KNOWN_OPTIMAL = {
    6: ("111000", "100101", "010110", "001011"),
    7: ("0000000", "1110010", "1101001", "1010101", "1001110", "0111100",
        "0100111", "0011011"),
    9: ("000000000", "111010000", "110100100", "110001001", "101100001",
        "101000110", "100101010", "100011100", "100010011", "011100010",
        "011001100", "010110001", "010011010", "010000111", "001111000",
        "001010101", "001001011", "000110110", "000101101"),
}


def known_optimal_code(n: int) -> Code:
    """The embedded optimal distance-4 weight<=4 code of length n (6, 7 or 9)."""
    if n not in _KNOWN_OPTIMAL:
        raise ValueError(f"no embedded optimal code for n={n} (have 6, 7, 9)")
    return Code([Word.from_string(s) for s in _KNOWN_OPTIMAL[n]], n=n)
