"""Verification of codes: validity reports and list-decoding radius profiles.

The list profile of a code at radius e is the maximum number of codewords
any single radius-e ball can contain, together with the (lexicographically
smallest) center attaining it.  A code is list decodable at radius e with
list size ell iff its profile does not exceed ell.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from bwcode.core import Code, Word

# Refuse candidate-center enumerations beyond this many (center, word)
# pairs; the full-space scan or sampling is the way out for huge inputs.
CANDIDATE_PAIR_CAP = 20_000_000

FULL_SCAN_MAX_N = 20


@dataclass(frozen=True)
class ValidationReport:
    """What a code is, and whether it meets a (d, e) contract.

    Invalid codes produce a report with ``is_bounded_weight`` False rather
    than an exception; invalidity is data.  ``min_distance`` is None for
    codes with fewer than two words (vacuously valid for any d).
    """

    n: int
    size: int
    min_distance: int | None
    max_weight: int
    weight_histogram: dict[int, int]
    requested_d: int
    requested_e: int
    is_bounded_weight: bool


def validate(code: Code, d: int, e: int) -> ValidationReport:
    """Report whether ``code`` is a distance-d code of maximum weight e."""
    dist = code.min_distance() if len(code) >= 2 else None
    max_wt = code.max_weight()
    ok = (dist is None or dist >= d) and max_wt <= e and len(code) >= 1
    return ValidationReport(
        n=code.n,
        size=len(code),
        min_distance=dist,
        max_weight=max_wt,
        weight_histogram=code.weight_histogram(),
        requested_d=d,
        requested_e=e,
        is_bounded_weight=ok,
    )


@dataclass(frozen=True)
class ListProfile:
    """Worst ball occupancy of a code at a given radius."""

    radius: int
    max_occupancy: int
    witness_center: Word


def _ball_deltas(n: int, e: int) -> list[int]:
    """All ints of weight <= e (the XOR offsets spanning a radius-e ball)."""
    deltas = [0]
    for k in range(1, min(e, n) + 1):
        for positions in combinations(range(n), k):
            deltas.append(sum(1 << b for b in positions))
    return deltas


def _scan_chunk(args: tuple[list[int], list[int], int]) -> tuple[int, int]:
    """Max occupancy and smallest maximizing center over one candidate chunk."""
    centers, words, e = args
    best = -1
    best_center = -1
    for x in centers:
        occ = 0
        for w in words:
            if (x ^ w).bit_count() <= e:
                occ += 1
        if occ > best:  # centers arrive sorted, so first max is smallest
            best = occ
            best_center = x
    return best, best_center


def list_profile(code: Code, e: int, workers: int = 1,
                 candidate_pair_cap: int = CANDIDATE_PAIR_CAP) -> ListProfile:
    """Exact worst-case ball occupancy at radius e.

    Candidate centers are the union of radius-e balls around the codewords;
    any center covering at least one codeword lies in that union, so the
    maximum over candidates is the global maximum.  Ties go to the
    lexicographically smallest center.  Work is bounded by
    ``len(code) * ball_size(n, e)`` center generations; beyond the cap the
    call is refused (use :func:`list_profile_full` for small n instead).
    """
    n = code.n
    if not 0 <= e <= n:
        raise ValueError(f"radius e={e} outside 0..{n}")
    deltas = _ball_deltas(n, e)
    if len(deltas) * len(code) > candidate_pair_cap:
        raise ValueError(
            f"candidate enumeration needs {len(deltas) * len(code)} pairs "
            f"(cap {candidate_pair_cap}); use list_profile_full for n <= "
            f"{FULL_SCAN_MAX_N} or raise the cap"
        )
    words = [w.bits for w in code]
    centers = {w ^ delta for w in words for delta in deltas}
    ordered = sorted(centers)
    best, best_center = _scan_over(ordered, words, e, workers)
    return ListProfile(e, best, Word(n, best_center))


def list_profile_full(code: Code, e: int, workers: int = 1) -> ListProfile:
    """Worst ball occupancy by scanning all 2^n centers (n <= 20)."""
    n = code.n
    if n > FULL_SCAN_MAX_N:
        raise ValueError(f"full scan limited to n <= {FULL_SCAN_MAX_N}, got {n}")
    if not 0 <= e <= n:
        raise ValueError(f"radius e={e} outside 0..{n}")
    words = [w.bits for w in code]
    best, best_center = _scan_over(range(1 << n), words, e, workers)
    return ListProfile(e, best, Word(n, best_center))


def _scan_over(ordered, words: list[int], e: int, workers: int) -> tuple[int, int]:
    ordered = list(ordered)
    if workers <= 1 or len(ordered) < 4096:
        return _scan_chunk((ordered, words, e))
    step = (len(ordered) + workers - 1) // workers
    chunks = [(ordered[i:i + step], words, e) for i in range(0, len(ordered), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_scan_chunk, chunks))
    # deterministic reduce: max occupancy, then smallest center
    best = max(r[0] for r in results)
    best_center = min(c for occ, c in results if occ == best)
    return best, best_center


def is_list_decodable(code: Code, e: int, ell: int) -> bool:
    """True iff every radius-e ball holds at most ell codewords."""
    return list_profile(code, e).max_occupancy <= ell
