"""Ground-truth enumeration of flip histories.

Two independent routes: an exhaustive scan that classifies every
permutation by kink count, and a backtracking generator that builds only
the histories with a prescribed kink count by growing plus blocks site by
site.
"""

from __future__ import annotations

from itertools import islice, permutations
from math import factorial
from typing import Iterator

from .core import CountTable, History, max_kinks

#: 11! is about 4e7 schedule scans, a few seconds of work; anything larger
#: needs an explicit opt-in via the `ceiling` argument.
DEFAULT_BRUTE_CEILING = 11


def brute_force_table(n_max: int, *, ceiling: int = DEFAULT_BRUTE_CEILING) -> CountTable:
    """Classify all n! histories by kink count for every n up to n_max.

    >>> brute_force_table(4).row(4)
    (8, 16)
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    if n_max > ceiling:
        raise ValueError(
            f"n_max = {n_max} exceeds the exhaustive-scan ceiling {ceiling}; "
            "raise the ceiling explicitly to attempt it"
        )
    return CountTable({n: tuple(_brute_row(n)) for n in range(1, n_max + 1)})


def _brute_row(n: int) -> list[int]:
    counts = [0] * (max_kinks(n) + 1)
    if n == 1:
        counts[0] = 1
        return counts
    sites = range(1, n + 1)
    probe = [0] + [5 << (s - 1) for s in sites]  # neighbour bits of each site
    bit = [0] + [1 << s for s in sites]
    for word in permutations(sites):
        it = iter(word)
        seen = bit[next(it)]
        d = 0
        for s in it:
            if not seen & probe[s]:
                d += 1
            seen |= bit[s]
        counts[d] += 1
    return counts


def _gap_capacity(lo: int, hi: int, n: int) -> int:
    # Most blocks that can still open inside the unflipped run strictly
    # between positions lo and hi, where lo == 0 / hi == n + 1 stand for
    # the chain ends.  A run of length L touching `ends` chain ends admits
    # floor((L - 1 + ends) / 2) new blocks.
    length = hi - lo - 1
    if length <= 0:
        return 0
    ends = (1 if lo == 0 else 0) + (1 if hi == n + 1 else 0)
    return (length - 1 + ends) // 2


def _nearest_flipped(seen: int, s: int, n: int) -> tuple[int, int]:
    # Positions of the flipped sites closest to s on either side
    # (0 / n + 1 when none, i.e. the chain end).
    below = (seen & ((1 << s) - 1)).bit_length()
    lo = below - 1 if below else 0
    above = seen >> (s + 1)
    hi = (above & -above).bit_length() + s if above else n + 1
    return lo, hi


def enumerate_histories(n: int, d: int, limit: int | None = None) -> Iterator[History]:
    """Yield the histories of length n with exactly d kinks, in word order.

    Histories are grown one flip at a time: a step either extends an
    existing plus block at one of its ends (free) or opens a new block at
    a site with both neighbours unflipped (spending one of the d kink
    credits).  Branches that can no longer spend exactly the remaining
    credits are pruned, so the stream holds precisely the wanted set, in
    lexicographic word order and free of duplicates.

    >>> ["".join(map(str, h.word)) for h in enumerate_histories(3, 1)]
    ['132', '312']
    """
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    if not 0 <= d <= max_kinks(n):
        raise ValueError(f"kink count {d} out of range 0..{max_kinks(n)} for n = {n}")
    return islice(_emit_words(n, d), limit)


def _emit_words(n: int, d: int) -> Iterator[History]:
    full = ((1 << n) - 1) << 1
    word: list[int] = []

    def walk(seen: int, rem: int, cap: int) -> Iterator[History]:
        if seen == full:
            yield History(tuple(word))
            return
        grown = (seen << 1) | (seen >> 1)
        free = grown & ~seen & full
        fresh = ~grown & ~seen & full
        cand = free | fresh
        while cand:
            low = cand & -cand
            cand ^= low
            s = low.bit_length() - 1
            rem2 = rem - 1 if low & fresh else rem
            if rem2 < 0:
                continue
            lo, hi = _nearest_flipped(seen, s, n)
            cap2 = cap + _gap_capacity(lo, s, n) + _gap_capacity(s, hi, n) - _gap_capacity(lo, hi, n)
            if cap2 < rem2:
                continue
            word.append(s)
            yield from walk(seen | low, rem2, cap2)
            word.pop()

    for s in range(1, n + 1):
        # the first flip opens the initial block, which never counts
        cap = _gap_capacity(0, s, n) + _gap_capacity(s, n + 1, n)
        if d <= cap:
            word.append(s)
            yield from walk(1 << s, d, cap)
            word.pop()


def backtrack_count(n: int, d: int) -> int:
    """Number of histories `enumerate_histories(n, d)` would yield.

    Same pruned search, but once the kink credits are spent the remaining
    free-move completions are counted in closed form instead of walked:
    runs between blocks interleave multinomially and an inner run of
    length L flips in 2**(L-1) orders (1 when it touches a chain end).

    >>> backtrack_count(5, 1)
    88
    """
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    if not 0 <= d <= max_kinks(n):
        raise ValueError(f"kink count {d} out of range 0..{max_kinks(n)} for n = {n}")
    fact = [factorial(i) for i in range(n + 1)]
    full = ((1 << n) - 1) << 1

    def free_completions(seen: int) -> int:
        runs: list[tuple[int, bool]] = []  # (length, touches a chain end)
        run = 0
        at_wall = True
        for site in range(1, n + 1):
            if seen >> site & 1:
                if run:
                    runs.append((run, at_wall))
                    run = 0
                at_wall = False
            else:
                run += 1
        if run:
            runs.append((run, True))
        total = fact[sum(r for r, _ in runs)]
        for length, boundary in runs:
            total //= fact[length]
            if not boundary:
                total <<= length - 1
        return total

    def walk(seen: int, rem: int, cap: int) -> int:
        if rem == 0:
            return free_completions(seen)
        grown = (seen << 1) | (seen >> 1)
        free = grown & ~seen & full
        fresh = ~grown & ~seen & full
        cand = free | fresh
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            s = low.bit_length() - 1
            rem2 = rem - 1 if low & fresh else rem
            if rem2 < 0:
                continue
            lo, hi = _nearest_flipped(seen, s, n)
            cap2 = cap + _gap_capacity(lo, s, n) + _gap_capacity(s, hi, n) - _gap_capacity(lo, hi, n)
            if cap2 < rem2:
                continue
            total += walk(seen | low, rem2, cap2)
        return total

    total = 0
    for s in range(1, n + 1):
        cap = _gap_capacity(0, s, n) + _gap_capacity(s, n + 1, n)
        if d <= cap:
            total += walk(1 << s, d, cap)
    return total
