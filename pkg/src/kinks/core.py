"""Domain model for flip histories on a chain of spin sites.

A chain of n sites starts all minus and ends all plus; a history is the
order in which the sites flip.  Each flip either grows an existing block
of plus sites or starts a new block somewhere else; every new block after
the first one is a kink.  Histories are classified by the number d of
kinks they create, and this module is the single source of truth for what
d means.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple, Sequence

__all__ = [
    "History",
    "TreeLabel",
    "CountTable",
    "EnergyParams",
    "kink_count",
    "tree_label",
    "energy",
    "max_kinks",
]


def max_kinks(n: int) -> int:
    """Largest kink count a history of length n can reach: floor((n-1)/2).

    New blocks need a site with both neighbours unflipped, so blocks
    beyond the first consume two sites each.

    >>> [max_kinks(n) for n in range(1, 8)]
    [0, 0, 1, 1, 2, 2, 3]
    """
    if n < 1:
        raise ValueError(f"chain length must be at least 1, got {n}")
    return (n - 1) // 2


@dataclass(frozen=True)
class History:
    """A flip schedule: ``word[i]`` is the site flipped at time step i + 1.

    The word uses every site of the chain exactly once, i.e. it is a
    permutation of 1..n in one-line notation.  Histories are immutable
    values; two histories are equal iff their words are equal.

    >>> History((2, 1, 3)).n
    3
    """

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n < 1:
            raise ValueError("a history must flip at least one site")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"word is not a permutation of 1..{n}: {word!r}")

    @property
    def n(self) -> int:
        """Chain length."""
        return len(self.word)


class TreeLabel(NamedTuple):
    """Label of a history as a node of the generating tree.

    ``max_pos``   position of the largest site in the word (1-based),
    ``kinks``     kink count of the word,
    ``max_first`` 1 if the largest site flips before the second largest.
    """

    max_pos: int
    kinks: int
    max_first: int


def _word_kinks(word: Sequence[int]) -> int:
    # Bit s of `seen` marks site s as flipped; `5 << (s - 1)` probes the
    # two neighbour bits s - 1 and s + 1.  A flip with no flipped
    # neighbour starts a new block; the first flip always does and is not
    # counted.
    seen = 0
    d = -1
    for s in word:
        if not seen & (5 << (s - 1)):
            d += 1
        seen |= 1 << s
    return d


def kink_count(h: History) -> int:
    """Number of kinks a history creates beyond the initial one.

    A time step creates a kink when the site it flips has no previously
    flipped neighbour, so the flip opens a new plus block instead of
    growing one.  The first step opens the initial block and never counts.

    >>> kink_count(History((1, 2, 3, 4)))
    0
    >>> kink_count(History((1, 3, 2, 4)))
    1
    """
    return _word_kinks(h.word)


def tree_label(h: History) -> TreeLabel:
    """Generating-tree label of a history of length at least 2.

    >>> tree_label(History((1, 3, 4, 2)))
    TreeLabel(max_pos=3, kinks=1, max_first=0)
    """
    word = h.word
    n = len(word)
    if n < 2:
        raise ValueError("labels need length >= 2: max_first is undefined at n = 1")
    pos_max = word.index(n)
    pos_second = word.index(n - 1)
    return TreeLabel(pos_max + 1, _word_kinks(word), 1 if pos_max < pos_second else 0)


@dataclass(frozen=True)
class EnergyParams:
    """Coupling constant of the chain energy model.

    Flipping one isolated site costs ``4 * coupling``; each further kink
    costs the same again.
    """

    coupling: int | float | Fraction = 1

    def __post_init__(self) -> None:
        if not self.coupling > 0:
            raise ValueError("coupling must be positive")


def energy(d: int, params: EnergyParams) -> int | float | Fraction:
    """Energy of a history creating d kinks: ``4 * coupling * (d + 1)``."""
    if d < 0:
        raise ValueError("kink count cannot be negative")
    return 4 * params.coupling * (d + 1)


@dataclass(frozen=True)
class CountTable:
    """Exact history counts indexed by chain length n and kink count d.

    ``rows[n][d]`` is the number of length-n histories creating exactly d
    kinks.  A full row runs over d = 0..max_kinks(n); tables produced from
    series expansions at a low truncation order may store only a prefix of
    a row.  Entries are exact big integers.
    """

    rows: dict[int, tuple[int, ...]]

    def lengths(self) -> list[int]:
        """Chain lengths covered by the table, ascending."""
        return sorted(self.rows)

    @property
    def max_n(self) -> int:
        return max(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        """Stored counts for chain length n, indexed by d."""
        return self.rows[n]

    def is_complete(self, n: int) -> bool:
        """True when row n stores every d up to max_kinks(n)."""
        return len(self.rows[n]) == max_kinks(n) + 1

    def count(self, n: int, d: int) -> int:
        """Exact count for (n, d); zero above max_kinks(n).

        Raises ValueError when the requested d lies in the truncated part
        of an incomplete row (the value is unknown, not zero).
        """
        if d < 0:
            raise ValueError("kink count cannot be negative")
        row = self.rows[n]
        if d < len(row):
            return row[d]
        if d <= max_kinks(n):
            raise ValueError(f"row {n} is truncated at d = {len(row) - 1}, asked for d = {d}")
        return 0

    def validate(self) -> None:
        """Check table invariants; raises ValueError on the first violation.

        All entries are nonnegative, and every complete row sums to n!
        with a nonzero top entry.
        """
        for n in self.lengths():
            row = self.rows[n]
            if any(c < 0 for c in row):
                raise ValueError(f"negative count in row {n}: {row}")
            if self.is_complete(n):
                if sum(row) != factorial(n):
                    raise ValueError(f"row {n} sums to {sum(row)}, expected {n}!")
                if row[-1] <= 0:
                    raise ValueError(f"row {n} has empty top kink class")
