"""Permutations of {0, ..., 2^n - 1} viewed as reversible n-line functions.

A reversible function on n lines maps every n-bit input word to a distinct
n-bit output word, so it is exactly a permutation of {0, ..., 2^n - 1} and is
stored here as its output sequence (a truth vector).  Line 0 is the least
significant bit; printed binary strings put the most significant bit first.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

MAX_LINES = 24


def popcount(x: int) -> int:
    return bin(x).count("1")


class TruthVector:
    """A bijection over {0, ..., 2^n - 1}, immutable after construction."""

    __slots__ = ("n", "entries")

    n: int
    entries: tuple[int, ...]

    def __init__(self, entries: Sequence[int]):
        entries = tuple(entries)
        size = len(entries)
        if size < 2 or size & (size - 1) != 0:
            raise ValueError(f"length {size} is not a power of two >= 2")
        n = size.bit_length() - 1
        if n > MAX_LINES:
            raise ValueError(f"{n} lines exceeds the supported maximum {MAX_LINES}")
        seen = [False] * size
        for value in entries:
            if not 0 <= value < size:
                raise ValueError(f"value {value} out of range [0, {size})")
            if seen[value]:
                raise ValueError(f"not a bijection: value {value} occurs twice")
            seen[value] = True
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruthVector is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "TruthVector":
        if n < 1:
            raise ValueError(f"line count must be >= 1, got {n}")
        return cls(range(1 << n))

    @classmethod
    def reverse(cls, n: int) -> "TruthVector":
        """The order-reversing permutation i -> 2^n - 1 - i."""
        if n < 1:
            raise ValueError(f"line count must be >= 1, got {n}")
        size = 1 << n
        return cls(size - 1 - i for i in range(size))

    @classmethod
    def unrank(cls, r: int, n: int) -> "TruthVector":
        """Inverse of :meth:`rank` under lexicographic (Lehmer code) order."""
        if n < 1:
            raise ValueError(f"line count must be >= 1, got {n}")
        size = 1 << n
        total = math.factorial(size)
        if not 0 <= r < total:
            raise ValueError(f"rank {r} out of range [0, {total})")
        return cls(unrank_entries(r, size))

    # -- permutation algebra ----------------------------------------------

    def __call__(self, x: int) -> int:
        return self.entries[x]

    def compose(self, other: "TruthVector") -> "TruthVector":
        """Return h with h(i) = self(other(i)) (apply ``other`` first)."""
        if self.n != other.n:
            raise ValueError(f"line counts differ: {self.n} != {other.n}")
        mine = self.entries
        return TruthVector(mine[x] for x in other.entries)

    __mul__ = compose

    def inverse(self) -> "TruthVector":
        inv = [0] * len(self.entries)
        for i, value in enumerate(self.entries):
            inv[value] = i
        return TruthVector(inv)

    def is_identity(self) -> bool:
        return all(value == i for i, value in enumerate(self.entries))

    def hamming(self, other: "TruthVector") -> int:
        """Differing bits between the two n*2^n-bit binary representations."""
        if self.n != other.n:
            raise ValueError(f"line counts differ: {self.n} != {other.n}")
        return sum(popcount(a ^ b) for a, b in zip(self.entries, other.entries))

    def rank(self) -> int:
        """Lexicographic index of this permutation among all (2^n)! of them."""
        return rank_entries(self.entries)

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"TruthVector([{' '.join(map(str, self.entries))}])"

    def __str__(self) -> str:
        return " ".join(map(str, self.entries))

    def to_text(self) -> str:
        """Serialize in the truth-vector file format (one line of decimals)."""
        return " ".join(map(str, self.entries)) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TruthVector":
        """Parse the truth-vector file format.

        Lines starting with ``#`` are comments; the remaining whitespace or
        newline separated tokens must be the 2^n decimal entries.
        """
        tokens: list[str] = []
        for line in text.splitlines():
            stripped = line.strip()
            if stripped.startswith("#"):
                continue
            tokens.extend(stripped.split())
        if not tokens:
            raise ValueError("no truth-vector entries found")
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            bad = next(tok for tok in tokens if not _is_int(tok))
            raise ValueError(f"invalid entry {bad!r}: expected a decimal integer") from None
        return cls(values)


def _is_int(token: str) -> bool:
    try:
        int(token)
    except ValueError:
        return False
    return True


# Lehmer-code rank/unrank on raw entry sequences.  These run in the BFS inner
# loop, so they avoid constructing TruthVector objects.

def rank_entries(entries: Sequence[int]) -> int:
    k = len(entries)
    r = 0
    for i in range(k):
        pi = entries[i]
        smaller_right = 0
        for j in range(i + 1, k):
            if entries[j] < pi:
                smaller_right += 1
        r = r * (k - i) + smaller_right
    return r


def unrank_entries(r: int, k: int) -> list[int]:
    digits = [0] * k
    for i in range(k - 1, 0, -1):
        r, digits[i] = divmod(r, k - i)
    digits[0] = r
    remaining = list(range(k))
    return [remaining.pop(d) for d in digits]


def identity(n: int) -> TruthVector:
    return TruthVector.identity(n)


def reverse_perm(n: int) -> TruthVector:
    return TruthVector.reverse(n)


def compose(c: TruthVector, g: TruthVector) -> TruthVector:
    return c.compose(g)


def inverse(p: TruthVector) -> TruthVector:
    return p.inverse()


def hamming(p: TruthVector, s: TruthVector) -> int:
    return p.hamming(s)


def rank(p: TruthVector) -> int:
    return p.rank()


def unrank(r: int, n: int) -> TruthVector:
    return TruthVector.unrank(r, n)


def random_truth_vector(n: int, rng) -> TruthVector:
    """Uniformly random member of S_{2^n} drawn from ``rng`` (random.Random)."""
    values = list(range(1 << n))
    rng.shuffle(values)
    return TruthVector(values)


def all_truth_vectors(n: int) -> Iterable[TruthVector]:
    """All (2^n)! permutations in lexicographic rank order."""
    import itertools

    for entries in itertools.permutations(range(1 << n)):
        yield TruthVector(entries)
