"""Permutations of ``[n] = {1, ..., n}`` in one-line notation.

A :class:`Permutation` is an immutable tuple subclass holding the letters
``p(1), ..., p(n)``.  Positions and values are 1-indexed; use ``p(i)`` for
function evaluation and ``p[i - 1]`` for raw tuple access.

>>> p = make_permutation([4, 5, 3, 1, 6, 2])
>>> inverse(p)
Permutation(4, 6, 3, 1, 2, 5)
>>> foata_cycle_form(make_permutation([8, 9, 1, 6, 2, 4, 3, 7, 5]))
CycleForm(cycles=((8, 7, 3, 1), (9, 5, 2), (6, 4)))
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PermutationError", "Permutation", "CycleForm",
    "make_permutation", "identity", "inverse", "compose",
    "left_adjacent_transposition", "swap_values", "inversions", "sign",
    "foata_cycle_form", "right_to_left_minima", "standardize",
    "unstandardize", "first_letter", "parse_permutation",
]


class PermutationError(ValueError):
    """Malformed permutation or word input."""


class Permutation(tuple):
    """A permutation of ``[n]``, stored as its one-line notation."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(letters)
        n = len(letters)
        if n == 0:
            raise PermutationError("a permutation needs at least one letter")
        for x in letters:
            if isinstance(x, bool) or not isinstance(x, int):
                raise PermutationError(f"letter {x!r} is not an integer")
            if not 1 <= x <= n:
                raise PermutationError(f"letter {x} outside 1..{n}")
        if len(set(letters)) != n:
            raise PermutationError(f"duplicate letters in {letters}")
        return tuple.__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters: Iterable[int]) -> Permutation:
        # Skips validation; internal callers guarantee a rearrangement of 1..n.
        return tuple.__new__(cls, letters)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __repr__(self) -> str:
        return f"Permutation({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


@dataclass(frozen=True)
class CycleForm:
    """Cycle decomposition with each cycle ending in its minimum.

    Cycles are ordered by increasing minimum, so erasing the parentheses
    gives the Foata-style linear word.
    """
    cycles: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)

    def flatten(self) -> tuple[int, ...]:
        return tuple(x for c in self.cycles for x in c)


def make_permutation(letters: Sequence[int]) -> Permutation:
    return Permutation(letters)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation separated by whitespace and/or commas.

    >>> parse_permutation("4 5,3, 1 6 2")
    Permutation(4, 5, 3, 1, 6, 2)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise PermutationError("empty permutation text")
    try:
        letters = [int(t) for t in tokens]
    except ValueError:
        raise PermutationError(f"cannot parse permutation from {text!r}") from None
    return Permutation(letters)


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be at least 1")
    return Permutation._trusted(range(1, n + 1))


def inverse(p: Permutation) -> Permutation:
    q = [0] * len(p)
    for i, x in enumerate(p, 1):
        q[x - 1] = i
    return Permutation._trusted(q)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q``, i.e. ``i -> p(q(i))``."""
    if len(p) != len(q):
        raise PermutationError(f"cannot compose lengths {len(p)} and {len(q)}")
    return Permutation._trusted(p[x - 1] for x in q)


def swap_values(p: Permutation, a: int, b: int) -> Permutation:
    """Exchange the letters ``a`` and ``b`` in place (left multiplication by ``(a, b)``)."""
    return Permutation._trusted(b if x == a else a if x == b else x for x in p)


def left_adjacent_transposition(p: Permutation, i: int) -> Permutation:
    """Return ``(i, i+1) o p``: the letters ``i`` and ``i + 1`` trade places."""
    if not 1 <= i < len(p):
        raise PermutationError(f"transposition index {i} outside 1..{len(p) - 1}")
    return swap_values(p, i, i + 1)


def _merge_count(seq: list[int]) -> tuple[list[int], int]:
    if len(seq) <= 1:
        return seq, 0
    mid = len(seq) // 2
    left, a = _merge_count(seq[:mid])
    right, b = _merge_count(seq[mid:])
    merged = []
    count = a + b
    i = j = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            merged.append(left[i])
            i += 1
        else:
            merged.append(right[j])
            count += len(left) - i
            j += 1
    merged.extend(left[i:])
    merged.extend(right[j:])
    return merged, count


def inversions(p: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``p(i) > p(j)`` (merge-sort count)."""
    return _merge_count(list(p))[1]


def sign(p: Sequence[int]) -> int:
    """``(-1) ** inversions(p)``, computed from the cycle count."""
    n = len(p)
    seen = [False] * (n + 1)
    cycles = 0
    for start in range(1, n + 1):
        if not seen[start]:
            cycles += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = p[x - 1]
    return -1 if (n - cycles) & 1 else 1


def foata_cycle_form(p: Permutation) -> CycleForm:
    n = len(p)
    seen = [False] * (n + 1)
    cycles = []
    for m in range(1, n + 1):
        if seen[m]:
            continue
        # the cycle through its minimum m, written starting at p(m)
        cycle = []
        x = m
        while True:
            x = p[x - 1]
            seen[x] = True
            cycle.append(x)
            if x == m:
                break
        cycles.append(tuple(cycle))
    return CycleForm(tuple(cycles))


def right_to_left_minima(p: Sequence[int]) -> tuple[int, ...]:
    """Ascending positions ``i`` with ``p(i) < p(j)`` for every ``j > i``."""
    positions = []
    smallest = len(p) + 1
    for i in range(len(p), 0, -1):
        if p[i - 1] < smallest:
            smallest = p[i - 1]
            positions.append(i)
    positions.reverse()
    return tuple(positions)


def standardize(word: Sequence[int]) -> Permutation:
    """The permutation of ``[len(word)]`` order-isomorphic to ``word``.

    >>> standardize([4, 2, 5, 3])
    Permutation(3, 1, 4, 2)
    """
    if len(set(word)) != len(word):
        raise PermutationError(f"word {tuple(word)} has repeated letters")
    if not word:
        raise PermutationError("cannot standardize an empty word")
    rank = {x: r for r, x in enumerate(sorted(word), 1)}
    return Permutation._trusted(rank[x] for x in word)


def unstandardize(p: Permutation, ground: Sequence[int]) -> tuple[int, ...]:
    """Relabel ``p`` onto the ascending integer set ``ground``."""
    ground = sorted(ground)
    if len(ground) != len(p) or len(set(ground)) != len(ground):
        raise PermutationError(
            f"ground set of size {len(set(ground))} does not match n={len(p)}")
    return tuple(ground[x - 1] for x in p)


def first_letter(p: Permutation) -> int:
    return p[0]
