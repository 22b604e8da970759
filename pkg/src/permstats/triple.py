"""Bijection carrying (Exc-hat, Aexc, Fix-hat) to (Asc2, Des, Suc).

The forward map grows increasing words over ``{0} u [n]`` from the
inverse permutation, then glues them together one at a time, guided by the
drop bi-word.  The final word starts with 0; dropping it gives the image.

>>> from permstats.perm import Permutation
>>> image, trace = phi_triple(Permutation([4, 5, 3, 1, 6, 2]))
>>> image
Permutation(4, 6, 2, 3, 1, 5)
>>> [list(w) for w in trace.initial_words]
[[0, 4, 6], [1, 5], [2, 3]]
>>> phi_triple_inverse(image)
Permutation(4, 5, 3, 1, 6, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation

__all__ = [
    "Word", "WordList", "DropBiword", "PhiStep", "PhiTrace",
    "initial_words", "drop_biword", "phi_triple", "phi_triple_image",
    "phi_triple_inverse", "ascent_blocks", "trace_violations", "render_trace",
]


class Word(tuple):
    """A nonempty word of distinct letters from ``{0} u [n]``."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("a word needs at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"word {letters} repeats a letter")
        return tuple.__new__(cls, letters)

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        return self[-1]

    def __repr__(self) -> str:
        return f"Word({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


class WordList(tuple):
    """Letter-disjoint words ordered by strictly decreasing last letter."""

    __slots__ = ()

    def __new__(cls, words: Iterable[Sequence[int]]):
        words = tuple(w if isinstance(w, Word) else Word(w) for w in words)
        seen: set[int] = set()
        for w in words:
            if seen.intersection(w):
                raise ValueError("words in a WordList must be letter-disjoint")
            seen.update(w)
        if any(a.last <= b.last for a, b in zip(words, words[1:])):
            raise ValueError("words must be sorted by decreasing last letter")
        return tuple.__new__(cls, words)


@dataclass(frozen=True)
class DropBiword:
    """Columns ``(i, p(i))`` for the drops ``i > p(i)``, ``i`` decreasing."""
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise ValueError("bi-word rows differ in length")
        if any(a <= b for a, b in zip(self.top, self.top[1:])):
            raise ValueError("top row must be strictly decreasing")
        if any(t <= b for t, b in zip(self.top, self.bottom)):
            raise ValueError("every column must be a drop (top > bottom)")

    def __len__(self) -> int:
        return len(self.top)

    def __str__(self) -> str:
        return f"({' '.join(map(str, self.top))} / {' '.join(map(str, self.bottom))})"


@dataclass(frozen=True)
class PhiStep:
    """One gluing step: ``pick`` is appended to ``host``."""
    pick: Word
    rank: int  # Y: 1-based position of pick.first in the current bottom row
    host: Word

    @property
    def junction(self) -> tuple[int, int]:
        return self.host.last, self.pick.first

    def render(self) -> str:
        high, low = self.junction
        return f"pick={self.pick} Y={self.rank} host={self.host} junction={high}>{low}"


@dataclass(frozen=True)
class PhiTrace:
    initial_words: WordList
    initial_biword: DropBiword
    iterations: tuple[PhiStep, ...]


def _build_words(p: Sequence[int]) -> list[list[int]]:
    n = len(p)
    pos = [0] * (n + 1)
    for i, x in enumerate(p, 1):
        pos[x] = i
    start = [0]
    ending = {0: start}
    words = [start]
    for x in range(1, n + 1):
        j = pos[x]
        if j > x:
            w = [x]
            words.append(w)
        else:
            w = ending.pop(j - 1, None)
            if w is None:
                raise AssertionError(f"no word ends in {j - 1} when placing {x}")
            w.append(x)
        ending[x] = w
    words.sort(key=lambda w: -w[-1])
    return words


def initial_words(p: Permutation) -> WordList:
    """Increasing words built letter by letter from ``p``.

    Letter ``x`` opens a new word when ``p^-1(x) > x``; otherwise it is
    appended to the word currently ending in ``p^-1(x) - 1``.
    """
    return WordList(_build_words(p))


def drop_biword(p: Sequence[int]) -> DropBiword:
    top = tuple(i for i in range(len(p), 0, -1) if p[i - 1] < i)
    return DropBiword(top, tuple(p[i - 1] for i in top))


def _glue(p: Sequence[int], steps: list | None) -> tuple[list[list[int]], list[int]]:
    words = _build_words(p)
    top = [i for i in range(len(p), 0, -1) if p[i - 1] < i]
    bottom = [p[i - 1] for i in top]
    while len(words) > 1:
        w = max(words, key=lambda u: u[0])
        y = bottom.index(w[0])
        others = [u for u in words if u is not w]
        host = others[y]
        if steps is not None:
            steps.append(PhiStep(Word(w), y + 1, Word(host)))
        host.extend(w)
        others.sort(key=lambda u: -u[-1])
        words = others
        del bottom[y]
    return words, bottom


def phi_triple(p: Permutation) -> tuple[Permutation, PhiTrace]:
    """Apply the bijection and return the image with its full trace."""
    steps: list[PhiStep] = []
    trace_words = initial_words(p)
    biword = drop_biword(p)
    words, _ = _glue(p, steps)
    image = Permutation._trusted(words[0][1:])
    return image, PhiTrace(trace_words, biword, tuple(steps))


def phi_triple_image(p: Permutation) -> Permutation:
    """Same image as :func:`phi_triple`, without recording a trace."""
    words, _ = _glue(p, None)
    return Permutation._trusted(words[0][1:])


def ascent_blocks(word: Sequence[int]) -> list[list[int]]:
    """Split ``word`` into its maximal strictly increasing runs."""
    blocks = [[word[0]]]
    for a, b in zip(word, word[1:]):
        if b > a:
            blocks[-1].append(b)
        else:
            blocks.append([b])
    return blocks


def phi_triple_inverse(s: Permutation) -> Permutation:
    """Undo :func:`phi_triple`.

    The ascent blocks of ``0, s`` are the initial words.  Inside a block,
    ``a`` followed by ``b`` means ``p(a + 1) = b``.  Block heads are then
    reattached in decreasing order of first letter; the rank of the word
    each head follows in ``s`` picks its drop position out of the
    remaining top row.
    """
    n = len(s)
    word = (0, *s)
    blocks = ascent_blocks(word)
    p = [0] * (n + 1)
    for block in blocks:
        for a, b in zip(block, block[1:]):
            p[a + 1] = b
    tops = sorted((b[-1] + 1 for b in blocks if b[-1] != n), reverse=True)

    before = {word[k]: word[k - 1] for k in range(1, n + 1)}
    owner = {}
    for block in blocks:
        for x in block:
            owner[x] = block
    current = sorted(blocks, key=lambda b: -b[-1])
    for block in sorted(blocks[1:], key=lambda b: -b[0]):
        alpha = block[0]
        host = owner[before[alpha]]
        if host[-1] != before[alpha]:
            raise AssertionError(f"{alpha} does not follow the end of a current word")
        others = [u for u in current if u is not block]
        y = next(k for k, u in enumerate(others) if u is host)
        p[tops.pop(y)] = alpha
        host.extend(block)
        for x in block:
            owner[x] = host
        others.sort(key=lambda u: -u[-1])
        current = others
    return Permutation._trusted(p[1:])


def trace_violations(p: Permutation, image: Permutation, trace: PhiTrace) -> list[str]:
    """Check the structural lemmas on one trace; return failure messages.

    * top row of the drop bi-word = {L(w) + 1 : L(w) != n}
    * each bottom-row letter x at position Y has >= Y + 1 words with L(w) >= x
    * every gluing step joins a larger last letter to a smaller first letter
    * #steps = #drops = des(image), and descent bottoms of image = Aexc(p)
    """
    n = len(p)
    problems = []
    words = trace.initial_words
    biword = trace.initial_biword
    expected_top = sorted((w.last + 1 for w in words if w.last != n), reverse=True)
    if list(biword.top) != expected_top:
        problems.append(f"top row {biword.top} != {tuple(expected_top)}")
    for y, x in enumerate(biword.bottom, 1):
        if sum(1 for w in words if w.last >= x) < y + 1:
            problems.append(f"fewer than {y + 1} words end at or above {x}")
    for k, step in enumerate(trace.iterations):
        high, low = step.junction
        if not high > low:
            problems.append(f"step {k}: junction {high}>{low} fails")
    descents = [image[i + 1] for i in range(n - 1) if image[i] > image[i + 1]]
    if not len(trace.iterations) == len(biword) == len(descents):
        problems.append(
            f"steps={len(trace.iterations)} drops={len(biword)} des={len(descents)}")
    aexc = sorted(x for i, x in enumerate(p, 1) if x < i)
    if sorted(descents) != aexc:
        problems.append(f"descent bottoms {sorted(descents)} != Aexc {aexc}")
    return problems


def render_trace(p: Permutation) -> str:
    image, trace = phi_triple(p)
    lines = [
        "words: " + " ".join(f"[{w}]" for w in trace.initial_words),
        f"biword: {trace.initial_biword}",
    ]
    lines += [step.render() for step in trace.iterations]
    lines.append(f"result: {image}")
    return "\n".join(lines)
