"""Sign-preserving bijection carrying depth to drp.

Permutations are split by first letter: 1 (case ``A1``), 2 (``A2``) and
anything larger (``B``).  Each class is mapped to itself:

* ``B``: the Foata-style map, followed by swapping the letters 1 and 2
  when that is needed to restore the sign;
* ``A1``: peel off unit excedances at the front with adjacent
  transpositions, then run the ``B`` map on the standardized remainder;
* ``A2``: conjugate the ``A1`` map by the transposition ``(1, 2)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .perm import (
    Permutation, foata_cycle_form, right_to_left_minima, sign, standardize,
    swap_values, unstandardize,
)

__all__ = [
    "DomainError", "CaseLabel", "TranspositionTrail", "Psi1Result",
    "classify", "foata_map", "foata_map_inverse", "phi_tilde",
    "psi1", "psi1_detailed", "psi2", "f_map",
]


class DomainError(ValueError):
    """A map was applied outside the class of permutations it is defined on."""


class CaseLabel(enum.Enum):
    A1 = "A1"
    A2 = "A2"
    B = "B"


@dataclass(frozen=True)
class TranspositionTrail:
    """Indices ``i`` of the transpositions ``(i, i+1)``, in the order applied."""
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"trail {self.indices} is not strictly increasing")

    def apply(self, p: Permutation) -> Permutation:
        """Left-multiply ``p`` by ``t_{i_1} t_{i_2} ... t_{i_k}``."""
        for i in reversed(self.indices):
            p = swap_values(p, i, i + 1)
        return p


@dataclass(frozen=True)
class Psi1Result:
    image: Permutation
    trail: TranspositionTrail
    # working permutation after each transposition, starting with the input
    stages: tuple[Permutation, ...]


def classify(p: Permutation) -> CaseLabel:
    if p[0] == 1:
        return CaseLabel.A1
    if p[0] == 2:
        return CaseLabel.A2
    return CaseLabel.B


def foata_map(w: Permutation) -> Permutation:
    """Erase the parentheses of the minimum-last cycle form."""
    return Permutation._trusted(foata_cycle_form(w).flatten())


def foata_map_inverse(v: Permutation) -> Permutation:
    """Cut ``v`` after each right-to-left minimum and read the pieces as cycles."""
    w = [0] * len(v)
    start = 0
    for end in right_to_left_minima(v):
        piece = v[start:end]
        for a, b in zip(piece, piece[1:]):
            w[a - 1] = b
        w[piece[-1] - 1] = piece[0]
        start = end
    return Permutation._trusted(w)


def _require(w: Permutation, label: CaseLabel, name: str) -> None:
    got = classify(w)
    if got is not label:
        raise DomainError(
            f"{name} is defined on class {label.value} but {w} is in {got.value}")


def phi_tilde(w: Permutation) -> Permutation:
    """Foata map on class B, twisted by ``(1, 2)`` whenever the sign flips."""
    _require(w, CaseLabel.B, "phi_tilde")
    v = foata_map(w)
    if sign(v) == sign(w):
        return v
    return swap_values(v, 1, 2)


def psi1_detailed(w: Permutation) -> Psi1Result:
    _require(w, CaseLabel.A1, "psi1")
    n = len(w)
    current = w
    trail = []
    stages = [w]
    i = 1
    while True:
        while i <= n and current[i - 1] == i:
            i += 1
        if i > n:
            pi = current  # drained to the identity
            break
        if current[i - 1] == i + 1:
            current = swap_values(current, i, i + 1)
            trail.append(i)
            stages.append(current)
            continue
        # current(i) >= i + 2, so the standardized tail starts with a letter >= 3
        tail = current[i - 1:]
        image = phi_tilde(standardize(tail))
        pi = Permutation._trusted((*range(1, i), *unstandardize(image, tail)))
        break
    t = TranspositionTrail(tuple(trail))
    return Psi1Result(t.apply(pi), t, tuple(stages))


def psi1(w: Permutation) -> Permutation:
    return psi1_detailed(w).image


def psi2(w: Permutation) -> Permutation:
    _require(w, CaseLabel.A2, "psi2")
    return swap_values(psi1(swap_values(w, 1, 2)), 1, 2)


def f_map(w: Permutation) -> Permutation:
    """Dispatch to the class-preserving piece; ``drp(f_map(w)) == depth(w)``."""
    label = classify(w)
    if label is CaseLabel.B:
        return phi_tilde(w)
    if label is CaseLabel.A1:
        return psi1(w)
    return psi2(w)
