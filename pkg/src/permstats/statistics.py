"""Linear and cyclic permutation statistics.

Linear statistics read consecutive letters of the one-line word; cyclic
statistics compare each letter with its own position.  Every set-valued
result is an ascending tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import Permutation

__all__ = [
    "LinearStats", "CyclicStats", "linear_stats", "cyclic_stats",
    "depth", "drp", "displacement", "descent_count", "ascent_count",
    "excedance_count", "drop_count",
]


@dataclass(frozen=True)
class LinearStats:
    des_positions: tuple[int, ...]   # i in [n-1] with p(i) > p(i+1)
    des_values: tuple[int, ...]      # bottoms p(i+1) of descents
    asc2_values: tuple[int, ...]     # tops p(i+1) with p(i+1) >= p(i) + 2
    suc_positions: tuple[int, ...]   # i in [n-1] with p(i+1) = p(i) + 1
    suc_values: tuple[int, ...]      # p(i+1) of successions
    asc_count: int

    @property
    def des_count(self) -> int:
        return len(self.des_positions)


@dataclass(frozen=True)
class CyclicStats:
    exc_positions: tuple[int, ...]
    exc_count: int
    exc_hat_values: tuple[int, ...]        # p(i) > i, i in [2, n]
    aexc_values: tuple[int, ...]           # p(i) < i, i in [2, n]
    fix_hat_values: tuple[int, ...]        # p(i) = i, i in [2, n]
    fix_positions_capped: tuple[int, ...]  # p(i) = i, i in [n-1]
    drop_positions: tuple[int, ...]        # p(i) < i
    nexc_count: int


def linear_stats(p: Sequence[int]) -> LinearStats:
    """
    >>> s = linear_stats((4, 6, 2, 3, 1, 5))
    >>> s.asc2_values, s.des_values, s.suc_values
    ((5, 6), (1, 2), (3,))
    """
    des_pos, des_val, asc2, suc_pos, suc_val = [], [], [], [], []
    for i in range(1, len(p)):
        a, b = p[i - 1], p[i]
        if a > b:
            des_pos.append(i)
            des_val.append(b)
        elif b == a + 1:
            suc_pos.append(i)
            suc_val.append(b)
        else:
            asc2.append(b)
    return LinearStats(
        des_positions=tuple(des_pos),
        des_values=tuple(sorted(des_val)),
        asc2_values=tuple(sorted(asc2)),
        suc_positions=tuple(suc_pos),
        suc_values=tuple(sorted(suc_val)),
        asc_count=len(p) - 1 - len(des_pos),
    )


def cyclic_stats(p: Sequence[int]) -> CyclicStats:
    """
    >>> s = cyclic_stats((4, 5, 3, 1, 6, 2))
    >>> s.exc_hat_values, s.aexc_values, s.fix_hat_values, s.drop_positions
    ((5, 6), (1, 2), (3,), (4, 6))
    """
    n = len(p)
    exc_pos, exc_hat, aexc, fix_hat, fix_capped, drops = [], [], [], [], [], []
    for i, x in enumerate(p, 1):
        if x > i:
            exc_pos.append(i)
            if i >= 2:
                exc_hat.append(x)
        elif x < i:
            drops.append(i)
            aexc.append(x)  # a drop never sits at position 1
        else:
            if i >= 2:
                fix_hat.append(x)
            if i <= n - 1:
                fix_capped.append(i)
    return CyclicStats(
        exc_positions=tuple(exc_pos),
        exc_count=len(exc_pos),
        exc_hat_values=tuple(sorted(exc_hat)),
        aexc_values=tuple(sorted(aexc)),
        fix_hat_values=tuple(sorted(fix_hat)),
        fix_positions_capped=tuple(fix_capped),
        drop_positions=tuple(drops),
        nexc_count=len(drops),
    )


def depth(p: Sequence[int]) -> int:
    """Total excedance height: sum of ``p(i) - i`` over ``p(i) > i``."""
    total = 0
    for i, x in enumerate(p, 1):
        if x > i:
            total += x - i
    return total


def drp(p: Sequence[int]) -> int:
    """Total descent height: sum of ``p(i) - p(i+1)`` over descents.

    >>> drp((8, 7, 3, 1, 9, 5, 2, 6, 4))
    16
    """
    total = 0
    for i in range(len(p) - 1):
        d = p[i] - p[i + 1]
        if d > 0:
            total += d
    return total


def displacement(p: Sequence[int]) -> int:
    """Half of the total displacement ``sum |p(i) - i|`` (always an integer)."""
    total = sum(abs(x - i) for i, x in enumerate(p, 1))
    assert total % 2 == 0
    return total // 2


def descent_count(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def ascent_count(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])


def excedance_count(p: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(p, 1) if x > i)


def drop_count(p: Sequence[int]) -> int:
    return sum(1 for i, x in enumerate(p, 1) if x < i)
