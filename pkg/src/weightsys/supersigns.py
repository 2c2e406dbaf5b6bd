"""Sign polynomial f_s for the osp(N|2M) weight system on permutations.

``f_s(tau) = sum_{i in P1} tau_i + sum_{{i,j} in P2} tau_i tau_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Sequence, Tuple

from .perm import Permutation

CORRECTED = "corrected"
LITERAL = "literal"

_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class SignData:
    m: int
    P1: FrozenSet[int]
    P2: FrozenSet[Tuple[int, int]]
    reading: str = CORRECTED


def _strictly_between(x, a, b) -> bool:
    lo, hi = (a, b) if a < b else (b, a)
    return lo < x < hi


def distinguished_sets(s: Permutation, reading: str = CORRECTED) -> SignData:
    """``P1``: ``s(i) > i`` (corrected) or ``s(i) > 1`` (literal).

    ``P2``: pairs ``i < j`` whose point pairs ``(i + 1/3, s(i) - 1/3)``
    and ``(j + 1/3, s(j) - 1/3)`` alternate on the real line.
    """
    if reading not in (CORRECTED, LITERAL):
        raise ValueError(f"unknown reading {reading!r}")
    m = len(s)
    if reading == CORRECTED:
        p1 = frozenset(i for i in range(1, m + 1) if s(i) > i)
    else:
        p1 = frozenset(i for i in range(1, m + 1) if s(i) > 1)
    ends = {i: (i + _THIRD, s(i) - _THIRD) for i in range(1, m + 1)}
    p2 = set()
    for i in range(1, m + 1):
        a, b = ends[i]
        for j in range(i + 1, m + 1):
            c, d = ends[j]
            if _strictly_between(c, a, b) != _strictly_between(d, a, b):
                p2.add((i, j))
    return SignData(m, p1, frozenset(p2), reading)


def f_value(sd: SignData, tau: Sequence[int]) -> int:
    if len(tau) != sd.m:
        raise ValueError(f"expected {sd.m} parities, got {len(tau)}")
    total = sum(tau[i - 1] for i in sd.P1)
    total += sum(tau[i - 1] * tau[j - 1] for i, j in sd.P2)
    return total % 2


def sign_value(sd: SignData, eta: Sequence[int]) -> int:
    """``(-1)^{f_s(eta)}``."""
    return -1 if f_value(sd, eta) else 1
