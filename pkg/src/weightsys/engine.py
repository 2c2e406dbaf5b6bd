"""Recursive evaluation of the universal gl and so weight systems on permutations.

Both invariants are computed with the same machinery.  A permutation ``s``
of ``0..m-1`` stands for the sum over index tuples of the ordered product
``X[i_0, i_s(0)] ... X[i_{m-1}, i_s(m-1)]``.  Exchanging the factors at
positions ``r, r+1`` costs a commutator, and each commutator term is again
such a sum on ``m - 1`` positions, possibly with a Kronecker delta that
fuses two summation indices and possibly with "barred" indices (so case).
Barred indices are exactly the extended-graph edges with two heads or two
tails; they are turned back into ordinary permutations by vertex flips,
each flip costing a sign.

Relation used at every step, for either family::

    w(s) = w(t s t) + sum_k  coeff_k * w(s_k)        t = (r r+1)

The evaluator applies it along a fixed schedule: bubble the cycle through
the leftmost position into a contiguous ascending block, peel the block off
by multiplicativity and recurse on the remainder.
"""

from __future__ import annotations

import random
import threading
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .perm import HEAD, TAIL, ExtendedGraph, Permutation, normalize_extended
from .poly import ONE, ZERO, Polynomial, C

Perm0 = Tuple[int, ...]
# (sign, power of C0, permutation on m-1 points)
Term = Tuple[int, int, Perm0]

GL = "gl"
SO = "so"


# -- the relation -------------------------------------------------------------


def swap_conjugate(s: Perm0, r: int) -> Perm0:
    """``t s t`` with ``t`` the transposition of positions ``r, r+1``."""

    def t(p):
        if p == r:
            return r + 1
        if p == r + 1:
            return r
        return p

    return tuple(t(s[t(p)]) for p in range(len(s)))


def _resolve(s: Perm0, r: int, factor, constraint) -> Optional[Tuple[int, int, Perm0]]:
    """Turn one commutator term into ``(sign, C0 power, permutation)``.

    ``factor`` replaces position ``r`` (position ``r+1`` is deleted);
    ``constraint = (a, b, bar)`` is the delta ``i_a = i_b`` (or ``i_b``
    barred).  Refs are ``(variable, barred)``; variables are named by the
    position whose first slot they originally occupy.
    """
    m = len(s)
    slots: List[List[Tuple[int, int]]] = []
    for p in range(m):
        if p == r + 1:
            continue
        if p == r:
            slots.append(list(factor))
        else:
            slots.append([(p, 0), (s[p], 0)])
    a, b, bar = constraint
    if a == b:
        if bar:
            raise AssertionError("self-conjugate delta has no polynomial value")
    else:
        for sl in slots:
            for k, (v, br) in enumerate(sl):
                if v == a:
                    sl[k] = (b, br ^ bar)

    occ: Dict[int, List[Tuple[int, int, int]]] = {}
    for pos, sl in enumerate(slots):
        for k, (v, br) in enumerate(sl):
            occ.setdefault(v, []).append((pos, k, br))
    live = set(range(m))
    if a != b:
        live.discard(a)
    free = 0
    edges = []
    for v in live:
        o = occ.get(v, ())
        if not o:
            free += 1
            continue
        assert len(o) == 2, "summation index must occur exactly twice"
        (p1, k1, b1), (p2, k2, b2) = o
        same_role = k1 == k2
        twisted = (b1 != b2) != same_role
        if twisted:
            assert p1 == p2, "twisted edge between distinct vertices"
            # sum_i X[i, bar i] vanishes identically
            return None
        # slot 0 is a head, slot 1 a tail
        edges.append(((p1 + 1, HEAD if k1 == 0 else TAIL), (p2 + 1, HEAD if k2 == 0 else TAIL)))
    g = ExtendedGraph(m - 1, tuple(edges))
    sp = normalize_extended(g)
    return sp.sign, free, sp.perm.zero_based


def relation_terms(s: Perm0, r: int, family: str) -> List[Term]:
    """The smaller terms of the exchange relation at positions ``r, r+1``.

    ``w(s) - w(swap_conjugate(s, r)) == sum(sign * C0**k * w(t))``.
    """
    sr, sr1 = s[r], s[r + 1]
    specs = [
        # delta(i_{r+1}, i_{s(r)}) X[i_r, i_{s(r+1)}]
        (1, ((r, 0), (sr1, 0)), (r + 1, sr, 0)),
        # -delta(i_r, i_{s(r+1)}) X[i_{r+1}, i_{s(r)}]
        (-1, ((r + 1, 0), (sr, 0)), (r, sr1, 0)),
    ]
    if family == SO:
        specs += [
            # -delta(bar i_{s(r+1)}, i_{s(r)}) X[i_r, bar i_{r+1}]
            (-1, ((r, 0), (r + 1, 1)), (sr1, sr, 1)),
            # +delta(i_r, bar i_{r+1}) X[bar i_{s(r+1)}, i_{s(r)}]
            (1, ((sr1, 1), (sr, 0)), (r, r + 1, 1)),
        ]
    out = []
    for sign, factor, constraint in specs:
        res = _resolve(s, r, factor, constraint)
        if res is None:
            continue
        sgn, free, perm = res
        out.append((sign * sgn, free, perm))
    return out


# -- canonical keys -------------------------------------------------------------


def rotation_canonical(s: Perm0) -> Perm0:
    """Lexicographically least conjugate of ``s`` by powers of ``i -> i+1``."""
    m = len(s)
    best = s
    for k in range(1, m):
        cand = tuple((s[(p - k) % m] + k) % m for p in range(m))
        if cand < best:
            best = cand
    return best


def reversal_canonical(s: Perm0) -> Tuple[Perm0, int]:
    """Orient every cycle to minimize its images; returns the sign paid."""
    m = len(s)
    out = list(s)
    seen = [False] * m
    sign = 1
    for start in range(m):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        v = s[start]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = s[v]
        if len(cyc) < 3:
            continue
        rev = {b: a for a, b in zip(cyc, cyc[1:] + cyc[:1])}
        positions = sorted(cyc)
        fwd = [s[p] for p in positions]
        bwd = [rev[p] for p in positions]
        if bwd < fwd:
            for p in positions:
                out[p] = rev[p]
            if len(cyc) % 2:
                sign = -sign
    return tuple(out), sign


# -- strategies -----------------------------------------------------------------


class LeftmostBlock:
    """Default schedule: the cycle through position 0, starting at 0, to the left end."""

    def choose(self, s: Perm0) -> Tuple[str, int]:
        return "left", 0


class RandomBlock:
    """Random end of the line and random starting element of that end's cycle."""

    def __init__(self, rng: random.Random):
        self.rng = rng

    def choose(self, s: Perm0) -> Tuple[str, int]:
        side = self.rng.choice(("left", "right"))
        anchor = 0 if side == "left" else len(s) - 1
        cyc = [anchor]
        v = s[anchor]
        while v != anchor:
            cyc.append(v)
            v = s[v]
        return side, self.rng.choice(cyc)


# -- evaluator ------------------------------------------------------------------


class WeightSystem:
    """Memoized evaluator of ``w_gl`` or ``w_so`` on permutations.

    The memo maps 0-based image tuples to polynomials.  With
    ``canonical_rotation`` the key is the least cyclic conjugate (cyclic
    invariance); with ``canonical_reversal`` (so only) every cycle is
    oriented canonically and the reversal sign is tracked.  Both are off by
    default.
    """

    def __init__(
        self,
        family: str,
        *,
        canonical_rotation: bool = False,
        canonical_reversal: bool = False,
        strategy=None,
        memo: Optional[dict] = None,
    ):
        if family not in (GL, SO):
            raise ValueError(f"unknown family {family!r}")
        if canonical_reversal and family != SO:
            raise ValueError("reversal canonicalization only holds for so")
        self.family = family
        self.canonical_rotation = canonical_rotation
        self.canonical_reversal = canonical_reversal
        self.strategy = strategy or LeftmostBlock()
        self.memo: Dict[Perm0, Polynomial] = {} if memo is None else memo
        self._odd: Dict[int, Polynomial] = {}
        self._lock = threading.Lock()

    # public API

    def __call__(self, s) -> Polynomial:
        return self.evaluate(s)

    def evaluate(self, s) -> Polynomial:
        if isinstance(s, Permutation):
            s = s.zero_based
        return self._eval(tuple(s))

    def evaluate_product(self, factors: Sequence) -> Polynomial:
        out = ONE
        for f in factors:
            out = out * self.evaluate(f)
        return out

    def odd_cycle_value(self, m: int) -> Polynomial:
        if self.family != SO:
            raise ValueError("odd_cycle_value is an so-only notion")
        if m < 1 or m % 2 == 0:
            raise ValueError(f"odd_cycle_value needs an odd positive length, got {m}")
        if m not in self._odd:
            if m == 1:
                val = ZERO
            else:
                # reversed cycle i -> i-1 equals minus the standard one; the
                # bubble schedule carries it onto the standard cycle
                rev = tuple((p - 1) % m for p in range(m))
                final, corr = self._bubble(rev, "left", 0)
                assert final == tuple((p + 1) % m for p in range(m))
                val = corr.scale(-1) / 2
            self._odd[m] = val
        return self._odd[m]

    def terms_value(self, terms: Sequence[Term]) -> Polynomial:
        acc = ZERO
        for sign, free, t in terms:
            v = self._eval(t)
            if not v:
                continue
            if free:
                v = v * C(0, free)
            acc = acc + (v if sign > 0 else -v)
        return acc

    # internals

    def _key(self, s: Perm0) -> Tuple[Perm0, int]:
        sign = 1
        if self.canonical_reversal:
            s, sign = reversal_canonical(s)
        if self.canonical_rotation:
            s = rotation_canonical(s)
            if self.canonical_reversal:
                s2, sign2 = reversal_canonical(s)
                s, sign = s2, sign * sign2
        return s, sign

    def _eval(self, s: Perm0) -> Polynomial:
        key, sign = self._key(s)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._compute(key)
            with self._lock:
                self.memo[key] = hit
        return hit if sign > 0 else -hit

    def _base(self, k: int) -> Polynomial:
        if self.family == SO and k % 2:
            return self.odd_cycle_value(k)
        return C(k)

    def _compute(self, s: Perm0) -> Polynomial:
        m = len(s)
        if m == 0:
            return ONE
        for p in range(m):
            if s[p] == p:
                if self.family == SO:
                    return ZERO
                rest = tuple(v - (v > p) for q, v in enumerate(s) if q != p)
                return C(1) * self._eval(rest)
        hi = -1
        for k in range(m - 1):
            hi = max(hi, s[k])
            if hi == k:
                left = s[: k + 1]
                right = tuple(v - k - 1 for v in s[k + 1 :])
                return self._eval(left) * self._eval(right)
        side, start = self.strategy.choose(s)
        final, corr = self._bubble(s, side, start)
        if side == "left":
            k = self._block_length(final, 0)
            rest = tuple(v - k for v in final[k:])
        else:
            k = self._block_length(final, m - 1)
            rest = final[: m - k]
        if k == m:
            return self._base(k) + corr
        return self._base(k) * self._eval(rest) + corr

    @staticmethod
    def _block_length(s: Perm0, anchor: int) -> int:
        n, v = 1, s[anchor]
        while v != anchor:
            n += 1
            v = s[v]
        return n

    def _bubble(self, s: Perm0, side: str, start: int) -> Tuple[Perm0, Polynomial]:
        """Move the cycle through ``start`` into a standard block at ``side``.

        Returns the final permutation and the accumulated smaller terms, so
        that ``w(s) = w(final) + correction``.
        """
        m = len(s)
        cur = s
        corr = ZERO

        def move(q, t):
            nonlocal cur, corr
            while q != t:
                r = q - 1 if q > t else q
                corr = corr + self.terms_value(relation_terms(cur, r, self.family))
                cur = swap_conjugate(cur, r)
                q = r if q > t else q + 1

        if side == "left":
            move(start, 0)
            k = self._block_length(cur, 0)
            for j in range(1, k):
                q = cur[j - 1]
                move(q, j)
        else:
            move(start, m - 1)
            k = self._block_length(cur, m - 1)
            inv = None
            for j in range(1, k):
                inv = {v: p for p, v in enumerate(cur)}
                q = inv[m - j]
                move(q, m - 1 - j)
        return cur, corr


def eval_wgl(s, **kw) -> Polynomial:
    return WeightSystem(GL, **kw).evaluate(s)


def eval_wso(s, **kw) -> Polynomial:
    return WeightSystem(SO, **kw).evaluate(s)
