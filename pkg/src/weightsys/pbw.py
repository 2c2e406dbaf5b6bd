"""PBW normal ordering in U(so(N)) and U(sp(2M)).

A brute-force check that the universal so weight system specializes to the
enveloping-algebra sums.  Elements are dicts mapping sorted tuples of basis
indices (PBW monomials) to rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .engine import SO, WeightSystem
from .perm import Permutation, cycles
from .poly import Polynomial

Word = Tuple[int, ...]
PBWElement = Dict[Word, Fraction]

SIZE_GUARD = 10**7


class SizeGuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    dim: int

    def __post_init__(self):
        if self.family not in ("so", "sp"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.dim < 2:
            raise ValueError("dimension must be >= 2")
        if self.family == "sp" and self.dim % 2:
            raise ValueError("sp needs an even dimension")

    @classmethod
    def so(cls, N: int) -> "AlgebraSpec":
        return cls("so", N)

    @classmethod
    def sp(cls, two_m: int) -> "AlgebraSpec":
        return cls("sp", two_m)

    def bar(self, i: int) -> int:
        return self.dim + 1 - i

    def eps(self, i: int) -> int:
        if self.family == "so":
            return 1
        return 1 if i <= self.dim // 2 else -1

    @property
    def c0(self) -> int:
        return self.dim if self.family == "so" else -self.dim

    def __str__(self) -> str:
        return f"{self.family}({self.dim})"


# -- generators -------------------------------------------------------------------


class Algebra:
    """Basis, linear reduction and commutator table for one ``AlgebraSpec``."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        d = spec.dim
        basis = []
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                partner = (spec.bar(j), spec.bar(i))
                if partner == (i, j):
                    # self-paired: zero for so, vacuous relation for sp
                    if spec.family == "sp":
                        basis.append((i, j))
                elif (i, j) < partner:
                    basis.append((i, j))
        self.basis: List[Tuple[int, int]] = basis
        self.index = {p: k for k, p in enumerate(basis)}
        n = len(basis)
        self.comm: List[List[Dict[int, int]]] = [[{} for _ in range(n)] for _ in range(n)]
        for a, (i, j) in enumerate(basis):
            for b, (k, l) in enumerate(basis):
                self.comm[a][b] = self._commutator(i, j, k, l)

    def __len__(self) -> int:
        return len(self.basis)

    def reduce(self, i: int, j: int) -> Optional[Tuple[int, int]]:
        """``X_ij`` as ``(sign, basis index)``, or None if it vanishes."""
        if (i, j) in self.index:
            return 1, self.index[(i, j)]
        s = self.spec
        partner = (s.bar(j), s.bar(i))
        if partner == (i, j):
            return None
        return -s.eps(i) * s.eps(j), self.index[partner]

    def _commutator(self, i: int, j: int, k: int, l: int) -> Dict[int, int]:
        """``[X_ij, X_kl]`` in the basis.

        so: d_kj X_il - d_il X_kj - d_{l'j} X_{ik'} + d_{ik'} X_{l'j};
        sp carries ``eps_k eps_l`` on the last two terms.
        """
        s = self.spec
        bk, bl = s.bar(k), s.bar(l)
        e = s.eps(k) * s.eps(l)
        terms = []
        if k == j:
            terms.append((1, i, l))
        if i == l:
            terms.append((-1, k, j))
        if bl == j:
            terms.append((-e, i, bk))
        if i == bk:
            terms.append((e, bl, j))
        out: Dict[int, int] = {}
        for c, p, q in terms:
            red = self.reduce(p, q)
            if red is None:
                continue
            sg, g = red
            out[g] = out.get(g, 0) + c * sg
        return {g: c for g, c in out.items() if c}


@lru_cache(maxsize=None)
def algebra(spec: AlgebraSpec) -> Algebra:
    return Algebra(spec)


def basis_size(spec: AlgebraSpec) -> int:
    return len(algebra(spec))


def reduce_generator(spec: AlgebraSpec, i: int, j: int) -> Optional[Tuple[int, Tuple[int, int]]]:
    """``X_ij = sign * X_rep``; None when the linear relations force zero."""
    if not (1 <= i <= spec.dim and 1 <= j <= spec.dim):
        raise ValueError(f"index out of range 1..{spec.dim}")
    alg = algebra(spec)
    red = alg.reduce(i, j)
    if red is None:
        return None
    return red[0], alg.basis[red[1]]


def commutator(spec: AlgebraSpec, i: int, j: int, k: int, l: int) -> Dict[Tuple[int, int], int]:
    """``X_ij X_kl - X_kl X_ij`` as a combination of basis generators."""
    alg = algebra(spec)
    out: Dict[int, int] = {}
    a, b = alg.reduce(i, j), alg.reduce(k, l)
    if a is None or b is None:
        return {}
    for g, c in alg.comm[a[1]][b[1]].items():
        out[g] = out.get(g, 0) + a[0] * b[0] * c
    return {alg.basis[g]: c for g, c in out.items() if c}


# -- normal ordering --------------------------------------------------------------


def _add_into(acc: PBWElement, other: PBWElement, scale=1):
    for w, c in other.items():
        v = acc.get(w, 0) + scale * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


class _Normalizer:
    def __init__(self, alg: Algebra):
        self.alg = alg
        self.cache: Dict[Word, PBWElement] = {}

    def word(self, w: Word) -> PBWElement:
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        pos = next((p for p in range(len(w) - 1) if w[p] > w[p + 1]), None)
        if pos is None:
            res = {w: 1}
        else:
            a, b = w[pos], w[pos + 1]
            head, tail = w[:pos], w[pos + 2 :]
            # a b = b a + [a, b]
            res = dict(self.word(head + (b, a) + tail))
            for g, c in self.alg.comm[a][b].items():
                _add_into(res, self.word(head + (g,) + tail), c)
        self.cache[w] = res
        return res


@lru_cache(maxsize=None)
def _normalizer(spec: AlgebraSpec) -> _Normalizer:
    return _Normalizer(algebra(spec))


def normal_form(spec: AlgebraSpec, word: Sequence[Tuple[int, int]], coeff=1) -> PBWElement:
    """Normal form of ``coeff * X_{w1} X_{w2} ...`` for index pairs ``w``."""
    alg = algebra(spec)
    sign = 1
    gens = []
    for i, j in word:
        red = alg.reduce(i, j)
        if red is None:
            return {}
        sign *= red[0]
        gens.append(red[1])
    c = Fraction(coeff) * sign
    if not c:
        return {}
    return {w: c * v for w, v in _normalizer(spec).word(tuple(gens)).items()}


def multiply(spec: AlgebraSpec, x: PBWElement, y: PBWElement) -> PBWElement:
    norm = _normalizer(spec)
    out: PBWElement = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            _add_into(out, norm.word(wx + wy), cx * cy)
    return out


def add(x: PBWElement, y: PBWElement, scale=1) -> PBWElement:
    out = dict(x)
    _add_into(out, y, scale)
    return out


def generator_element(spec: AlgebraSpec, i: int, j: int) -> PBWElement:
    return normal_form(spec, [(i, j)])


def format_element(spec: AlgebraSpec, e: PBWElement) -> str:
    if not e:
        return "0"
    alg = algebra(spec)
    parts = []
    for w in sorted(e):
        mono = "*".join(f"X{alg.basis[g][0]}{alg.basis[g][1]}" for g in w) or "1"
        parts.append(f"{e[w]}*{mono}")
    return " + ".join(parts)


# -- weight-system sums -----------------------------------------------------------


def _guard(spec: AlgebraSpec, m: int):
    if spec.dim**m > SIZE_GUARD:
        raise SizeGuardExceeded(f"{spec.dim}^{m} index tuples exceed the limit {SIZE_GUARD}")


def w_envelope(spec: AlgebraSpec, s: Permutation) -> PBWElement:
    """``sum X_{i1 i_s(1)} ... X_{im i_s(m)}``; sp carries ``(-1)^(m+r)``."""
    m = len(s)
    _guard(spec, m)
    alg = algebra(spec)
    norm = _normalizer(spec)
    counts: Dict[Word, int] = {}
    for idx in itertools.product(range(1, spec.dim + 1), repeat=m):
        sign = 1
        gens = []
        for k in range(m):
            red = alg.reduce(idx[k], idx[s.images[k] - 1])
            if red is None:
                break
            sign *= red[0]
            gens.append(red[1])
        else:
            w = tuple(gens)
            counts[w] = counts.get(w, 0) + sign
    out: PBWElement = {}
    for w, c in counts.items():
        if c:
            _add_into(out, norm.word(w), c)
    if spec.family == "sp" and (m + cycles(s).r) % 2:
        out = {w: -c for w, c in out.items()}
    return out


def casimir_pbw(spec: AlgebraSpec, m: int) -> PBWElement:
    if m == 0:
        return {(): Fraction(spec.c0)}
    return w_envelope(spec, Permutation.standard_cycle(m))


def specialize(spec: AlgebraSpec, p: Polynomial) -> PBWElement:
    """Substitute ``C0 -> N`` (or ``-2M``) and ``C_k -> casimir_pbw(k)``."""
    cache: Dict[int, PBWElement] = {}
    out: PBWElement = {}
    for mono, coeff in p.terms.items():
        term: PBWElement = {(): Fraction(coeff)}
        for v, e in mono:
            if v == 0:
                term = {w: c * spec.c0**e for w, c in term.items()}
                continue
            if v not in cache:
                cache[v] = casimir_pbw(spec, v)
            for _ in range(e):
                term = multiply(spec, term, cache[v])
        _add_into(out, term)
    return out


def oracle_check(spec: AlgebraSpec, s: Permutation, ws: Optional[WeightSystem] = None) -> bool:
    ws = ws or WeightSystem(SO)
    predicted = specialize(spec, ws(s))
    return predicted == w_envelope(spec, s)


def centrality_check(spec: AlgebraSpec, e: PBWElement) -> bool:
    alg = algebra(spec)
    for g in range(len(alg)):
        x = {(g,): Fraction(1)}
        if multiply(spec, x, e) != multiply(spec, e, x):
            return False
    return True
