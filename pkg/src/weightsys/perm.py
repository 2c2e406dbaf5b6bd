"""Permutations, chord diagrams and extended permutation graphs.

All public I/O is 1-based.  ``Permutation.images[i-1]`` is ``s(i)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


class MalformedPermutation(ValueError):
    pass


class MalformedDiagram(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", imgs)
        m = len(imgs)
        seen = set()
        for v in imgs:
            if not 1 <= v <= m:
                raise MalformedPermutation(f"image {v} out of range 1..{m}")
            if v in seen:
                raise MalformedPermutation(f"image {v} repeated")
            seen.add(v)

    @classmethod
    def from_zero_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(v + 1 for v in images))

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(1, m + 1)))

    @classmethod
    def standard_cycle(cls, m: int) -> "Permutation":
        """``1 -> 2 -> ... -> m -> 1``."""
        return cls(tuple(list(range(2, m + 1)) + [1])) if m else cls(())

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    @property
    def zero_based(self) -> Tuple[int, ...]:
        return tuple(v - 1 for v in self.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """``(self o other)(i) = self(other(i))``."""
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def concat(self, other: "Permutation") -> "Permutation":
        m = len(self)
        return Permutation(self.images + tuple(v + m for v in other.images))

    def is_involution_without_fixed_points(self) -> bool:
        return all(v != i and self(v) == i for i, v in enumerate(self.images, 1))


def parse_permutation(text: str) -> Permutation:
    tokens = text.replace(",", " ").split()
    vals = []
    for tok in tokens:
        try:
            v = int(tok)
        except ValueError:
            raise MalformedPermutation(f"not an integer: {tok!r}") from None
        if v < 1:
            raise MalformedPermutation(f"not a positive integer: {tok!r}")
        vals.append(v)
    return Permutation(tuple(vals))


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: Tuple[Tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.cycles)


def cycles(p: Permutation) -> CycleDecomposition:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p(start)
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p(v)
        out.append(tuple(cyc))
    return CycleDecomposition(tuple(out))


def cyclic_conjugate(p: Permutation) -> Permutation:
    """``c o p o c^-1`` with ``c: i -> i+1 (mod m)``."""
    m = len(p)
    if m == 0:
        return p
    out = [0] * m
    for i, v in enumerate(p.images, 1):
        # c^-1(j) = i  where j = i % m + 1
        out[i % m] = v % m + 1
    return Permutation(tuple(out))


def reverse_cycle(p: Permutation, element: int) -> Permutation:
    """Invert the cycle of ``p`` through ``element``; other cycles are kept."""
    imgs = list(p.images)
    cyc = [element]
    v = p(element)
    while v != element:
        cyc.append(v)
        v = p(v)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        imgs[b - 1] = a
    return Permutation(tuple(imgs))


# -- chord diagrams -----------------------------------------------------------


def _relabel(word: Sequence) -> Tuple[int, ...]:
    names = {}
    out = []
    for a in word:
        if a not in names:
            names[a] = len(names) + 1
        out.append(names[a])
    return tuple(out)


@dataclass(frozen=True)
class ChordDiagram:
    """Double-occurrence word, labels normalized by first occurrence."""

    word: Tuple[int, ...]

    def __post_init__(self):
        counts = {}
        for a in self.word:
            counts[a] = counts.get(a, 0) + 1
        bad = [a for a, c in counts.items() if c != 2]
        if bad:
            raise MalformedDiagram(f"label {bad[0]} does not occur exactly twice")
        object.__setattr__(self, "word", _relabel(self.word))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "ChordDiagram":
        pairs = list(pairs)
        size = 2 * len(pairs)
        word = [0] * size
        for label, (a, b) in enumerate(pairs, 1):
            for e in (a, b):
                if not 1 <= e <= size:
                    raise MalformedDiagram(f"endpoint {e} out of range 1..{size}")
                if word[e - 1]:
                    raise MalformedDiagram(f"endpoint {e} used twice")
                word[e - 1] = label
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def pairs(self) -> List[Tuple[int, int]]:
        first = {}
        out = []
        for pos, a in enumerate(self.word, 1):
            if a in first:
                out.append((first[a], pos))
            else:
                first[a] = pos
        return sorted(out)

    def partner(self) -> Tuple[int, ...]:
        """0-based partner map of the endpoints."""
        part = [0] * len(self.word)
        for a, b in self.pairs():
            part[a - 1] = b - 1
            part[b - 1] = a - 1
        return tuple(part)

    def rotate(self, k: int = 1) -> "ChordDiagram":
        k %= max(len(self.word), 1)
        return ChordDiagram(self.word[k:] + self.word[:k])

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


def parse_diagram(text: str) -> ChordDiagram:
    """Accepts ``"1 2 1 2"`` or ``"(1,3)(2,4)"``."""
    text = text.strip()
    if "(" in text:
        found = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
        leftover = re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", text).strip()
        if leftover or not found:
            raise MalformedDiagram(f"cannot parse pair list {text!r}")
        return ChordDiagram.from_pairs((int(a), int(b)) for a, b in found)
    try:
        return ChordDiagram(tuple(int(t) for t in text.split()))
    except ValueError as exc:
        if isinstance(exc, MalformedDiagram):
            raise
        raise MalformedDiagram(f"cannot parse word {text!r}") from None


def chord_to_permutation(d: ChordDiagram) -> Permutation:
    return Permutation.from_zero_based(d.partner())


def canonical_code(d: ChordDiagram) -> Tuple[int, ...]:
    w = d.word
    return min(_relabel(w[k:] + w[:k]) for k in range(max(len(w), 1)))


def canonical_diagram(d: ChordDiagram) -> ChordDiagram:
    return ChordDiagram(canonical_code(d))


def gap_code(partner: Sequence[int]) -> Tuple[int, ...]:
    """Rotation-minimal sequence of forward chord lengths.

    A complete rotation invariant equivalent to :func:`canonical_code`
    but cheaper to compute; used as a dictionary key.
    """
    size = len(partner)
    g = tuple((partner[i] - i) % size for i in range(size))
    return min(g[k:] + g[:k] for k in range(max(size, 1)))


def _pairings(points: List[int]):
    if not points:
        yield []
        return
    a = points[0]
    for idx in range(1, len(points)):
        rest = points[1:idx] + points[idx + 1 :]
        for tail in _pairings(rest):
            yield [(a, points[idx])] + tail


def enumerate_diagrams(n: int) -> List[Tuple[int, ...]]:
    """All rotation classes of chord diagrams with ``n`` chords, as sorted codes."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 8:
        raise ValueError("diagram enumeration is limited to n <= 8")
    size = 2 * n
    reps = {}
    for pairing in _pairings(list(range(size))):
        part = [0] * size
        for a, b in pairing:
            part[a] = b
            part[b] = a
        key = gap_code(part)
        if key not in reps:
            reps[key] = part
    codes = set()
    for part in reps.values():
        word = [0] * size
        label = 0
        for i in range(size):
            if i < part[i]:
                label += 1
                word[i] = word[part[i]] = label
        codes.add(canonical_code(ChordDiagram(tuple(word))))
    return sorted(codes)


# -- extended permutation graphs ---------------------------------------------

HEAD = "head"
TAIL = "tail"

Endpoint = Tuple[int, str]


@dataclass(frozen=True)
class ExtendedGraph:
    """Vertices ``1..m``; each edge is a pair of ``(vertex, role)`` endpoints."""

    m: int
    edges: Tuple[Tuple[Endpoint, Endpoint], ...]

    def __post_init__(self):
        if len(self.edges) != self.m:
            raise ValueError("an extended graph has as many edges as vertices")
        roles = {}
        for edge in self.edges:
            for v, role in edge:
                if role not in (HEAD, TAIL) or not 1 <= v <= self.m:
                    raise ValueError(f"bad endpoint {(v, role)}")
                roles.setdefault(v, []).append(role)
        for v in range(1, self.m + 1):
            if sorted(roles.get(v, [])) != [HEAD, TAIL]:
                raise ValueError(f"vertex {v} needs exactly one head and one tail")

    @classmethod
    def from_permutation(cls, p: Permutation) -> "ExtendedGraph":
        return cls(len(p), tuple(((i, TAIL), (p(i), HEAD)) for i in range(1, len(p) + 1)))


@dataclass(frozen=True)
class SignedPermutation:
    perm: Permutation
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def normalize_extended(g: ExtendedGraph, flip_order: Sequence[int] | None = None) -> SignedPermutation:
    """Flip vertices until every edge runs tail -> head.

    Default: walk each cycle from its minimal vertex, never flipping that
    vertex.  ``flip_order`` optionally lists the vertex to keep fixed in
    each cycle (any vertex of the cycle works; the result may then differ
    by a cycle reversal, whose sign is accounted for).
    """
    m = g.m
    # at each vertex: the two half-edges as (edge index, side)
    incident = {v: [] for v in range(1, m + 1)}
    for ei, edge in enumerate(g.edges):
        for side, (v, role) in enumerate(edge):
            incident[v].append((ei, side))
    flipped = [False] * (m + 1)

    def role(v, ei, side):
        r = g.edges[ei][side][1]
        if flipped[v]:
            return HEAD if r == TAIL else TAIL
        return r

    images = [0] * m
    done = [False] * (m + 1)
    nflips = 0
    anchors = list(flip_order) if flip_order is not None else []
    order = anchors + [v for v in range(1, m + 1) if v not in anchors]
    for start in order:
        if done[start]:
            continue
        v = start
        while True:
            done[v] = True
            # leave v along its tail half-edge
            (e1, s1), (e2, s2) = incident[v]
            ei, side = (e1, s1) if role(v, e1, s1) == TAIL else (e2, s2)
            u, _ = g.edges[ei][1 - side]
            if u == v:
                # loop: the other half-edge at v must be its head
                images[v - 1] = v
                break
            other = 1 - side
            if not done[u]:
                if role(u, ei, other) == TAIL:
                    flipped[u] = True
                    nflips += 1
            assert role(u, ei, other) == HEAD, "inconsistent extended graph"
            images[v - 1] = u
            if u == start:
                break
            v = u
    return SignedPermutation(Permutation(tuple(images)), -1 if nflips % 2 else 1)
