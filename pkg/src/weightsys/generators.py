"""Multiplicative generators of the chord-diagram algebra in degrees <= 7 and the element h."""

from __future__ import annotations

from typing import Dict, List, Tuple

from .perm import ChordDiagram, Permutation, chord_to_permutation

# chord endpoint pairs; "p3" is listed as the triangle (1,4)(2,5)(3,6)
GENERATOR_PAIRS: Dict[str, List[Tuple[int, int]]] = {
    "p1": [(1, 2)],
    "p2": [(1, 3), (2, 4)],
    "p3": [(1, 4), (2, 5), (3, 6)],
    "p4,1": [(1, 3), (2, 5), (4, 7), (6, 8)],
    "p4,2": [(1, 4), (2, 7), (3, 6), (5, 8)],
    "p5,1": [(1, 3), (2, 5), (4, 7), (6, 9), (8, 10)],
    "p5,2": [(1, 3), (2, 6), (4, 9), (5, 8), (7, 10)],
    "p5,3": [(1, 4), (2, 9), (3, 6), (5, 8), (7, 10)],
    "p6,1": [(1, 3), (2, 5), (4, 7), (6, 9), (8, 11), (10, 12)],
    "p6,2": [(1, 3), (2, 5), (4, 8), (6, 11), (7, 10), (9, 12)],
    "p6,3": [(1, 3), (2, 6), (4, 11), (5, 8), (7, 10), (9, 12)],
    "p6,4": [(1, 4), (2, 11), (3, 6), (5, 8), (7, 10), (9, 12)],
    "p6,5": [(1, 4), (2, 8), (3, 6), (5, 11), (7, 10), (9, 12)],
    "p7,1": [(1, 3), (2, 5), (4, 7), (6, 9), (8, 11), (10, 13), (12, 14)],
    "p7,2": [(1, 3), (2, 5), (4, 7), (6, 10), (8, 13), (9, 12), (11, 14)],
    "p7,3": [(1, 3), (2, 5), (4, 8), (6, 13), (7, 10), (9, 12), (11, 14)],
    "p7,4": [(1, 3), (2, 6), (4, 13), (5, 8), (7, 10), (9, 12), (11, 14)],
    "p7,5": [(1, 4), (2, 13), (3, 6), (5, 8), (7, 10), (9, 12), (11, 14)],
    "p7,6": [(1, 3), (2, 6), (4, 10), (5, 8), (7, 13), (9, 12), (11, 14)],
    "p7,7": [(1, 4), (2, 7), (3, 6), (5, 10), (8, 13), (9, 12), (11, 14)],
    "p7,8": [(1, 4), (2, 8), (3, 6), (5, 13), (7, 10), (9, 12), (11, 14)],
}

# the three-chord chain 1 2 1 3 2 3; the reference values of w(p3) and the
# identity w_gl(h) = 0 hold for this diagram, not for the triangle
P3_CHAIN: List[Tuple[int, int]] = [(1, 3), (2, 5), (4, 6)]

# h as a list of (coefficient, {generator: exponent})
H_TERMS: List[Tuple[int, Dict[str, int]]] = [
    (3, {"p1": 5, "p2": 1}),
    (-15, {"p1": 3, "p2": 2}),
    (-87, {"p1": 1, "p2": 3}),
    (-6, {"p1": 4, "p3": 1}),
    (255, {"p1": 2, "p2": 1, "p3": 1}),
    (-12, {"p2": 2, "p3": 1}),
    (-171, {"p1": 1, "p3": 2}),
    (-99, {"p1": 3, "p4,1": 1}),
    (133, {"p3": 1, "p4,1": 1}),
    (3, {"p1": 3, "p4,2": 1}),
    (-28, {"p3": 1, "p4,2": 1}),
    (21, {"p1": 1, "p2": 1, "p4,2": 1}),
    (45, {"p1": 2, "p5,1": 1}),
    (-24, {"p1": 2, "p5,2": 1}),
    (18, {"p1": 2, "p5,3": 1}),
    (-12, {"p2": 1, "p5,3": 1}),
    (17, {"p1": 1, "p6,1": 1}),
    (1, {"p1": 1, "p6,2": 1}),
    (-30, {"p1": 1, "p6,3": 1}),
    (-8, {"p1": 1, "p6,4": 1}),
    (20, {"p1": 1, "p6,5": 1}),
    (-46, {"p7,1": 1}),
    (11, {"p7,2": 1}),
    (18, {"p7,3": 1}),
    (8, {"p7,4": 1}),
    (-6, {"p7,5": 1}),
    (-20, {"p7,6": 1}),
    (5, {"p7,7": 1}),
    (6, {"p7,8": 1}),
]


def generator_degree(name: str) -> int:
    return int(name[1:].split(",")[0])


def generator_pairs(name: str, p3_variant: str = "chain") -> List[Tuple[int, int]]:
    """Endpoint pairs of a generator; ``p3_variant`` is "chain" or "triangle"."""
    if p3_variant not in ("chain", "triangle"):
        raise ValueError(f"unknown p3 variant {p3_variant!r}")
    if name == "p3" and p3_variant == "chain":
        return list(P3_CHAIN)
    return list(GENERATOR_PAIRS[name])


def generator_diagram(name: str, p3_variant: str = "chain") -> ChordDiagram:
    return ChordDiagram.from_pairs(generator_pairs(name, p3_variant))


def generator_permutation(name: str, p3_variant: str = "chain") -> Permutation:
    return chord_to_permutation(generator_diagram(name, p3_variant))


def expected_h_values():
    """Reference values ``(w_gl(h), w_so(h))``."""
    from .poly import C, ZERO

    c0, c2, c4 = C(0), C(2), C(4)
    inner = (
        -24 * c2 + 20 * c0 * c2 - 4 * c0**2 * c2 - 2 * c2**2 - 4 * c0 * c2**2
        + c0**2 * c2**2 + 16 * c4 - 2 * c0 * c4
    )
    return ZERO, 192 * c0 * (c0 - 6) * inner
