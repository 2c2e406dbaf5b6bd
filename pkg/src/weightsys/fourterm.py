"""Chord diagrams modulo 4-term relations: dimensions, kernels of the weight systems, h."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .engine import GL, SO, WeightSystem
from .generators import GENERATOR_PAIRS, H_TERMS, generator_permutation
from .perm import ChordDiagram, chord_to_permutation, enumerate_diagrams, gap_code
from .poly import ONE, ZERO, Monomial, Polynomial

log = logging.getLogger(__name__)

Row = Dict[int, object]


@dataclass
class SparseRationalMatrix:
    ncols: int
    rows: List[Row] = field(default_factory=list)

    def add_row(self, row: Row):
        clean = {c: v for c, v in row.items() if v}
        for c in clean:
            if not 0 <= c < self.ncols:
                raise IndexError(f"column {c} out of range")
        self.rows.append(clean)

    def echelon(self) -> Dict[int, Row]:
        return echelon(self.rows)

    def rank(self) -> int:
        return len(self.echelon())


def _div(a, b):
    q = Fraction(a) / b
    return q.numerator if q.denominator == 1 else q


def echelon(rows: Iterable[Row]) -> Dict[int, Row]:
    """Row echelon form keyed by pivot column; pivot = least nonzero column.

    Pivot rows are scaled to a leading 1.  Exact arithmetic throughout.
    """
    pivots: Dict[int, Row] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            prow = pivots.get(c)
            if prow is None:
                lead = r[c]
                if lead != 1:
                    r = {k: _div(v, lead) for k, v in r.items()}
                pivots[c] = r
                break
            f = r[c]
            for k, v in prow.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return pivots


def matrix_rank(rows: Iterable[Row]) -> int:
    return len(echelon(rows))


def nullspace(rows: Sequence[Row], ncols: int) -> List[Dict[int, object]]:
    """Basis of ``{v : row . v = 0 for every row}``."""
    piv = echelon(rows)
    # back-substitute into reduced form
    order = sorted(piv, reverse=True)
    reduced: Dict[int, Row] = {}
    for c in order:
        r = dict(piv[c])
        for k in sorted(k for k in r if k != c and k in reduced):
            f = r.get(k)
            if not f:
                continue
            for kk, vv in reduced[k].items():
                nv = r.get(kk, 0) - f * vv
                if nv:
                    r[kk] = nv
                else:
                    r.pop(kk, None)
        reduced[c] = r
    basis = []
    for free in range(ncols):
        if free in piv:
            continue
        vec = {free: 1}
        for c, r in reduced.items():
            if free in r:
                vec[c] = -r[free]
        basis.append(vec)
    return basis


# -- diagrams and relations -----------------------------------------------------


class DiagramIndex:
    """Column index for the rotation classes of ``n``-chord diagrams.

    Columns run in reverse lexicographic order of canonical codes so that
    the free columns of the elimination are the simplest diagrams.
    """

    def __init__(self, n: int):
        self.n = n
        self.codes: List[Tuple[int, ...]] = list(reversed(enumerate_diagrams(n)))
        self._col: Dict[Tuple[int, ...], int] = {}
        for i, code in enumerate(self.codes):
            self._col[gap_code(ChordDiagram(code).partner())] = i

    def __len__(self) -> int:
        return len(self.codes)

    def column_of_word(self, word: Sequence[int]) -> int:
        size = len(word)
        first = {}
        part = [0] * size
        for i, a in enumerate(word):
            if a in first:
                part[i] = first[a]
                part[first[a]] = i
            else:
                first[a] = i
        return self._col[gap_code(part)]

    def diagram(self, col: int) -> ChordDiagram:
        return ChordDiagram(self.codes[col])


def four_term_configurations(word: Sequence[int]):
    """All 4T instances obtained from ``word``: ``(b, reduced word, a)`` data.

    Yields the four words (e before p, e after p, e before q, e after q),
    where ``e`` is an endpoint of chord ``b`` and ``p, q`` the endpoints of
    chord ``a``; the relation is  D1 - D2 + D3 - D4 = 0.
    """
    labels = sorted(set(word))
    for pos, b in enumerate(word):
        reduced = list(word[:pos]) + list(word[pos + 1 :])
        for a in labels:
            if a == b:
                continue
            p, q = [i for i, v in enumerate(reduced) if v == a]
            words = []
            for at in (p, p + 1, q, q + 1):
                words.append(tuple(reduced[:at] + [b] + reduced[at:]))
            yield tuple(words)


FOUR_TERM_SIGNS = (1, -1, 1, -1)


def four_term_relations(n: int, index: Optional[DiagramIndex] = None) -> SparseRationalMatrix:
    index = index or DiagramIndex(n)
    mat = SparseRationalMatrix(len(index))
    if n < 2:
        return mat
    seen = set()
    for code in index.codes:
        for words in four_term_configurations(code):
            row: Row = {}
            for sgn, w in zip(FOUR_TERM_SIGNS, words):
                c = index.column_of_word(w)
                row[c] = row.get(c, 0) + sgn
            row = {c: v for c, v in row.items() if v}
            if not row:
                continue
            key = tuple(sorted(row.items()))
            if key in seen:
                continue
            seen.add(key)
            mat.add_row(row)
    return mat


def collapse_identifications(rows: Sequence[Row], ncols: int) -> Tuple[List[int], List[Row]]:
    """Merge columns related by two-term rows ``a - b = 0``.

    Returns the representative of every column (the largest column of its
    class) and the remaining rows rewritten on representatives.
    """
    parent = list(range(ncols))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for row in rows:
        if len(row) == 2 and sorted(row.values()) == [-1, 1]:
            a, b = (find(c) for c in row)
            if a != b:
                lo, hi = sorted((a, b))
                parent[lo] = hi
    rep = [find(c) for c in range(ncols)]
    seen = set()
    out: List[Row] = []
    for row in rows:
        if len(row) == 2 and sorted(row.values()) == [-1, 1]:
            continue
        merged: Row = {}
        for c, v in row.items():
            merged[rep[c]] = merged.get(rep[c], 0) + v
        merged = {c: v for c, v in merged.items() if v}
        key = tuple(sorted(merged.items()))
        if merged and key not in seen:
            seen.add(key)
            out.append(merged)
    out.sort(key=len)
    return rep, out


@dataclass
class QuotientBasis:
    n: int
    index: DiagramIndex
    rank: int
    representative: List[int]
    pivots: Dict[int, Row]
    basis_columns: List[int]

    @property
    def dim(self) -> int:
        return len(self.index) - self.rank

    def basis_diagrams(self) -> List[ChordDiagram]:
        return [self.index.diagram(c) for c in self.basis_columns]


_QUOTIENTS: Dict[int, QuotientBasis] = {}


def quotient_basis(n: int) -> QuotientBasis:
    if n not in _QUOTIENTS:
        t0 = time.perf_counter()
        index = DiagramIndex(n)
        rel = four_term_relations(n, index)
        log.info("n=%d: %d diagrams, %d relations (%.1fs)", n, len(index), len(rel.rows), time.perf_counter() - t0)
        rep, rows = collapse_identifications(rel.rows, len(index))
        classes = sorted(set(rep))
        piv = echelon(rows)
        free = [c for c in classes if c not in piv]
        rank = len(index) - len(free)
        log.info("n=%d: rank %d after elimination (%.1fs)", n, rank, time.perf_counter() - t0)
        _QUOTIENTS[n] = QuotientBasis(n, index, rank, rep, piv, free)
    return _QUOTIENTS[n]


def dim_A(n: int) -> int:
    if not 1 <= n <= 7:
        raise ValueError("dim_A is supported for 1 <= n <= 7")
    return quotient_basis(n).dim


# -- weight-system evaluation matrices ---------------------------------------


def _evaluation_rows(values: Sequence[Sequence[Polynomial]]) -> Tuple[List[Row], int]:
    """One row per diagram; columns index (block, monomial) pairs."""
    colmap: Dict[Tuple[int, Monomial], int] = {}
    rows = []
    for vals in values:
        row: Row = {}
        for block, p in enumerate(vals):
            for m, c in p.terms.items():
                key = (block, m)
                if key not in colmap:
                    colmap[key] = len(colmap)
                row[colmap[key]] = c
        rows.append(row)
    return rows, len(colmap)


def evaluate_diagrams(
    diagrams: Sequence[ChordDiagram], family: str, workers: int = 1, ws: Optional[WeightSystem] = None
) -> List[Polynomial]:
    ws = ws or WeightSystem(family, canonical_rotation=True)
    perms = [chord_to_permutation(d) for d in diagrams]
    if workers <= 1:
        return [ws(p) for p in perms]
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(ws, perms))


@dataclass
class KernelReport:
    n: int
    num_diagrams: int
    rank_4T: int
    dim_A: int
    ker_gl: int
    ker_joint: int
    elapsed: float

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def kernel_dims(n: int, workers: int = 1) -> Tuple[int, int]:
    rep = kernel_report(n, workers)
    return rep.ker_gl, rep.ker_joint


def kernel_report(n: int, workers: int = 1) -> KernelReport:
    if not 1 <= n <= 7:
        raise ValueError("kernel_dims is supported for 1 <= n <= 7")
    t0 = time.perf_counter()
    qb = quotient_basis(n)
    diagrams = qb.basis_diagrams()
    log.info("n=%d: dim A = %d, evaluating %d basis diagrams", n, qb.dim, len(diagrams))
    gl_vals = evaluate_diagrams(diagrams, GL, workers)
    so_vals = evaluate_diagrams(diagrams, SO, workers)
    gl_rows, _ = _evaluation_rows([[v] for v in gl_vals])
    joint_rows, _ = _evaluation_rows(list(zip(gl_vals, so_vals)))
    ker_gl = qb.dim - matrix_rank(gl_rows)
    ker_joint = qb.dim - matrix_rank(joint_rows)
    return KernelReport(
        n, len(qb.index), qb.rank, qb.dim, ker_gl, ker_joint, time.perf_counter() - t0
    )


def kernel_elements(n: int, families: Sequence[str] = (GL, SO)) -> List[Dict[ChordDiagram, object]]:
    """Basis of the joint kernel on A_n as combinations of basis diagrams."""
    qb = quotient_basis(n)
    diagrams = qb.basis_diagrams()
    vals = [evaluate_diagrams(diagrams, f) for f in families]
    rows, ncols = _evaluation_rows(list(zip(*vals)))
    # kernel of v -> sum v_i row_i : nullspace of the transpose
    cols: List[Row] = [dict() for _ in range(ncols)]
    for i, row in enumerate(rows):
        for c, v in row.items():
            cols[c][i] = v
    out = []
    for vec in nullspace(cols, len(diagrams)):
        out.append({diagrams[i]: c for i, c in vec.items()})
    return out


# -- the element h -------------------------------------------------------------


def generator_values(family: str, ws: Optional[WeightSystem] = None, p3_variant: str = "chain") -> Dict[str, Polynomial]:
    ws = ws or WeightSystem(family, canonical_rotation=True)
    return {g: ws(generator_permutation(g, p3_variant)) for g in GENERATOR_PAIRS}


def evaluate_h(values: Dict[str, Polynomial]) -> Polynomial:
    total = ZERO
    for coeff, mono in H_TERMS:
        term = ONE
        for g, e in mono.items():
            term = term * values[g] ** e
        total = total + term.scale(coeff)
    return total


def h_check(p3_variant: str = "chain") -> Tuple[Polynomial, Polynomial]:
    return (
        evaluate_h(generator_values(GL, p3_variant=p3_variant)),
        evaluate_h(generator_values(SO, p3_variant=p3_variant)),
    )
