from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightsys.engine import GL, SO, WeightSystem
from weightsys.fourterm import (
    DiagramIndex,
    collapse_identifications,
    dim_A,
    echelon,
    evaluate_diagrams,
    four_term_configurations,
    four_term_relations,
    kernel_elements,
    kernel_report,
    matrix_rank,
    nullspace,
    quotient_basis,
)
from weightsys.perm import ChordDiagram, chord_to_permutation, enumerate_diagrams


def test_echelon_small():
    rows = [{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 3, 2: 1}]
    piv = echelon(rows)
    assert sorted(piv) == [0, 1]
    assert piv[1] == {1: 1, 2: Fraction(1, 3)}
    assert matrix_rank(rows) == 2


rows_st = st.lists(
    st.dictionaries(st.integers(0, 5), st.integers(-3, 3), max_size=4), max_size=6
)


@given(rows_st)
def test_nullspace_is_annihilated(rows):
    basis = nullspace(rows, 6)
    assert len(basis) == 6 - matrix_rank(rows)
    for v in basis:
        for row in rows:
            assert sum(c * v.get(k, 0) for k, c in row.items()) == 0


def test_index_order_puts_simple_diagrams_last():
    idx = DiagramIndex(3)
    assert idx.diagram(len(idx) - 1) == ChordDiagram((1, 1, 2, 2, 3, 3))
    for col, code in enumerate(idx.codes):
        assert idx.column_of_word(code) == col


def test_configurations_shape():
    word = (1, 2, 1, 2)
    configs = list(four_term_configurations(word))
    assert len(configs) == 4
    for quad in configs:
        assert len(quad) == 4
        for w in quad:
            ChordDiagram(w)


def test_relations_are_sound_for_gl():
    ws = WeightSystem(GL, canonical_rotation=True)
    idx = DiagramIndex(4)
    vals = [ws(chord_to_permutation(idx.diagram(c))) for c in range(len(idx))]
    for row in four_term_relations(4, idx).rows:
        assert sum((vals[c] * v for c, v in row.items()), start=vals[0] * 0) == 0


def test_collapse_keeps_rank():
    rel = four_term_relations(5)
    rep, rows = collapse_identifications(rel.rows, rel.ncols)
    merged_rank = rel.ncols - len(set(rep)) + matrix_rank(rows)
    assert merged_rank == matrix_rank(rel.rows)


@pytest.mark.parametrize("n,dim", [(1, 1), (2, 2), (3, 3), (4, 6), (5, 10), (6, 19)])
def test_dim_A(n, dim):
    assert dim_A(n) == dim


def test_dim_A_range():
    with pytest.raises(ValueError):
        dim_A(8)


def test_kernels_small():
    for n in range(1, 6):
        rep = kernel_report(n)
        assert (rep.ker_gl, rep.ker_joint) == (0, 0)
        assert rep.num_diagrams == len(enumerate_diagrams(n))
        assert rep.rank_4T + rep.dim_A == rep.num_diagrams


def test_kernel_n6():
    rep = kernel_report(6)
    assert (rep.dim_A, rep.ker_gl, rep.ker_joint) == (19, 1, 1)
    assert set(rep.as_dict()) == {"n", "num_diagrams", "rank_4T", "dim_A", "ker_gl", "ker_joint", "elapsed"}


def test_kernel_element_n6_is_killed():
    (elem,) = kernel_elements(6)
    for fam in (GL, SO):
        ws = WeightSystem(fam, canonical_rotation=True)
        total = sum(
            (ws(chord_to_permutation(d)) * c for d, c in elem.items()),
            start=ws(()) * 0,
        )
        assert total == 0


def test_parallel_evaluation_matches():
    diagrams = quotient_basis(5).basis_diagrams()
    assert evaluate_diagrams(diagrams, SO, workers=4) == evaluate_diagrams(diagrams, SO)


@pytest.mark.parametrize("family", [GL, SO])
def test_four_term_up_to_four_chords(family):
    ws = WeightSystem(family)
    for n in range(2, 5):
        for code in enumerate_diagrams(n):
            for words in four_term_configurations(code):
                v = [ws(chord_to_permutation(ChordDiagram(w))) for w in words]
                assert v[0] - v[1] + v[2] - v[3] == 0


def test_documented_relation_ranks():
    assert four_term_relations(1).rows == []
    assert matrix_rank(four_term_relations(2).rows) == 0
    assert matrix_rank(four_term_relations(3).rows) == 2


def test_h_vanishes_at_six():
    from weightsys.generators import expected_h_values

    assert expected_h_values()[1].substitute({0: 6}) == 0
