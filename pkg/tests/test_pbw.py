import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from weightsys.engine import SO, WeightSystem
from weightsys.pbw import (
    AlgebraSpec,
    SizeGuardExceeded,
    add,
    basis_size,
    casimir_pbw,
    centrality_check,
    commutator,
    multiply,
    normal_form,
    oracle_check,
    reduce_generator,
    w_envelope,
)
from weightsys.perm import Permutation

SO3, SO4, SO5, SP2, SP4 = (
    AlgebraSpec.so(3),
    AlgebraSpec.so(4),
    AlgebraSpec.so(5),
    AlgebraSpec.sp(2),
    AlgebraSpec.sp(4),
)
ALL = [SO3, SO4, SO5, AlgebraSpec.so(6), SP2, SP4]


@pytest.mark.parametrize("spec", ALL, ids=str)
def test_basis_sizes(spec):
    d = spec.dim
    want = d * (d - 1) // 2 if spec.family == "so" else (d // 2) * (d + 1)
    assert basis_size(spec) == want


def test_reduce_generator():
    assert reduce_generator(SO3, 1, 3) is None
    assert reduce_generator(SO3, 3, 3) == (-1, (1, 1))
    assert reduce_generator(SP2, 1, 2) == (1, (1, 2))


def _matrix(spec, i, j):
    d = spec.dim
    A = np.zeros((d, d))
    A[i - 1, j - 1] += 1
    A[spec.bar(j) - 1, spec.bar(i) - 1] -= spec.eps(i) * spec.eps(j)
    return A


@pytest.mark.parametrize("spec", ALL, ids=str)
def test_commutators_against_matrices(spec):
    d = spec.dim
    rng = random.Random(0)
    quads = list(itertools.product(range(1, d + 1), repeat=4))
    for i, j, k, l in rng.sample(quads, min(len(quads), 400)):
        lhs = _matrix(spec, i, j) @ _matrix(spec, k, l) - _matrix(spec, k, l) @ _matrix(spec, i, j)
        rhs = np.zeros((d, d))
        for (p, q), c in commutator(spec, i, j, k, l).items():
            rhs += c * _matrix(spec, p, q)
        assert np.allclose(lhs, rhs), (i, j, k, l)


@pytest.mark.parametrize("spec", ALL, ids=str)
def test_reduction_against_matrices(spec):
    d = spec.dim
    for i, j in itertools.product(range(1, d + 1), repeat=2):
        red = reduce_generator(spec, i, j)
        want = np.zeros((d, d)) if red is None else red[0] * _matrix(spec, *red[1])
        assert np.allclose(_matrix(spec, i, j), want)


def test_so3_bracket():
    e = add(normal_form(SO3, [(1, 2), (2, 1)]), normal_form(SO3, [(2, 1), (1, 2)]), -1)
    assert e == normal_form(SO3, [(1, 1)])


def test_sorted_word_unchanged():
    e = normal_form(SO4, [(1, 1), (1, 2)], Fraction(3, 2))
    assert e == {(0, 1): Fraction(3, 2)}


_pairs = st.tuples(st.integers(1, 4), st.integers(1, 4))


@given(st.lists(_pairs, min_size=1, max_size=4), st.lists(_pairs, max_size=4), st.lists(_pairs, max_size=4))
def test_associativity(a, b, c):
    x, y, z = (normal_form(SO4, w) for w in (a, b, c))
    assert multiply(SO4, x, multiply(SO4, y, z)) == multiply(SO4, multiply(SO4, x, y), z)


def test_envelope_small_cases():
    for spec in (SO3, SO4, SP2):
        assert w_envelope(spec, Permutation((1,))) == {}
        assert casimir_pbw(spec, 1) == {}
    assert w_envelope(SO3, Permutation((2, 1))) == casimir_pbw(SO3, 2)
    c2 = casimir_pbw(SO3, 2)
    assert casimir_pbw(SO3, 3) == {w: c / 2 for w, c in c2.items()}


def test_sp_casimir_sign():
    raw = {}
    for i, j in itertools.product((1, 2), repeat=2):
        raw = add(raw, normal_form(SP2, [(i, j), (j, i)]))
    assert casimir_pbw(SP2, 2) == {w: -c for w, c in raw.items()}


def test_centrality():
    assert centrality_check(SO3, casimir_pbw(SO3, 2))
    assert not centrality_check(SO3, normal_form(SO3, [(1, 2)]))
    assert centrality_check(SO3, {})


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        w_envelope(AlgebraSpec.so(10), Permutation.standard_cycle(8))


@pytest.mark.parametrize("spec", [SO3, SO4, SP2], ids=str)
def test_oracle_up_to_three(spec):
    ws = WeightSystem(SO)
    for m in range(1, 4):
        for p in itertools.permutations(range(1, m + 1)):
            assert oracle_check(spec, Permutation(p), ws), p


def test_oracle_so4_transposition():
    assert oracle_check(SO4, Permutation((2, 1)))
