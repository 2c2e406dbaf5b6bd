import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import permutations
from weightsys.engine import (
    GL,
    SO,
    RandomBlock,
    WeightSystem,
    eval_wgl,
    eval_wso,
    relation_terms,
    swap_conjugate,
)
from weightsys.generators import generator_permutation
from weightsys.perm import Permutation, cycles, cyclic_conjugate, reverse_cycle
from weightsys.poly import ONE, C, parse_polynomial

WGL_P3 = parse_polynomial("C2^3 - 2*C0*C2^2 + C0^2*C2 + 2*C1^2*C2 - C0*C1^2")
WSO_P3 = parse_polynomial("C2^3 - 4*C0*C2^2 + 8*C2^2 + 4*C0^2*C2 - 16*C0*C2 + 16*C2")
C5 = parse_polynomial("-1/4*C0^3*C2 + 5/4*C0^2*C2 - 2*C0*C2 + 3/2*C0*C4 + C2 - 2*C4 - 1/2*C2^2")


def test_standard_cycles_are_casimirs(wgl, wso):
    for m in range(1, 7):
        assert wgl(Permutation.standard_cycle(m)) == C(m)
    for m in (2, 4, 6):
        assert wso(Permutation.standard_cycle(m)) == C(m)


def test_empty_and_fixed_point(wgl, wso):
    assert wgl(()) == ONE
    assert wgl((0,)) == C(1)
    assert wso((0,)) == 0


def test_two_cycle():
    assert eval_wgl(Permutation((2, 1))) == C(2)
    assert eval_wso(Permutation((2, 1))) == C(2)


def test_p2_values():
    p2 = generator_permutation("p2")
    assert eval_wgl(p2) == C(1) ** 2 + C(2) ** 2 - C(0) * C(2)
    assert eval_wso(p2) == C(2) ** 2 - 2 * C(0) * C(2) + 4 * C(2)


def test_p3_values():
    p3 = generator_permutation("p3")
    assert p3.images == (3, 5, 1, 6, 2, 4)
    assert eval_wgl(p3) == WGL_P3
    assert eval_wso(p3) == WSO_P3


def test_triangle_values(wgl, wso):
    tri = Permutation((4, 5, 6, 1, 2, 3))
    assert generator_permutation("p3", "triangle") == tri
    assert wgl(tri) == parse_polynomial("3*C1^2*C2 + C2^3 - 2*C0*C1^2 - 3*C0*C2^2 + 2*C0^2*C2")
    assert wso(tri) == parse_polynomial(
        "C2^3 - 6*C0*C2^2 + 8*C0^2*C2 + 12*C2^2 - 32*C0*C2 + 32*C2"
    )


def test_odd_cycles(wso):
    assert wso.odd_cycle_value(1) == 0
    assert wso.odd_cycle_value(3) == C(0) * C(2) / 2 - C(2)
    assert wso.odd_cycle_value(5) == C5
    assert wso(Permutation.standard_cycle(5)) == C5
    with pytest.raises(ValueError):
        wso.odd_cycle_value(4)
    with pytest.raises(ValueError):
        WeightSystem(GL).odd_cycle_value(3)


def test_exceptional_so_case():
    # s(r) = r+1 within a 3-cycle: the swap term differs by (2 - C0) * C2
    ws = WeightSystem(SO)
    s = (2, 0, 1)
    assert swap_conjugate(s, 0) == (1, 2, 0)
    assert ws.terms_value(relation_terms(s, 0, SO)) == (2 - C(0)) * C(2)
    assert ws(s) - ws((1, 2, 0)) == (2 - C(0)) * C(2)


@pytest.mark.parametrize("family", [GL, SO])
def test_relation_holds_at_every_position(family):
    rng = random.Random(7)
    ws = WeightSystem(family)
    for _ in range(40):
        m = rng.randint(2, 6)
        s = list(range(m))
        rng.shuffle(s)
        s = tuple(s)
        for r in range(m - 1):
            rhs = ws(swap_conjugate(s, r)) + ws.terms_value(relation_terms(s, r, family))
            assert ws(s) == rhs


# -- structural properties --------------------------------------------------------


@given(permutations(max_size=8))
def test_cyclic_invariance_gl(s):
    ws = _shared[GL]
    assert ws(cyclic_conjugate(s)) == ws(s)


@given(permutations(max_size=8))
def test_cyclic_invariance_so(s):
    ws = _shared[SO]
    assert ws(cyclic_conjugate(s)) == ws(s)


@given(permutations(max_size=4), permutations(max_size=4))
def test_multiplicativity(a, b):
    for fam in (GL, SO):
        ws = _shared[fam]
        assert ws(a.concat(b)) == ws(a) * ws(b)


@given(permutations(max_size=7), st.data())
def test_reversal_sign_so(s, data):
    ws = _shared[SO]
    cyc = data.draw(st.sampled_from(cycles(s).cycles))
    assert ws(reverse_cycle(s, cyc[0])) == (-1) ** len(cyc) * ws(s)


@given(permutations(max_size=6), st.integers(0, 10**6))
def test_strategy_independence(s, seed):
    for fam in (GL, SO):
        ws = WeightSystem(fam, strategy=RandomBlock(random.Random(seed)))
        assert ws(s) == _shared[fam](s)


@given(permutations(max_size=7))
def test_so_support_is_even(s):
    for v in _shared[SO](s).variables():
        assert v % 2 == 0


@given(permutations(max_size=7))
def test_canonical_memo_keys_agree(s):
    assert _canon[GL](s) == _shared[GL](s)
    assert _canon[SO](s) == _shared[SO](s)


_shared = {GL: WeightSystem(GL), SO: WeightSystem(SO)}
_canon = {
    GL: WeightSystem(GL, canonical_rotation=True),
    SO: WeightSystem(SO, canonical_rotation=True, canonical_reversal=True),
}


def test_shared_memo_threads():
    from concurrent.futures import ThreadPoolExecutor

    memo = {}
    ws = WeightSystem(SO, memo=memo)
    perms = [tuple(p) for p in itertools.permutations(range(5))]
    with ThreadPoolExecutor(4) as pool:
        par = list(pool.map(ws, perms))
    seq = [WeightSystem(SO)(p) for p in perms]
    assert par == seq


# -- representation oracle for gl(N) on V (x) V -------------------------------------


def _tensor_square_generators(N):
    eye = np.eye(N)
    gens = {}
    for i in range(N):
        for j in range(N):
            E = np.zeros((N, N))
            E[i, j] = 1
            gens[i, j] = np.kron(E, eye) + np.kron(eye, E)
    return gens


def _rep_sum(s, N, gens):
    D = N * N
    total = np.zeros((D, D))
    for idx in itertools.product(range(N), repeat=len(s)):
        M = np.eye(D)
        for k in range(len(s)):
            M = M @ gens[idx[k], idx[s[k]]]
        total += M
    return total


def _rep_poly(p, N, cas):
    D = next(iter(cas.values())).shape[0]
    total = np.zeros((D, D))
    for mono, c in p.terms.items():
        M = np.eye(D) * float(c)
        for v, e in mono:
            M = M @ np.linalg.matrix_power(cas[v], e)
        total += M
    return total


@pytest.mark.parametrize("N", [2, 3])
def test_gl_against_tensor_square(N):
    gens = _tensor_square_generators(N)
    cas = {0: N * np.eye(N * N)}
    for k in range(1, 5):
        cas[k] = _rep_sum(Permutation.standard_cycle(k).zero_based, N, gens)
    ws = WeightSystem(GL)
    cases = [p for m in range(1, 5) for p in itertools.permutations(range(m))]
    for s in cases:
        assert np.allclose(_rep_sum(s, N, gens), _rep_poly(ws(s), N, cas))


def test_h_needs_the_chain():
    from weightsys.fourterm import evaluate_h, generator_values

    ws = WeightSystem(GL, canonical_rotation=True)
    assert evaluate_h(generator_values(GL, ws, "chain")) == 0
    assert evaluate_h(generator_values(GL, ws, "triangle")) != 0


def test_identity_and_products(wgl):
    for k in range(5):
        assert wgl(tuple(range(k))) == C(1) ** k
    p1, p2 = generator_permutation("p1"), generator_permutation("p2")
    assert wgl.evaluate_product([p1, p1]) == C(2) ** 2
    assert wgl.evaluate_product([]) == ONE
    assert wgl.evaluate_product([p1, p2]) == C(2) * (C(1) ** 2 + C(2) ** 2 - C(0) * C(2))


def test_specialize_family():
    from weightsys.casimir_series import FamilySpec, specialize_family

    p2 = eval_wso(generator_permutation("p2"))
    assert specialize_family(p2, FamilySpec("so", 6)) == C(2) ** 2 - 8 * C(2)
    assert FamilySpec("sp", 0, 1).c0 == -2
    assert FamilySpec("osp", 3, 1).c0 == 1
    with pytest.raises(ValueError):
        specialize_family(C(3), FamilySpec("so", 3))
