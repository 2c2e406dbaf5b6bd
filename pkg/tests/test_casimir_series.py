import pytest

from weightsys.casimir_series import (
    FamilySpec,
    PPData,
    build_F,
    casimirs_from_F,
    pp_F,
    solve_odd_casimirs,
    verify_pp,
)
from weightsys.engine import SO, WeightSystem
from weightsys.poly import ONE, ZERO, C, InversePowerSeries, series_mul, series_reflect


def test_F_trivial():
    F = build_F(6, {m: 0 for m in range(6)})
    assert F == InversePowerSeries.one(6)


def test_F_leading_coefficients():
    F = build_F(4)
    assert F[0] == ONE
    assert F[1] == -C(0)
    # (u - a)/(u - b) = 1 - 1/(2u) + ...  with a - b = 1/2
    assert F[2] == -C(1) + C(0) / 2


def test_casimirs_round_trip():
    F = build_F(6)
    cas = casimirs_from_F(F, C(0))
    assert cas == {m: C(m) for m in range(6)}


def test_odd_casimirs():
    solved = solve_odd_casimirs(7)
    assert solved[1] == ZERO
    assert solved[3] == C(0) * C(2) / 2 - C(2)
    ws = WeightSystem(SO)
    for m in (1, 3, 5, 7):
        assert solved[m] == ws.odd_cycle_value(m)


def test_odd_casimirs_only_even_variables():
    for p in solve_odd_casimirs(9).values():
        assert all(v % 2 == 0 for v in p.variables())


def test_odd_casimirs_bad_argument():
    with pytest.raises(ValueError):
        solve_odd_casimirs(4)


def test_pp_data():
    pp = PPData(FamilySpec("osp", 3, 1))
    assert pp.num_x == 2
    assert pp.sigma == (-1, 1)
    assert PPData(FamilySpec("so", 5)).shifts == (1.5, 0.5)
    assert PPData(FamilySpec("sp", 0, 2)).shifts == (2, 1)
    assert PPData(FamilySpec("so", 6)).num_x == 3
    with pytest.raises(ValueError):
        FamilySpec("so", 3, 1)


def test_pp_leading_terms():
    F = pp_F(PPData(FamilySpec("so", 2)), 4)
    assert F[1] == -2
    F = pp_F(PPData(FamilySpec("sp", 0, 2)), 4)
    assert casimirs_from_F(F, -4)[0] == -4


def test_pp_reflection():
    pp = PPData(FamilySpec("osp", 2, 1))
    F = pp_F(pp, 6)
    assert series_mul(F, series_reflect(F, pp.spec.c0 - 1)) == InversePowerSeries.one(6)


FAMILIES = [FamilySpec("so", N) for N in range(2, 7)]
FAMILIES += [FamilySpec("sp", 0, M) for M in (1, 2)]
FAMILIES += [FamilySpec("osp", N, M) for N in range(1, 5) for M in (1, 2)]


@pytest.mark.parametrize("spec", FAMILIES, ids=str)
def test_verify_pp(spec):
    report = verify_pp(PPData(spec), 10)
    assert report.passed, report.first_failure
    assert set(report.as_dict()) == {
        "family", "N", "M", "order", "c0_ok", "odd_casimirs_ok", "reflection_ok", "first_failure"
    }


def test_verify_pp_detects_a_wrong_series(monkeypatch):
    import weightsys.casimir_series as cs

    real = cs.pp_F

    def skewed(pp, order):
        F = real(pp, order)
        return InversePowerSeries([F[0], F[1], F[2] + 1] + list(F.coeffs[3:]))

    monkeypatch.setattr(cs, "pp_F", skewed)
    report = cs.verify_pp(PPData(FamilySpec("so", 3)), 8)
    assert not report.reflection_ok
    assert report.first_failure
