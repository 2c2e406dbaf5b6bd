"""The Casimir generating series F(u), odd Casimirs, and the Perelomov-Popov form.

``F(u) = 1 - (u - (C0-1)/2) / (u - (C0-2)/2) * sum_m C_m u^(-m-1)``.
Odd Casimirs are fixed by ``F(u) F(C0 - 1 - u) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from .poly import (
    ONE,
    ZERO,
    InversePowerSeries,
    Polynomial,
    C,
    rational_factor_series,
    series_mul,
    series_reflect,
    x,
)


def _prefactor(c0, order: int) -> InversePowerSeries:
    c0 = Polynomial.coerce(c0)
    return rational_factor_series((c0 - 1) / 2, (c0 - 2) / 2, order)


def build_F(order: int, casimirs: Optional[Mapping[int, object]] = None) -> InversePowerSeries:
    """Truncated F(u); ``casimirs`` overrides the symbolic ``C_m``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    cas = {m: C(m) for m in range(order)}
    if casimirs:
        cas.update({m: Polynomial.coerce(v) for m, v in casimirs.items()})
    s = InversePowerSeries([ZERO] + [cas[m] for m in range(order)])
    rs = series_mul(_prefactor(cas[0], order), s)
    return InversePowerSeries([ONE] + [-c for c in rs.coeffs[1:]])


def casimirs_from_F(F: InversePowerSeries, c0) -> Dict[int, Polynomial]:
    """Invert the prefactor: ``sum C_m u^(-m-1) = (1 - F) (u - (c0-2)/2) / (u - (c0-1)/2)``."""
    c0 = Polynomial.coerce(c0)
    one_minus = InversePowerSeries([ZERO] + [-c for c in F.coeffs[1:]])
    inv_pref = rational_factor_series((c0 - 2) / 2, (c0 - 1) / 2, F.order)
    s = series_mul(one_minus, inv_pref)
    return {m: s[m + 1] for m in range(F.order)}


class OddCasimirError(RuntimeError):
    pass


def solve_odd_casimirs(max_m: int) -> Dict[int, Polynomial]:
    """Express ``C_1, C_3, ..., C_max_m`` through ``C_0`` and even Casimirs."""
    if max_m < 1 or max_m % 2 == 0:
        raise ValueError("max_m must be odd and >= 1")
    T = max_m + 1
    F = build_F(T)
    G = series_mul(F, series_reflect(F, C(0) - 1))
    solved: Dict[int, Polynomial] = {}
    for k in range(1, T + 1):
        eq = G[k].substitute(solved) if solved else G[k]
        if k % 2:
            if eq:
                raise OddCasimirError(f"odd-order coefficient u^-{k} does not vanish: {eq}")
            continue
        target = k - 1
        parts = eq.coefficients_in(target)
        if set(parts) - {0, 1} or 1 not in parts:
            raise OddCasimirError(f"coefficient of u^-{k} is not linear in C{target}")
        lin = parts[1]
        if not lin.is_constant():
            raise OddCasimirError(f"C{target} has a non-constant coefficient {lin}")
        rest = parts.get(0, ZERO)
        solved[target] = rest.scale(Fraction(-1) / lin.constant_term())
    return solved


# -- Perelomov-Popov data ---------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family: str
    N: int = 0
    M: int = 0

    def __post_init__(self):
        if self.family not in ("so", "sp", "osp"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.N < 0 or self.M < 0:
            raise ValueError("dimensions must be nonnegative")
        if self.family == "so" and self.M:
            raise ValueError("so(N) has M = 0")
        if self.family == "sp" and self.N:
            raise ValueError("sp(2M) has N = 0")

    @property
    def c0(self) -> int:
        return self.N - 2 * self.M

    def __str__(self) -> str:
        if self.family == "so":
            return f"so({self.N})"
        if self.family == "sp":
            return f"sp({2 * self.M})"
        return f"osp({self.N}|{2 * self.M})"


def specialize_family(p: Polynomial, f: FamilySpec) -> Polynomial:
    odd = sorted(v for v in p.variables() if v < 1000 and v % 2)
    if odd:
        raise ValueError(f"odd Casimir C{odd[0]} present; specialize even expressions only")
    return p.substitute({0: f.c0})


@dataclass(frozen=True)
class PPData:
    spec: FamilySpec
    sigma: Tuple[int, ...] = field(init=False)
    eta: Tuple[int, ...] = field(init=False)
    epsilon: Tuple[int, ...] = field(init=False)
    shifts: Tuple[Fraction, ...] = field(init=False)

    def __post_init__(self):
        N, M = self.spec.N, self.spec.M
        count = M + N // 2
        # indices 1..M are odd, the next [N/2] even
        eta = tuple(1 if i <= M else 0 for i in range(1, count + 1))
        sigma = tuple(-1 if e else 1 for e in eta)
        eps = tuple(1 if i <= M + N else -1 for i in range(1, count + 1))
        shifts = []
        for i in range(count):
            s = sigma[i]
            shifts.append(s * (Fraction(N - 2 * M, 2) - sum(sigma[:i])) - Fraction(s + 1, 2))
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "epsilon", eps)
        object.__setattr__(self, "shifts", tuple(shifts))

    @property
    def num_x(self) -> int:
        return len(self.sigma)

    @property
    def odd_N(self) -> bool:
        return self.spec.N % 2 == 1


def _P_ratio(pp: PPData, a, b, order: int) -> InversePowerSeries:
    """``P(u - a) / P(u - b)`` expanded in 1/u."""
    out = InversePowerSeries.one(order)
    if pp.odd_N:
        out = series_mul(out, rational_factor_series(a, b, order))
    for i, s in enumerate(pp.sigma, 1):
        xi = x(i)
        for sh in (xi, -xi):
            num, den = Polynomial.coerce(a) + sh, Polynomial.coerce(b) + sh
            if s < 0:
                num, den = den, num
            out = series_mul(out, rational_factor_series(num, den, order))
    return out


def pp_F(pp: PPData, order: int) -> InversePowerSeries:
    c0 = Fraction(pp.spec.c0)
    F = _P_ratio(pp, c0 / 2, (c0 - 2) / 2, order)
    for k, c in enumerate(F.coeffs):
        for m in c.terms:
            for v, e in m:
                assert v < 1000 or e % 2 == 0, f"odd power of x in coefficient {k}"
    return F


@dataclass
class PPReport:
    family: str
    N: int
    M: int
    order: int
    c0_ok: bool
    odd_casimirs_ok: bool
    reflection_ok: bool
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.c0_ok and self.odd_casimirs_ok and self.reflection_ok

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def verify_pp(pp: PPData, order: int = 10) -> PPReport:
    c0 = pp.spec.c0
    F = pp_F(pp, order)
    cas = casimirs_from_F(F, c0)
    failures: List[str] = []

    c0_ok = cas[0] == Polynomial.const(c0)
    if not c0_ok:
        failures.append(f"C0 extracted as {cas[0]}, expected {c0}")

    odd_ok = True
    max_odd = order - 1 if (order - 1) % 2 else order - 2
    if max_odd >= 1:
        exprs = solve_odd_casimirs(max_odd)
        env = {0: c0}
        env.update({m: v for m, v in cas.items() if m % 2 == 0 and m > 0})
        for m in sorted(exprs):
            want = exprs[m].substitute(env)
            if want != cas[m]:
                odd_ok = False
                failures.append(f"C{m}: relation gives {want}, series gives {cas[m]}")
                break

    prod = series_mul(F, series_reflect(F, c0 - 1))
    refl_ok = prod == InversePowerSeries.one(order)
    if not refl_ok:
        k = next(k for k in range(1, order + 1) if prod[k])
        failures.append(f"F(u)F(C0-1-u) has nonzero coefficient at u^-{k}")

    return PPReport(
        pp.spec.family,
        pp.spec.N,
        pp.spec.M,
        order,
        c0_ok,
        odd_ok,
        refl_ok,
        failures[0] if failures else None,
    )
