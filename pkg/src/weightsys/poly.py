"""Exact sparse polynomials in the Casimir variables and truncated series in 1/u.

Variables are integers: ``k`` in ``0..999`` stands for ``C_k`` and
``1000 + i`` for the formal diagonal variable ``x_i``.  Monomials are
sorted tuples of ``(variable, exponent)`` pairs; coefficients are ``int``
when integral and :class:`fractions.Fraction` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[int, int], ...]
Coeff = Union[int, Fraction]

X_OFFSET = 1000

ONE_MONO: Monomial = ()


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def var_name(v: int) -> str:
    if v >= X_OFFSET:
        return f"x{v - X_OFFSET}"
    return f"C{v}"


def parse_var(name: str) -> int:
    if name[0] == "C":
        return int(name[1:])
    if name[0] == "x":
        return X_OFFSET + int(name[1:])
    raise ValueError(f"unknown variable name {name!r}")


def _display_key(m: Monomial):
    # higher degree first; within a degree, fewer C0 first, then the rest lexicographically
    e0 = 0
    rest = []
    for v, e in m:
        if v == 0:
            e0 = e
        else:
            rest.extend([v] * e)
    return (-mono_degree(m), e0, tuple(rest))


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        clean: Dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = _norm(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Coeff]) -> "Polynomial":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Polynomial":
        if isinstance(c, float):
            raise TypeError("floating point coefficients are not allowed")
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: int, power: int = 1) -> "Polynomial":
        if power == 0:
            return cls.const(1)
        return cls({((v, power),): 1})

    @classmethod
    def C(cls, k: int, power: int = 1) -> "Polynomial":
        return cls.var(k, power)

    @classmethod
    def x(cls, i: int, power: int = 1) -> "Polynomial":
        return cls.var(X_OFFSET + i, power)

    @staticmethod
    def coerce(obj) -> "Polynomial":
        if isinstance(obj, Polynomial):
            return obj
        if isinstance(obj, (int, Fraction)):
            return Polynomial.const(obj)
        if isinstance(obj, Rational):
            return Polynomial.const(Fraction(obj.numerator, obj.denominator))
        raise TypeError(f"cannot coerce {type(obj).__name__} to Polynomial")

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, v: int) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=-1)

    def constant_term(self) -> Coeff:
        return self.terms.get(ONE_MONO, 0)

    def is_constant(self) -> bool:
        return all(m == ONE_MONO for m in self.terms)

    def coefficient(self, monomial: Monomial) -> Coeff:
        return self.terms.get(monomial, 0)

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            try:
                other = Polynomial.coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "Polynomial":
        other = Polynomial.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial._raw({})
        return Polynomial._raw({m: _norm(v * c) for m, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = Polynomial.coerce(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: Dict[Monomial, Coeff] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Polynomial":
        if not isinstance(c, (int, Fraction)):
            raise TypeError("only division by rational scalars is supported")
        return self.scale(Fraction(1) / c)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, assignment: Mapping[int, object]) -> "Polynomial":
        """Ring-homomorphic substitution ``variable -> Polynomial | rational``.

        Variables missing from ``assignment`` pass through unchanged.
        """
        values = {v: Polynomial.coerce(p) for v, p in assignment.items()}
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = values[v] ** e
            return powers[key]

        out = Polynomial()
        for m, c in self.terms.items():
            kept = []
            term = Polynomial.const(c)
            for v, e in m:
                if v in values:
                    term = term * power(v, e)
                else:
                    kept.append((v, e))
            if kept:
                term = term * Polynomial({tuple(kept): 1})
            out = out + term
        return out

    def map_coefficients(self, fn: Callable[[Coeff], Coeff]) -> "Polynomial":
        return Polynomial({m: fn(c) for m, c in self.terms.items()})

    def coefficients_in(self, v: int) -> Dict[int, "Polynomial"]:
        """Split into ``{power of v: coefficient polynomial}``."""
        parts: Dict[int, Dict[Monomial, Coeff]] = {}
        for m, c in self.terms.items():
            e = 0
            rest = []
            for w, k in m:
                if w == v:
                    e = k
                else:
                    rest.append((w, k))
            parts.setdefault(e, {})[tuple(rest)] = c
        return {e: Polynomial(t) for e, t in parts.items()}

    # -- display and serialization -------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _display_key(mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            factors = [
                var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m
            ]
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(a)] + factors)
            if i == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> list:
        out = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            out.append(
                {
                    "num": c.numerator,
                    "den": c.denominator,
                    "exponents": {var_name(v): e for v, e in m},
                }
            )
        return out

    @classmethod
    def from_json(cls, data: Iterable[dict]) -> "Polynomial":
        terms: Dict[Monomial, Coeff] = {}
        for t in data:
            m = tuple(sorted((parse_var(k), e) for k, e in t["exponents"].items()))
            terms[m] = terms.get(m, 0) + Fraction(t["num"], t["den"])
        return cls(terms)


ZERO = Polynomial()
ONE = Polynomial.const(1)


def C(k: int, power: int = 1) -> Polynomial:
    return Polynomial.C(k, power)


def x(i: int, power: int = 1) -> Polynomial:
    return Polynomial.x(i, power)


def parse_polynomial(text: str) -> Polynomial:
    """Parse the text form written by ``str(Polynomial)``.

    Accepts sums of terms like ``-3/2*C0*C2^2``; no parentheses.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur and cur[-1] not in "+-":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    out = ZERO
    for t in terms:
        sign = 1
        while t and t[0] in "+-":
            if t[0] == "-":
                sign = -sign
            t = t[1:]
        coeff = Fraction(sign)
        mono = ONE
        for f in t.split("*"):
            if not f:
                raise ValueError(f"malformed term in {text!r}")
            if f[0] in "Cx":
                name, _, e = f.partition("^")
                mono = mono * Polynomial.var(parse_var(name), int(e) if e else 1)
            else:
                coeff *= Fraction(f)
        out = out + mono.scale(coeff)
    return out


# -- truncated series in 1/u -------------------------------------------------


class InversePowerSeries:
    """``sum_k coeffs[k] * u^(-k) + O(u^(-order-1))`` with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Polynomial.coerce(c) for c in coeffs]
        if order is not None:
            cs = (cs + [ZERO] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a series needs at least a constant term")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "InversePowerSeries":
        return cls([ONE], order)

    @classmethod
    def geometric(cls, c, order: int) -> "InversePowerSeries":
        """Expansion of ``1 / (1 - c/u)``."""
        c = Polynomial.coerce(c)
        cs = [ONE]
        for _ in range(order):
            cs.append(cs[-1] * c)
        return cls(cs)

    def __getitem__(self, k: int) -> Polynomial:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, InversePowerSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*u^-{k}" for k, c in enumerate(self.coeffs) if c)
        return f"InversePowerSeries({body or '0'} + O(u^-{self.order + 1}))"

    def _check(self, other: "InversePowerSeries"):
        if other.order != self.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "InversePowerSeries") -> "InversePowerSeries":
        self._check(other)
        return InversePowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "InversePowerSeries":
        return InversePowerSeries([-a for a in self.coeffs])

    def __sub__(self, other: "InversePowerSeries") -> "InversePowerSeries":
        return self + (-other)

    def __mul__(self, other) -> "InversePowerSeries":
        if not isinstance(other, InversePowerSeries):
            other = Polynomial.coerce(other)
            return InversePowerSeries([a * other for a in self.coeffs])
        return series_mul(self, other)

    def map(self, fn: Callable[[Polynomial], Polynomial]) -> "InversePowerSeries":
        return InversePowerSeries([fn(c) for c in self.coeffs])

    def substitute(self, assignment) -> "InversePowerSeries":
        return self.map(lambda p: p.substitute(assignment))

    def shift_down(self, k: int = 1) -> "InversePowerSeries":
        """Multiply by ``u^(-k)``, keeping the truncation order."""
        return InversePowerSeries([ZERO] * k + list(self.coeffs[: self.order + 1 - k]))


def series_mul(a: InversePowerSeries, b: InversePowerSeries) -> InversePowerSeries:
    a._check(b)
    T = a.order
    out = []
    for k in range(T + 1):
        acc = ZERO
        for i in range(k + 1):
            if a.coeffs[i] and b.coeffs[k - i]:
                acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return InversePowerSeries(out)


def series_invert(a: InversePowerSeries) -> InversePowerSeries:
    if a.coeffs[0] != ONE:
        raise ValueError("series_invert needs constant term 1")
    b = [ONE]
    for k in range(1, a.order + 1):
        acc = ZERO
        for i in range(1, k + 1):
            acc = acc - a.coeffs[i] * b[k - i]
        b.append(acc)
    return InversePowerSeries(b)


def series_reflect(a: InversePowerSeries, c) -> InversePowerSeries:
    """Re-expand ``a(c - u)`` in powers of ``1/u``.

    Uses ``(c - u)^(-k) = (-1)^k u^(-k) (1 - c/u)^(-k)``.
    """
    if a.coeffs[0] != ONE:
        raise ValueError("series_reflect expects constant term 1")
    T = a.order
    c = Polynomial.coerce(c)
    geo = InversePowerSeries.geometric(c, T)
    out = [ZERO] * (T + 1)
    out[0] = a.coeffs[0]
    power = InversePowerSeries.one(T)  # (1 - c/u)^(-k)
    for k in range(1, T + 1):
        power = series_mul(power, geo)
        if not a.coeffs[k]:
            continue
        ak = a.coeffs[k] if k % 2 == 0 else -a.coeffs[k]
        for j in range(T + 1 - k):
            if power.coeffs[j]:
                out[k + j] = out[k + j] + ak * power.coeffs[j]
    return InversePowerSeries(out)


def rational_factor_series(num_shift, den_shift, order: int) -> InversePowerSeries:
    """Expansion of ``(u - num_shift) / (u - den_shift)``."""
    num = InversePowerSeries([ONE, -Polynomial.coerce(num_shift)], order)
    return series_mul(num, InversePowerSeries.geometric(den_shift, order))
