"""Exact arithmetic in Q(q): Laurent polynomials, rational functions, quantum
integers, cyclotomic factorization and reduction modulo a cyclotomic polynomial.

Polynomial multiplication and gcd are delegated to FLINT (``python-flint``);
everything else (canonical forms, cyclotomic detection, the residue field
Q[q]/(Phi_e)) lives here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import flint

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "ZERO",
    "ONE",
    "Q",
    "rf",
    "quantum_int",
    "quantum_factorial",
    "cyclotomic_poly",
    "CyclotomicFactorization",
    "NotProductOfCyclotomics",
    "factor_cyclotomic",
    "CyclotomicFieldElement",
    "PoleAtZeta",
    "reduce_mod_cyclotomic",
]

_fz = flint.fmpz_poly
_FZ_ONE = _fz([1])
_FZ_ZERO = _fz([])


def _valuation(p: flint.fmpz_poly) -> int:
    """Index of the lowest nonzero coefficient of a nonzero polynomial."""
    coeffs = p.coeffs()
    for i, c in enumerate(coeffs):
        if c != 0:
            return i
    raise ValueError("valuation of the zero polynomial")


class LaurentPoly:
    """Sparse Laurent polynomial in q with integer coefficients.

    Stored as an ascending tuple of ``(exponent, coefficient)`` pairs with no zero
    coefficients, so equality is structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            c = int(c)
            if c:
                acc[int(e)] = acc.get(int(e), 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def _from_flint(cls, p: flint.fmpz_poly, shift: int = 0) -> "LaurentPoly":
        return cls((i + shift, int(c)) for i, c in enumerate(p.coeffs()) if c != 0)

    def to_flint(self) -> tuple[flint.fmpz_poly, int]:
        """Return ``(p, v)`` with ``self == q**v * p`` and ``p(0) != 0``."""
        if not self._terms:
            return _FZ_ZERO, 0
        v = self._terms[0][0]
        coeffs = [0] * (self._terms[-1][0] - v + 1)
        for e, c in self._terms:
            coeffs[e - v] = c
        return _fz(coeffs), v

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of zero")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of zero")
        return self._terms[0][0]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(list(self._terms) + list(other._terms))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly((e, c * other) for e, c in self._terms)
        a, va = self.to_flint()
        b, vb = other.to_flint()
        return LaurentPoly._from_flint(a * b, va + vb)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __call__(self, x):
        return sum(c * Fraction(x) ** e for e, c in self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in self._terms)

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in self._terms]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)


class RationalFunction:
    """Element ``q**shift * num / den`` of Q(q), always in canonical form.

    Canonical form: ``num`` and ``den`` are integer polynomials with nonzero
    constant term, coprime in Z[q] (integer content included), and ``den`` has a
    positive leading coefficient.  Zero is ``shift=0, num=0, den=1``.
    """

    __slots__ = ("shift", "_num", "_den", "_key")

    def __init__(self, shift: int, num: flint.fmpz_poly, den: flint.fmpz_poly, *, _canonical=False):
        if not _canonical:
            shift, num, den = _canonicalize(shift, num, den)
        self.shift = shift
        self._num = num
        self._den = den
        self._key = None

    # -- construction ----------------------------------------------------
    @classmethod
    def from_int(cls, value: int) -> "RationalFunction":
        return cls(0, _fz([int(value)]), _FZ_ONE)

    @classmethod
    def from_fraction(cls, value) -> "RationalFunction":
        value = Fraction(value)
        return cls(0, _fz([value.numerator]), _fz([value.denominator]))

    @classmethod
    def from_laurent(cls, num: LaurentPoly, den: LaurentPoly | None = None) -> "RationalFunction":
        p, vp = num.to_flint()
        if den is None:
            return cls(vp, p, _FZ_ONE)
        d, vd = den.to_flint()
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        return cls(vp - vd, p, d)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "RationalFunction":
        return cls(exponent, _fz([coeff]), _FZ_ONE)

    # -- views -------------------------------------------------------------
    @property
    def num(self) -> LaurentPoly:
        return LaurentPoly._from_flint(self._num)

    @property
    def den(self) -> LaurentPoly:
        return LaurentPoly._from_flint(self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_laurent(self) -> bool:
        """True when the value lies in Z[q, 1/q] (denominator is 1)."""
        return self._den.degree() == 0 and self._den[0] == 1

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return LaurentPoly._from_flint(self._num, self.shift)

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other)
        if isinstance(other, Fraction):
            return RationalFunction.from_fraction(other)
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._num.is_zero():
            return other
        if other._num.is_zero():
            return self
        a, b = self.shift, other.shift
        m = min(a, b)
        n1 = self._num if a == m else self._num.left_shift(a - m)
        n2 = other._num if b == m else other._num.left_shift(b - m)
        if self._den == other._den:
            return RationalFunction(m, n1 + n2, self._den)
        return RationalFunction(m, n1 * other._den + n2 * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.shift, -self._num, self._den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._num.is_zero() or other._num.is_zero():
            return ZERO
        return RationalFunction(self.shift + other.shift, self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self._num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(-self.shift, self._den, self._num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.shift * k, self._num**k, self._den**k)

    # -- comparison / hashing ------------------------------------------------
    def key(self) -> tuple:
        if self._key is None:
            self._key = (
                self.shift,
                tuple(int(c) for c in self._num.coeffs()),
                tuple(int(c) for c in self._den.coeffs()),
            )
        return self._key

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.shift == other.shift and self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash(self.key())

    def __reduce__(self):
        s, n, d = self.key()
        return (_rebuild, (s, n, d))

    # -- evaluation --------------------------------------------------------------
    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point; raises ZeroDivisionError at a pole."""
        x = Fraction(x)
        den = sum(int(c) * x**i for i, c in enumerate(self._den.coeffs()))
        if den == 0:
            raise ZeroDivisionError(f"pole of {self} at q={x}")
        num = sum(int(c) * x**i for i, c in enumerate(self._num.coeffs()))
        return x**self.shift * num / den

    # -- text / json -------------------------------------------------------------
    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self._num.is_zero():
            return "0"
        num = _poly_str(self._num, self.shift)
        if self.is_laurent():
            return num
        return f"({num})/({_poly_str(self._den, 0)})"

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "num": [[i, str(int(c))] for i, c in enumerate(self._num.coeffs()) if c != 0],
            "den": [[i, str(int(c))] for i, c in enumerate(self._den.coeffs()) if c != 0],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalFunction":
        def poly(pairs):
            if not pairs:
                return _FZ_ZERO
            coeffs = [0] * (max(int(e) for e, _ in pairs) + 1)
            for e, c in pairs:
                coeffs[int(e)] = int(c)
            return _fz(coeffs)

        den = poly(data["den"])
        if den.is_zero():
            raise ValueError("zero denominator in JSON rational function")
        return cls(int(data["shift"]), poly(data["num"]), den)


def _rebuild(shift, num, den) -> RationalFunction:
    return RationalFunction(shift, _fz(list(num)), _fz(list(den)), _canonical=True)


def _canonicalize(shift: int, num: flint.fmpz_poly, den: flint.fmpz_poly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return 0, _FZ_ZERO, _FZ_ONE
    v = _valuation(num)
    if v:
        num = num.right_shift(v)
        shift += v
    v = _valuation(den)
    if v:
        den = den.right_shift(v)
        shift -= v
    if den.degree() == 0:
        d = int(den[0])
        if d == 1:
            return shift, num, den
        g = _int_gcd_poly(num, d)
        if d < 0:
            g = -g
        return shift, num // g, _fz([d // g])
    g = num.gcd(den)
    if not (g.degree() == 0 and g[0] == 1):
        num = num // g
        den = den // g
    if den.leading_coefficient() < 0:
        num = -num
        den = -den
    return shift, num, den


def _int_gcd_poly(p: flint.fmpz_poly, d: int) -> int:
    from math import gcd

    g = abs(d)
    for c in p.coeffs():
        if g == 1:
            break
        g = gcd(g, int(c))
    return g


def _poly_str(p: flint.fmpz_poly, shift: int) -> str:
    parts = []
    for i, c in enumerate(p.coeffs()):
        c = int(c)
        if not c:
            continue
        e = i + shift
        if e == 0:
            mono = str(c)
        else:
            base = "q" if e == 1 else f"q^{e}"
            mono = base if c == 1 else ("-" + base if c == -1 else f"{c}*{base}")
        parts.append(mono)
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


ZERO = RationalFunction(0, _FZ_ZERO, _FZ_ONE, _canonical=True)
ONE = RationalFunction(0, _FZ_ONE, _FZ_ONE, _canonical=True)
Q = RationalFunction(1, _FZ_ONE, _FZ_ONE, _canonical=True)


def rf(value) -> RationalFunction:
    """Coerce an int, Fraction, LaurentPoly or RationalFunction."""
    if isinstance(value, RationalFunction):
        return value
    out = ONE._coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {value!r} to RationalFunction")
    return out


@lru_cache(maxsize=None)
def quantum_int(k: int) -> RationalFunction:
    """[k]_q = (q^k - 1)/(q - 1); for negative k this is -q^k [-k]_q."""
    if k == 0:
        return ZERO
    if k > 0:
        return RationalFunction(0, _fz([1] * k), _FZ_ONE)
    return RationalFunction(k, _fz([-1] * (-k)), _FZ_ONE)


@lru_cache(maxsize=None)
def quantum_factorial(k: int) -> RationalFunction:
    if k < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for j in range(1, k + 1):
        out = out * quantum_int(j)
    return out


@lru_cache(maxsize=None)
def _cyclotomic_flint(d: int) -> flint.fmpz_poly:
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = _fz([-1] + [0] * (d - 1) + [1])  # q^d - 1
    for k in range(1, d):
        if d % k == 0:
            p = p // _cyclotomic_flint(k)
    return p


def cyclotomic_poly(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial Phi_d(q)."""
    return LaurentPoly._from_flint(_cyclotomic_flint(d))


def _euler_phi(d: int) -> int:
    out, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


class CyclotomicFactorization:
    """``unit * q**qpower * prod(Phi_d ** mult)``; Phi_1 = q - 1 is allowed as d = 1."""

    __slots__ = ("unit", "qpower", "factors")

    def __init__(self, unit: Fraction, qpower: int, factors: Mapping[int, int]):
        self.unit = Fraction(unit)
        self.qpower = int(qpower)
        self.factors = dict(sorted((int(d), int(m)) for d, m in factors.items() if m))

    def expand(self) -> RationalFunction:
        out = RationalFunction.from_fraction(self.unit) * RationalFunction.monomial(self.qpower)
        for d, m in self.factors.items():
            out = out * RationalFunction(0, _cyclotomic_flint(d), _FZ_ONE) ** m
        return out

    def divides(self, other: "CyclotomicFactorization") -> bool:
        """Divisibility of the cyclotomic parts (units and q-powers ignored)."""
        return all(other.factors.get(d, 0) >= m for d, m in self.factors.items())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CyclotomicFactorization)
            and (self.unit, self.qpower, self.factors) == (other.unit, other.qpower, other.factors)
        )

    def __repr__(self) -> str:
        fs = " ".join(f"Phi{d}^{m}" if m > 1 else f"Phi{d}" for d, m in self.factors.items())
        return f"CyclotomicFactorization({self.unit} q^{self.qpower} {fs})"

    def to_json(self) -> dict:
        return {
            "unit": str(self.unit),
            "qpower": self.qpower,
            "factors": [[d, m] for d, m in self.factors.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CyclotomicFactorization":
        return cls(Fraction(data["unit"]), data["qpower"], {d: m for d, m in data["factors"]})


class NotProductOfCyclotomics(ValueError):
    """Raised by :func:`factor_cyclotomic`; ``residual`` is the leftover factor."""

    def __init__(self, residual: LaurentPoly, partial: CyclotomicFactorization):
        super().__init__(f"not a product of cyclotomic polynomials; residual {residual}")
        self.residual = residual
        self.partial = partial


def factor_cyclotomic(p: LaurentPoly | RationalFunction) -> CyclotomicFactorization:
    """Factor a nonzero Laurent polynomial as unit * q^k * prod Phi_d^m."""
    if isinstance(p, RationalFunction):
        p = p.as_laurent()
    if p.is_zero():
        raise ValueError("cannot factor zero")
    poly, qpower = p.to_flint()
    unit = Fraction(int(poly.content()))
    poly = poly // int(poly.content())
    if poly.leading_coefficient() < 0:
        poly, unit = -poly, -unit
    factors: dict[int, int] = {}
    deg = poly.degree()
    d = 1
    # phi(d) >= sqrt(d/2), so every possible factor has d <= 2*deg^2
    while deg > 0 and d <= 2 * deg * deg + 2:
        if _euler_phi(d) <= deg:
            phi_d = _cyclotomic_flint(d)
            while True:
                quo, rem = divmod(poly, phi_d)
                if not rem.is_zero():
                    break
                poly = quo
                deg = poly.degree()
                factors[d] = factors.get(d, 0) + 1
        d += 1
    partial = CyclotomicFactorization(unit, qpower, factors)
    if deg != 0:
        raise NotProductOfCyclotomics(LaurentPoly._from_flint(poly), partial)
    return CyclotomicFactorization(unit * int(poly[0]), qpower, factors)


class PoleAtZeta(ArithmeticError):
    """The rational function has a pole at a primitive e-th root of unity."""


class CyclotomicFieldElement:
    """Element of Q(zeta_e) realised as Q[q]/(Phi_e(q))."""

    __slots__ = ("e", "_p")

    def __init__(self, e: int, p: flint.fmpq_poly):
        self.e = e
        self._p = p % _modulus(e)

    @classmethod
    def from_int(cls, e: int, value) -> "CyclotomicFieldElement":
        value = Fraction(value)
        return cls(e, flint.fmpq_poly([flint.fmpq(value.numerator, value.denominator)]))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients on 1, q, ..., q^(deg Phi_e - 1)."""
        raw = self._p.coeffs()
        out = [Fraction(int(c.p), int(c.q)) for c in raw]
        out += [Fraction(0)] * (_modulus(self.e).degree() - len(out))
        return tuple(out)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self) -> bool:
        return not self._p.is_zero()

    def _check(self, other) -> "CyclotomicFieldElement":
        if isinstance(other, (int, Fraction)):
            return CyclotomicFieldElement.from_int(self.e, other)
        if other.e != self.e:
            raise ValueError("mixing different cyclotomic fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicFieldElement(self.e, self._p + other._p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return CyclotomicFieldElement(self.e, self._p - other._p)

    def __neg__(self):
        return CyclotomicFieldElement(self.e, -self._p)

    def __mul__(self, other):
        other = self._check(other)
        return CyclotomicFieldElement(self.e, self._p * other._p)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicFieldElement":
        if self._p.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        g, s, _ = self._p.xgcd(_modulus(self.e))
        # Phi_e irreducible, so g is a nonzero constant
        return CyclotomicFieldElement(self.e, s / g[0])

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicFieldElement.from_int(self.e, other)
        return isinstance(other, CyclotomicFieldElement) and self.e == other.e and self._p == other._p

    def __hash__(self) -> int:
        return hash((self.e, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicFieldElement(e={self.e}, {self.coeffs})"

    def to_json(self) -> dict:
        return {"e": self.e, "coeffs": [str(c) for c in self.coeffs]}


@lru_cache(maxsize=None)
def _modulus(e: int) -> flint.fmpq_poly:
    return flint.fmpq_poly(_cyclotomic_flint(e))


@lru_cache(maxsize=None)
def _q_inverse(e: int) -> flint.fmpq_poly:
    return CyclotomicFieldElement(e, flint.fmpq_poly([0, 1])).inverse()._p


def reduce_mod_cyclotomic(f: RationalFunction, e: int) -> CyclotomicFieldElement:
    """Image of ``f`` in Q[q]/(Phi_e); raises :class:`PoleAtZeta` if Phi_e divides den."""
    if e < 2:
        raise ValueError("e must be at least 2")
    f = rf(f)
    mod = _modulus(e)
    num = flint.fmpq_poly(f._num) % mod
    den = flint.fmpq_poly(f._den) % mod
    if den.is_zero():
        raise PoleAtZeta(f"{f} has a pole at a primitive {e}-th root of unity")
    out = CyclotomicFieldElement(e, num) / CyclotomicFieldElement(e, den)
    if f.shift > 0:
        out = out * CyclotomicFieldElement(e, flint.fmpq_poly([0, 1]) ** f.shift)
    elif f.shift < 0:
        out = out * CyclotomicFieldElement(e, _q_inverse(e) ** (-f.shift))
    return out
