"""Exact coefficient field Q(u).

The formal parameter ``u`` stands for ``exp(-1/D)`` where ``D`` is a positive
integer fixed by the computation context.  Every factor ``exp(-x)`` with ``x``
rational and ``D*x`` integral becomes the single term ``u**(D*x)``; sums and
quotients of such terms live in the rational function field Q(u).

Univariate polynomials are stored as tuples of ``(exponent, coefficient)``
pairs sorted by exponent, with exponents allowed to be negative (Laurent
polynomials) in numerators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

UPoly = Tuple[Tuple[int, Fraction], ...]

_ONE_POLY: UPoly = ((0, Fraction(1)),)

Number = Union[int, Fraction]


def _from_dict(d: Dict[int, Fraction]) -> UPoly:
    return tuple(sorted((e, c) for e, c in d.items() if c))


def _padd(a: UPoly, b: UPoly, sign: int = 1) -> UPoly:
    if not b:
        return a
    d = dict(a)
    for e, c in b:
        d[e] = d.get(e, 0) + sign * c
    return _from_dict(d)


def _pmul(a: UPoly, b: UPoly) -> UPoly:
    if len(a) == 1 and len(b) == 1:
        (ea, ca), = a
        (eb, cb), = b
        return ((ea + eb, ca * cb),)
    d: Dict[int, Fraction] = {}
    for ea, ca in a:
        for eb, cb in b:
            d[ea + eb] = d.get(ea + eb, 0) + ca * cb
    return _from_dict(d)


def _pscale(a: UPoly, c: Fraction, shift: int = 0) -> UPoly:
    return tuple((e + shift, x * c) for e, x in a)


def _pdivmod(a: UPoly, b: UPoly) -> Tuple[UPoly, UPoly]:
    """Division with remainder; both arguments have non-negative exponents."""
    rem = dict(a)
    db, lb = b[-1]
    quo: Dict[int, Fraction] = {}
    while rem:
        da = max(rem)
        if da < db:
            break
        q = rem[da] / lb
        quo[da - db] = q
        for e, c in b:
            k = e + da - db
            v = rem.get(k, 0) - q * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return _from_dict(quo), _from_dict(rem)


def _pmonic(a: UPoly) -> UPoly:
    lc = a[-1][1]
    return _pscale(a, 1 / lc)


def _pgcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd of two non-zero polynomials with non-negative exponents."""
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


def _pdiv_exact(a: UPoly, b: UPoly) -> UPoly:
    q, r = _pdivmod(a, b)
    assert not r, "inexact polynomial division"
    return q


def _normalize(num: UPoly, den: UPoly) -> Tuple[UPoly, UPoly]:
    if not num:
        return (), _ONE_POLY
    if len(den) == 1:
        (e, c), = den
        if e == 0 and c == 1:
            return num, den
        return _pscale(num, 1 / c, -e), _ONE_POLY
    s = den[0][0]
    if s:
        den = _pscale(den, Fraction(1), -s)
        num = _pscale(num, Fraction(1), -s)
    t = num[0][0]
    num0 = _pscale(num, Fraction(1), -t) if t else num
    g = _pgcd(num0, den)
    if len(g) > 1:
        num0 = _pdiv_exact(num0, g)
        den = _pdiv_exact(den, g)
    c = 1 / den[0][1]
    if c != 1:
        num0 = _pscale(num0, c)
        den = _pscale(den, c)
    if len(den) == 1:
        den = _ONE_POLY
    return (_pscale(num0, Fraction(1), t) if t else num0), den


class FieldElement:
    """An element of Q(u) in canonical reduced form.

    The denominator is a polynomial in ``u`` with non-zero constant term
    normalised to 1, coprime to the numerator; any power of ``u`` is carried by
    the (Laurent) numerator.  Two equal field elements therefore have
    identical representations, which makes ``==`` and ``hash`` structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: UPoly = (), den: UPoly = _ONE_POLY, *, _canonical: bool = False):
        if not _canonical:
            if not den:
                raise ZeroDivisionError("zero denominator in Q(u)")
            num, den = _normalize(tuple(num), tuple(den))
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: Number) -> "FieldElement":
        c = Fraction(c)
        return cls(((0, c),) if c else (), _ONE_POLY, _canonical=True)

    @classmethod
    def monomial(cls, c: Number, uexp: int) -> "FieldElement":
        c = Fraction(c)
        return cls(((uexp, c),) if c else (), _ONE_POLY, _canonical=True)

    @classmethod
    def from_poly(cls, coeffs: Dict[int, Number]) -> "FieldElement":
        return cls(_from_dict({e: Fraction(c) for e, c in coeffs.items()}), _ONE_POLY)

    # predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE_POLY and self.den == _ONE_POLY

    def is_constant(self) -> bool:
        return (not self.num or (len(self.num) == 1 and self.num[0][0] == 0)) \
            and self.den == _ONE_POLY

    def is_monomial(self) -> bool:
        """True for a single term ``c*u**k`` (a Novikov scalar)."""
        return len(self.num) == 1 and self.den == _ONE_POLY

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num[0][1] if self.num else Fraction(0)

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = _padd(self.num, other.num)
            if self.den == _ONE_POLY:
                return FieldElement(num, _ONE_POLY, _canonical=True)
            return FieldElement(num, self.den)
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return FieldElement(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(_pscale(self.num, Fraction(-1)), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if self.den == _ONE_POLY and other.den == _ONE_POLY:
            if len(self.num) == 1 or len(other.num) == 1:
                return FieldElement(_pmul(self.num, other.num), _ONE_POLY, _canonical=True)
        return FieldElement(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(u)")
        if len(self.num) == 1:
            (e, c), = self.num
            return FieldElement(_pscale(self.den, 1 / c, -e), _ONE_POLY, _canonical=True) \
                if self.den == _ONE_POLY else FieldElement(self.den, self.num)
        return FieldElement(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def lowest_order(self) -> int:
        """Valuation at u = 0 (order of vanishing)."""
        if not self.num:
            raise ValueError("valuation of zero")
        return self.num[0][0] - self.den[0][0]

    def substitute(self, u: Number) -> Fraction:
        """Evaluate at a rational value of u."""
        u = Fraction(u)
        n = sum((c * u ** e for e, c in self.num), Fraction(0))
        d = sum((c * u ** e for e, c in self.den), Fraction(0))
        return n / d

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement.const(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"FieldElement({format_coefficient(self)})"

    def __str__(self):
        return format_coefficient(self)


def _coerce(x) -> FieldElement:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)):
        return FieldElement.const(x)
    if isinstance(x, NovikovScalar):
        return x.to_field()
    return NotImplemented


ZERO = FieldElement((), _ONE_POLY, _canonical=True)
ONE = FieldElement(_ONE_POLY, _ONE_POLY, _canonical=True)


def to_field(x) -> FieldElement:
    out = _coerce(x)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {x!r} into Q(u)")
    return out


@dataclass(frozen=True)
class NovikovScalar:
    """The single term ``coeff * u**uexp``.

    ``u`` stands for ``exp(-1/D)``; :meth:`from_exp` converts a rational
    exponent ``exp(-x)`` given the context denominator ``D``.
    """

    coeff: Fraction
    uexp: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if not self.coeff:
            raise ValueError("NovikovScalar terms carry a non-zero coefficient")

    @classmethod
    def from_exp(cls, x: Number, D: int, coeff: Number = 1) -> "NovikovScalar":
        """Encode ``coeff * exp(-x)`` as ``coeff * u**(D*x)``."""
        k = Fraction(x) * D
        if k.denominator != 1:
            raise ValueError(f"exp(-{x}) is not a power of exp(-1/{D})")
        return cls(Fraction(coeff), int(k))

    def to_field(self) -> FieldElement:
        return FieldElement.monomial(self.coeff, self.uexp)

    def __mul__(self, other: "NovikovScalar") -> "NovikovScalar":
        return NovikovScalar(self.coeff * other.coeff, self.uexp + other.uexp)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _join_signed(parts) -> str:
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def _format_upoly(p: UPoly) -> str:
    parts = []
    for e, c in reversed(p):
        if not e:
            parts.append(format_rational(c))
            continue
        mono = "u" if e == 1 else f"u^{e}"
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{format_rational(c)}*{mono}")
    return _join_signed(parts) if parts else "0"


def format_coefficient(c: FieldElement) -> str:
    """Canonical text for a coefficient: ``p/q*u^k`` for Novikov scalars.

    General rational functions print as ``(num)/(den)``.
    """
    if c.den == _ONE_POLY:
        if len(c.num) <= 1:
            return _format_upoly(c.num)
        return "(" + _format_upoly(c.num) + ")"
    return "(" + _format_upoly(c.num) + ")/(" + _format_upoly(c.den) + ")"


def lcm_denominators(values: Iterable[Number]) -> int:
    from math import lcm
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
