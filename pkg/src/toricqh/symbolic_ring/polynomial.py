"""Multivariate polynomials over Q(u), rings and monomial orders."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .field import ONE, ZERO, FieldElement, _join_signed, format_coefficient, to_field

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class PolyRing:
    """Polynomial ring Q(u)[variables].

    ``D`` is the context denominator for the Novikov parameter (``u =
    exp(-1/D)``); ``None`` marks a ring whose polynomials never involve
    ``u``-dependent data and may be combined with any context.
    """

    variables: Tuple[str, ...]
    D: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def compatible(self, other: "PolyRing") -> bool:
        return self.variables == other.variables and (
            self.D is None or other.D is None or self.D == other.D)

    def gen(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): ONE})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: ONE})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def const(self, c) -> "Polynomial":
        c = to_field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if not c.is_zero() else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = to_field(coeff)
        return Polynomial(self, {tuple(exps): c} if not c.is_zero() else {})

    def with_D(self, D: Optional[int]) -> "PolyRing":
        return PolyRing(self.variables, D)


class MonomialOrder:
    """A monomial order: ``grevlex``, ``lex``, ``weight`` or ``block``.

    * ``weight``: compare ``omega . a`` first (larger is bigger), ties broken
      by grevlex.  Weights are rational and must be non-negative so that the
      order is a well-order; comparison is exact.
    * ``block``: consecutive variable blocks of the given sizes, compared
      block by block, each block by grevlex.  Used for elimination.
    """

    __slots__ = ("kind", "weights", "blocks", "_int_weights", "_cache")

    def __init__(self, kind: str = "grevlex", weights: Optional[Sequence] = None,
                 blocks: Optional[Sequence[int]] = None):
        if kind not in ("grevlex", "lex", "weight", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.weights = tuple(Fraction(w) for w in weights) if weights is not None else None
        self.blocks = tuple(blocks) if blocks is not None else None
        self._int_weights = None
        if kind == "weight":
            if self.weights is None:
                raise ValueError("weight order needs a weight vector")
            if any(w < 0 for w in self.weights):
                raise ValueError("weight order needs non-negative weights to be a well-order")
            m = reduce(lcm, (w.denominator for w in self.weights), 1)
            self._int_weights = tuple(int(w * m) for w in self.weights)
        if kind == "block" and (not self.blocks or any(b <= 0 for b in self.blocks)):
            raise ValueError("block order needs positive block sizes")
        self._cache: Dict[Monomial, tuple] = {}

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def weight(cls, omega: Sequence) -> "MonomialOrder":
        return cls("weight", weights=omega)

    @classmethod
    def block(cls, sizes: Sequence[int]) -> "MonomialOrder":
        return cls("block", blocks=sizes)

    def key(self, a: Monomial) -> tuple:
        """Sort key: ``key(a) > key(b)`` iff ``a`` is larger than ``b``."""
        k = self._cache.get(a)
        if k is None:
            if self.kind == "grevlex":
                k = (sum(a), tuple(-x for x in reversed(a)))
            elif self.kind == "lex":
                k = a
            elif self.kind == "weight":
                k = (sum(w * x for w, x in zip(self._int_weights, a)), sum(a),
                     tuple(-x for x in reversed(a)))
            else:
                parts = []
                pos = 0
                for b in self.blocks:
                    blk = a[pos:pos + b]
                    parts.append((sum(blk), tuple(-x for x in reversed(blk))))
                    pos += b
                k = tuple(parts)
            self._cache[a] = k
        return k

    def describe(self) -> str:
        if self.kind == "weight":
            return "weight(" + ",".join(str(w) for w in self.weights) + ";grevlex)"
        if self.kind == "block":
            return "block(" + ",".join(str(b) for b in self.blocks) + ";grevlex)"
        return self.kind

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.weights, self.blocks) == (
            other.kind, other.weights, other.blocks)

    def __hash__(self):
        return hash((self.kind, self.weights, self.blocks))

    def __repr__(self):
        return f"MonomialOrder({self.describe()})"


GREVLEX = MonomialOrder.grevlex()


class Polynomial:
    """Sparse polynomial: a map from exponent tuples to non-zero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, FieldElement]):
        self.ring = ring
        self.terms: Dict[Monomial, FieldElement] = {
            m: c for m, c in terms.items() if not c.is_zero()}

    # -- helpers ---------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if not self.ring.compatible(other.ring):
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.const(other)

    def _join_ring(self, other: "Polynomial") -> PolyRing:
        return self.ring if self.ring.D is not None else other.ring

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self._join_ring(other), out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_field(other)
            return Polynomial(self.ring, {m: x * c for m, x in self.terms.items()})
        self._check(other)
        out: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self._join_ring(other), out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_term(self, mono: Monomial, coeff: FieldElement) -> "Polynomial":
        return Polynomial(self.ring, {
            tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self.terms.items()})

    # -- inspection ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> FieldElement:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        return self * self.leading_coefficient(order).inverse()

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_binomial(self) -> bool:
        return len(self.terms) == 2

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        w = weights or (1,) * self.ring.nvars
        return len({sum(a * b for a, b in zip(w, m)) for m in self.terms}) <= 1

    def variables_used(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def substitute(self, values: Mapping[int, "Polynomial"], target: Optional[PolyRing] = None,
                   index_map: Optional[Sequence[Optional[int]]] = None) -> "Polynomial":
        """Substitute polynomials for some variables.

        ``values`` maps source variable indices to polynomials in ``target``.
        Remaining variables are sent to ``target`` variables through
        ``index_map`` (identity when the rings agree).
        """
        target = target or self.ring
        if index_map is None:
            index_map = list(range(self.ring.nvars))
        out = target.zero()
        for m, c in self.terms.items():
            e = [0] * target.nvars
            term = target.const(c)
            for i, k in enumerate(m):
                if not k:
                    continue
                if i in values:
                    term = term * values[i] ** k
                else:
                    j = index_map[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.variables[i]} has no image")
                    e[j] += k
            out = out + term.mul_term(tuple(e), ONE)
        return out

    def map_ring(self, target: PolyRing, index_map: Sequence[Optional[int]]) -> "Polynomial":
        """Rename variables: source variable ``i`` becomes target ``index_map[i]``."""
        out: Dict[Monomial, FieldElement] = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for i, k in enumerate(m):
                if k:
                    j = index_map[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.variables[i]} has no image")
                    e[j] += k
            t = tuple(e)
            out[t] = out[t] + c if t in out else c
        return Polynomial(target, out)

    # -- comparison / text -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.compatible(other.ring) and self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.variables, frozenset(self.terms.items())))

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        return _join_signed([format_term(self.ring.variables, m, c)
                             for m, c in self.sorted_terms(order)])

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()})"


def format_monomial(variables: Sequence[str], m: Monomial) -> str:
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_term(variables: Sequence[str], m: Monomial, c: FieldElement) -> str:
    mono = format_monomial(variables, m)
    if not mono:
        return format_coefficient(c)
    if c.is_one():
        return mono
    if (-c).is_one():
        return "-" + mono
    return format_coefficient(c) + "*" + mono


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def binomial(ring: PolyRing, a: Sequence[int], b: Sequence[int], coeff_b=1, coeff_a=1) -> Polynomial:
    """``coeff_a * z^a - coeff_b * z^b``."""
    p = ring.monomial(a, coeff_a)
    return p - ring.monomial(b, coeff_b)
