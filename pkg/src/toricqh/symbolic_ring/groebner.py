"""Buchberger's algorithm and the ideal operations built on it."""
from __future__ import annotations

import math
from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .field import ONE, FieldElement, _from_dict, _ONE_POLY, _pgcd, _pdiv_exact, _pmul
from .polynomial import (GREVLEX, Monomial, MonomialOrder, PolyRing, Polynomial,
                         divides, mono_div, mono_lcm)

INFINITE = math.inf

_Poly = Dict[Monomial, FieldElement]


# ---------------------------------------------------------------------------
# raw dict-level kernels

def _lead(p: _Poly, key) -> Monomial:
    return max(p, key=key)


def _monic(p: _Poly, key) -> _Poly:
    lm = _lead(p, key)
    c = p[lm]
    if c.is_one():
        return p
    inv = c.inverse()
    return {m: x * inv for m, x in p.items()}


def _sub_multiple(p: _Poly, g: _Poly, shift: Monomial, c: FieldElement) -> None:
    """In place: ``p -= c * x^shift * g``."""
    for mg, cg in g.items():
        t = tuple(a + b for a, b in zip(mg, shift))
        v = p.get(t)
        nv = -(c * cg) if v is None else v - c * cg
        if nv.is_zero():
            p.pop(t, None)
        else:
            p[t] = nv


def _reduce(p: _Poly, reducers: Sequence[Tuple[Monomial, _Poly]], key) -> _Poly:
    """Full reduction of ``p`` by monic ``reducers``; earliest divisor wins."""
    p = dict(p)
    rem: _Poly = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in reducers:
            if divides(lm, m):
                _sub_multiple(p, g, mono_div(m, lm), c)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _spoly(f: _Poly, lf: Monomial, g: _Poly, lg: Monomial) -> _Poly:
    lcm = mono_lcm(lf, lg)
    out: _Poly = {}
    _sub_multiple(out, f, mono_div(lcm, lf), -ONE)
    _sub_multiple(out, g, mono_div(lcm, lg), ONE)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _buchberger_raw(polys: List[_Poly], order: MonomialOrder) -> List[_Poly]:
    """Buchberger with Gebauer-Moeller pair pruning and the normal selection strategy."""
    key = order.key
    basis: List[_Poly] = []
    leads: List[Monomial] = []
    sugar: List[int] = []
    active: List[int] = []
    pairs: Dict[Tuple[int, int], int] = {}  # pair -> sugar, used as a tiebreak

    def pair_sugar(g: int, h: int) -> int:
        l = mono_lcm(leads[g], leads[h])
        return max(sugar[g] + sum(l) - sum(leads[g]), sugar[h] + sum(l) - sum(leads[h]))

    def update(h: int) -> None:
        nonlocal active, pairs
        lh = leads[h]
        cand = [(g, h) for g in active]
        kept: List[Tuple[int, int]] = []
        while cand:
            g1, _ = cand.pop(0)
            l1 = mono_lcm(leads[g1], lh)
            if _coprime(leads[g1], lh) or not any(
                    divides(mono_lcm(leads[g2], lh), l1) for g2, _ in cand + kept):
                kept.append((g1, h))
        survivors = {}
        for (g1, g2), sg in pairs.items():
            l12 = mono_lcm(leads[g1], leads[g2])
            if (divides(lh, l12) and mono_lcm(leads[g1], lh) != l12
                    and mono_lcm(leads[g2], lh) != l12):
                continue
            survivors[(g1, g2)] = sg
        for g, hh in kept:
            if not _coprime(leads[g], lh):
                survivors[(g, hh)] = pair_sugar(g, hh)
        pairs = survivors
        active = [g for g in active if not divides(lh, leads[g])] + [h]

    def add(p: _Poly, sg: int) -> None:
        # smallest leading monomial first: keeps intermediate expressions short
        reducers = sorted(((leads[g], basis[g]) for g in active), key=lambda r: key(r[0]))
        h = _reduce(p, reducers, key)
        if not h:
            return
        h = _monic(h, key)
        basis.append(h)
        leads.append(_lead(h, key))
        sugar.append(max(sg, max(sum(m) for m in h)))
        update(len(basis) - 1)

    def pair_key(item):
        (i, j), sg = item
        return (key(mono_lcm(leads[i], leads[j])), sg, (i, j))

    for p in sorted((p for p in polys if p), key=lambda q: key(_lead(q, key))):
        add(p, max(sum(m) for m in p))
    while pairs:
        (i, j), sg = min(pairs.items(), key=pair_key)
        del pairs[(i, j)]
        add(_spoly(basis[i], leads[i], basis[j], leads[j]), sg)

    # interreduce the minimal basis into the reduced one
    final = [basis[g] for g in active]
    final_leads = [leads[g] for g in active]
    out = []
    for idx, (g, lg) in enumerate(zip(final, final_leads)):
        others = [(final_leads[k], final[k]) for k in range(len(final)) if k != idx]
        tail = {m: c for m, c in g.items() if m != lg}
        red = _reduce(tail, others, key)
        red[lg] = g[lg]
        out.append(red)
    out.sort(key=lambda q: _canonical_sort_key(q, key))
    return out


def _canonical_sort_key(p: _Poly, key):
    lm = _lead(p, key)
    return (sum(lm), _Desc(key(lm)))


class _Desc:
    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


# ---------------------------------------------------------------------------
# public API

class GroebnerBasis:
    """A reduced Gröbner basis: monic leads, minimal, fully interreduced.

    The reduced basis of an ideal is unique for a given monomial order, so
    equality of two ``GroebnerBasis`` objects (same variables, same order) is
    equality of the ideals.
    """

    def __init__(self, ring: PolyRing, order: MonomialOrder, gens: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.gens: Tuple[Polynomial, ...] = tuple(gens)
        self._leads = tuple(g.leading_monomial(order) for g in self.gens)

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return self._leads

    def is_unit_ideal(self) -> bool:
        return any(not any(m) for m in self._leads)

    def is_zero_ideal(self) -> bool:
        return not self.gens

    def reducers(self):
        return [(lm, g.terms) for lm, g in zip(self._leads, self.gens)]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return ideal_member(p, self)

    def standard_monomials(self) -> List[Monomial]:
        return standard_monomials(self)

    def dimension(self):
        return quotient_dimension(self)

    def to_strs(self) -> List[str]:
        return [g.to_str(self.order) for g in self.gens]

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.ring.compatible(other.ring) and self.order == other.order
                and len(self.gens) == len(other.gens)
                and all(a.terms == b.terms for a, b in zip(self.gens, other.gens)))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"GroebnerBasis[{self.order.describe()}]({', '.join(self.to_strs())})"


def _ring_of(gens: Sequence[Polynomial], ring: Optional[PolyRing]) -> PolyRing:
    if ring is not None:
        return ring
    if not gens:
        raise ValueError("cannot infer the ring of an empty generator list")
    r = gens[0].ring
    for g in gens[1:]:
        if not r.compatible(g.ring):
            raise ValueError(f"generators from different rings: {r} vs {g.ring}")
        if r.D is None:
            r = g.ring
    return r


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
               ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    ring = _ring_of(gens, ring)
    for g in gens:
        if not ring.compatible(g.ring):
            raise ValueError(f"generator {g} is not in {ring}")
    raw = _buchberger_raw([dict(g.terms) for g in gens], order)
    return GroebnerBasis(ring, order, [Polynomial(ring, p) for p in raw])


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    key = order.key
    fm, gm = _monic(f.terms, key), _monic(g.terms, key)
    return Polynomial(f.ring, _spoly(fm, _lead(fm, key), gm, _lead(gm, key)))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    if not gb.ring.compatible(p.ring):
        raise ValueError(f"ring mismatch: {p.ring} vs {gb.ring}")
    return Polynomial(p.ring, _reduce(p.terms, gb.reducers(), gb.order.key))


def ideal_member(p: Polynomial, gb: GroebnerBasis) -> bool:
    return normal_form(p, gb).is_zero()


def standard_monomials(gb: GroebnerBasis, limit: int = 100000) -> List[Monomial]:
    """Monomials outside the leading-term ideal, sorted by the order (ascending).

    Raises ``ValueError`` when the staircase is unbounded.
    """
    if not _is_zero_dimensional(gb):
        raise ValueError("infinitely many standard monomials")
    leads = gb.leading_monomials
    n = gb.ring.nvars
    if gb.is_unit_ideal():
        return []
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    while queue:
        m = queue.popleft()
        for i in range(n):
            nm = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nm in seen or any(divides(l, nm) for l in leads):
                continue
            seen.add(nm)
            if len(seen) > limit:
                raise RuntimeError("standard monomial enumeration exceeded limit")
            queue.append(nm)
    return sorted(seen, key=gb.order.key)


def _is_zero_dimensional(gb: GroebnerBasis) -> bool:
    if gb.is_unit_ideal():
        return True
    pure = set()
    for lm in gb.leading_monomials:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == gb.ring.nvars


def quotient_dimension(gb: GroebnerBasis):
    """Vector-space dimension of the quotient ring, or ``INFINITE``."""
    if not _is_zero_dimensional(gb):
        return INFINITE
    return len(standard_monomials(gb))


def graded_dimensions(gb: GroebnerBasis, weights: Optional[Sequence[int]] = None) -> List[int]:
    """Counts of standard monomials by (weighted) degree."""
    w = weights or (1,) * gb.ring.nvars
    counts: Dict[int, int] = {}
    for m in standard_monomials(gb):
        deg = sum(a * b for a, b in zip(w, m))
        counts[deg] = counts.get(deg, 0) + 1
    if not counts:
        return []
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def initial_form(p: Polynomial, weights: Sequence) -> Polynomial:
    w = [Fraction(x) for x in weights]

    def wt(m):
        return sum(a * b for a, b in zip(w, m))
    top = max(wt(m) for m in p.terms)
    return Polynomial(p.ring, {m: c for m, c in p.terms.items() if wt(m) == top})


def initial_ideal(gens: Sequence[Polynomial], weights: Sequence,
                  ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """Reduced basis of the ideal of top-weight forms ``in_w(I)``.

    Computed from a Gröbner basis under the weight order (grevlex tiebreak),
    whose initial forms generate the initial ideal.
    """
    ring = _ring_of(gens, ring)
    order = MonomialOrder.weight(weights)
    gb = buchberger(gens, order, ring)
    forms = [initial_form(g, weights) for g in gb.gens]
    return buchberger(forms, order, ring)


def eliminate(gens: Sequence[Polynomial], keep_vars: Sequence[str],
              ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """Reduced grevlex basis of ``I ∩ Q(u)[keep_vars]`` via a block order."""
    ring = _ring_of(gens, ring)
    keep = list(keep_vars)
    elim = [v for v in ring.variables if v not in keep]
    big = PolyRing(tuple(elim + keep), ring.D)
    imap = [big.index(v) for v in ring.variables]
    moved = [g.map_ring(big, imap) for g in gens]
    order = MonomialOrder.block((len(elim), len(keep))) if elim else GREVLEX
    gb = buchberger(moved, order, big)
    small = PolyRing(tuple(keep), ring.D)
    back = [None] * len(elim) + list(range(len(keep)))
    kept = [g.map_ring(small, back) for g in gb.gens
            if all(not any(m[:len(elim)]) for m in g.terms)]
    return GroebnerBasis(small, GREVLEX, kept)


def _divide_exact(h: Polynomial, f: Polynomial) -> Polynomial:
    key = GREVLEX.key
    lf = _lead(f.terms, key)
    cf = f.terms[lf]
    p = dict(h.terms)
    q: _Poly = {}
    while p:
        m = max(p, key=key)
        if not divides(lf, m):
            raise ArithmeticError(f"{f} does not divide {h}")
        c = p[m] / cf
        s = mono_div(m, lf)
        q[s] = c
        _sub_multiple(p, f.terms, s, c)
    return Polynomial(h.ring, q)


def intersect(gens_a: Sequence[Polynomial], gens_b: Sequence[Polynomial],
              ring: Optional[PolyRing] = None) -> GroebnerBasis:
    """Reduced grevlex basis of ``I ∩ J`` via ``t*I + (1-t)*J``."""
    ring = _ring_of(list(gens_a) + list(gens_b), ring)
    tname = _fresh(ring, "_t")
    big = PolyRing((tname,) + ring.variables, ring.D)
    imap = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    moved = [t * g.map_ring(big, imap) for g in gens_a]
    moved += [(big.one() - t) * g.map_ring(big, imap) for g in gens_b]
    return eliminate(moved, ring.variables, big)


def ideal_quotient(gens: Sequence[Polynomial], f: Polynomial,
                   order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis of ``(I : f) = {g : g*f in I}``."""
    ring = _ring_of(list(gens) + [f], None)
    if f.is_zero():
        return GroebnerBasis(ring, order, [ring.one()])
    inter = intersect(list(gens), [f], ring)
    quots = [_divide_exact(h.map_ring(ring, list(range(ring.nvars))), f) for h in inter.gens]
    return buchberger(quots, order, ring)


def saturate(gens: Sequence[Polynomial], f: Polynomial,
             order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced basis of ``(I : f^inf)`` via ``I + <1 - s*f>``."""
    ring = _ring_of(list(gens) + [f], None)
    sname = _fresh(ring, "_s")
    big = PolyRing((sname,) + ring.variables, ring.D)
    imap = list(range(1, ring.nvars + 1))
    moved = [g.map_ring(big, imap) for g in gens]
    moved.append(big.one() - big.gen(0) * f.map_ring(big, imap))
    gb = eliminate(moved, ring.variables, big)
    return buchberger([g.map_ring(ring, list(range(ring.nvars))) for g in gb.gens], order, ring)


def _fresh(ring: PolyRing, base: str) -> str:
    name = base
    while name in ring.variables:
        name += "_"
    return name


def _plcm(a, b):
    g = _pgcd(a, b)
    return _pdiv_exact(_pmul(a, b), g)


def clear_denominators(p: Polynomial) -> Dict[Monomial, Dict[int, Fraction]]:
    """Scale ``p`` by a unit of Q(u) so all coefficients are polynomials in u.

    Returns a map monomial -> {u-exponent: rational}, with the smallest
    u-exponent equal to 0.
    """
    den = _ONE_POLY
    for c in p.terms.values():
        if c.den != _ONE_POLY:
            den = _plcm(den, c.den)
    scaled: Dict[Monomial, Dict[int, Fraction]] = {}
    for m, c in p.terms.items():
        num = c.num if den == _ONE_POLY else _pmul(c.num, _pdiv_exact(den, c.den))
        scaled[m] = dict(num)
    low = min(e for d in scaled.values() for e in d)
    return {m: {e - low: x for e, x in d.items()} for m, d in scaled.items()}


def _specialize_regular(gb: GroebnerBasis, ring: PolyRing) -> Optional[List[Polynomial]]:
    """``gb`` at ``u = 0`` when every coefficient is regular there, else ``None``."""
    out = []
    for g in gb.gens:
        terms = {}
        for m, c in g.terms.items():
            v = c.lowest_order()
            if v < 0:
                return None
            if v == 0:
                terms[m] = FieldElement.const(c.substitute(0))
        out.append(Polynomial(ring, terms))
    return out


def limit_at_zero(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                  ring: Optional[PolyRing] = None,
                  hints: Sequence[MonomialOrder] = ()) -> GroebnerBasis:
    """Flat limit ``u -> 0`` of the family of ideals generated by ``gens``.

    If the reduced basis over Q(u) under ``order`` or one of the ``hints``
    has all coefficients regular at ``u = 0`` (leads are monic), the module is
    free over the local ring at ``u = 0`` and the limit is that basis at ``u = 0``.
    Otherwise ``u`` is promoted to a ring variable, denominators are cleared,
    the ideal is saturated by ``u`` (removing components that live over
    u = 0) and the fibre at ``u = 0`` is read off.  The result has rational
    coefficients only.
    """
    ring = _ring_of(gens, ring)
    plain = PolyRing(ring.variables)
    for o in (order,) + tuple(hints):
        special = _specialize_regular(buchberger(gens, o, ring), plain)
        if special is not None:
            return buchberger([Polynomial(ring, g.terms) for g in special], order, ring)
    uname = _fresh(ring, "_u")
    big = PolyRing((uname,) + ring.variables, None)
    lifted = []
    for g in gens:
        if g.is_zero():
            continue
        terms: Dict[Monomial, FieldElement] = {}
        for m, coeffs in clear_denominators(g).items():
            for e, x in coeffs.items():
                terms[(e,) + m] = FieldElement.const(x)
        lifted.append(Polynomial(big, terms))
    u = big.gen(0)
    sat = saturate(lifted, u)
    fibre = []
    for g in sat.gens:
        terms = {m[1:]: c for m, c in g.terms.items() if m[0] == 0}
        if terms:
            fibre.append(Polynomial(ring, terms))
    return buchberger(fibre, order, ring)
