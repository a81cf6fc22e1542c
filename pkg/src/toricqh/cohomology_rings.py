"""Ordinary and quantum cohomology rings of a toric manifold as explicit quotients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (NegativeComponent, NegativeHomogenizationExponent, NotARelation,
                     NotConvexAnticanonical, NotInKahlerCone, RaySetMismatch, ToricError)
from .lattice_fan import Fan, PrimitiveCollection, make_fan, nonnegative_relations
from .pl_support import (PLFunction, anticanonical_pl, chern_divisibility, collection_gap,
                         degree, is_convex, is_strictly_convex, linear_on_cone)
from .symbolic_ring import (GREVLEX, INFINITE, FieldElement, GroebnerBasis, MonomialOrder,
                            PolyRing, Polynomial, buchberger, eliminate, graded_dimensions,
                            ideal_member, ideal_quotient, initial_ideal, limit_at_zero,
                            standard_monomials)
from .symbolic_ring.polynomial import format_monomial


def z_names(n: int) -> Tuple[str, ...]:
    return tuple(f"z{i + 1}" for i in range(n))


@dataclass
class RingPresentation:
    """A quotient ``Q(u)[variables] / ideal`` together with its reduced basis."""

    variables: Tuple[str, ...]
    ideal_gens: List[Polynomial]
    gb: GroebnerBasis
    std_monomials: Optional[list]
    dimension: object
    graded_dims: Optional[List[int]] = None
    extra: Dict[str, object] = field(default_factory=dict)

    @property
    def order(self) -> MonomialOrder:
        return self.gb.order

    def to_dict(self) -> dict:
        out = {
            "variables": list(self.variables),
            "order": self.order.describe(),
            "generators": [g.to_str(self.order) for g in self.ideal_gens],
            "groebner_basis": self.gb.to_strs(),
            "standard_monomials": (None if self.std_monomials is None else
                                   [format_monomial(self.variables, m) or "1"
                                    for m in self.std_monomials]),
            "dimension": "infinite" if self.dimension == INFINITE else self.dimension,
        }
        if self.graded_dims is not None:
            out["graded_dimensions"] = list(self.graded_dims)
        out.update({k: v for k, v in self.extra.items()})
        return out


def _present(ring: PolyRing, gens: Sequence[Polynomial], order: MonomialOrder,
             graded: bool = False, gb: Optional[GroebnerBasis] = None) -> RingPresentation:
    gb = gb if gb is not None else buchberger(list(gens), order, ring)
    dim = gb.dimension()
    std = standard_monomials(gb) if dim != INFINITE else None
    gd = graded_dimensions(gb) if graded and dim != INFINITE else None
    return RingPresentation(ring.variables, list(gens), gb, std, dim, gd)


@dataclass(frozen=True)
class QuantumContext:
    fan: Fan
    phi: PLFunction
    D: int
    collections: Tuple[PrimitiveCollection, ...]

    def __post_init__(self):
        if self.D < 1 or self.D % self.phi.D:
            raise ToricError(f"D={self.D} must be a positive multiple of {self.phi.D}")

    @property
    def ring(self) -> PolyRing:
        return PolyRing(z_names(self.fan.n), self.D)

    def novikov(self, x) -> FieldElement:
        """``exp(-x)`` as a power of ``u = exp(-1/D)``."""
        k = Fraction(x) * self.D
        if k.denominator != 1:
            raise ToricError(f"exp(-{x}) is not a power of exp(-1/{self.D})")
        return FieldElement.monomial(1, int(k))


def make_context(fan: Fan, phi_values: Sequence, D: Optional[int] = None) -> QuantumContext:
    phi = PLFunction(fan, tuple(phi_values))
    return QuantumContext(fan, phi, D or phi.D, fan.primitive_collections)


# -- classical ideals ----------------------------------------------------------

def linear_ideal(fan: Fan, ring: Optional[PolyRing] = None) -> List[Polynomial]:
    """``sum_i <v_i, e_j> z_i`` for the standard dual basis ``e_j``."""
    ring = ring or PolyRing(z_names(fan.n))
    out = []
    for j in range(fan.dim):
        exps = {}
        for i, v in enumerate(fan.rays):
            if v[j]:
                e = [0] * ring.nvars
                e[i] = 1
                exps[tuple(e)] = FieldElement.const(v[j])
        out.append(Polynomial(ring, exps))
    return out


def _mono(ring: PolyRing, exps: Dict[int, int]) -> Tuple[int, ...]:
    e = [0] * ring.nvars
    for i, k in exps.items():
        e[i] += k
    return tuple(e)


def stanley_reisner_ideal(fan: Fan, ring: Optional[PolyRing] = None) -> List[Polynomial]:
    ring = ring or PolyRing(z_names(fan.n))
    return [ring.monomial(_mono(ring, {i: 1 for i in p.indices}))
            for p in fan.primitive_collections]


def ordinary_ring(fan: Fan) -> RingPresentation:
    ring = PolyRing(z_names(fan.n))
    gens = linear_ideal(fan, ring) + stanley_reisner_ideal(fan, ring)
    return _present(ring, gens, GREVLEX, graded=True)


# -- quantum ideals ------------------------------------------------------------

def weight_vector(ctx: QuantumContext) -> Optional[Tuple[Fraction, ...]]:
    """Non-negative weights realising ``phi`` up to a global linear function.

    ``None`` when ``phi`` is not convex (no such weight exists).
    """
    vals = ctx.phi.values
    if all(v >= 0 for v in vals):
        return vals
    if not is_convex(ctx.phi):
        return None
    m = linear_on_cone(ctx.phi, 0)
    return tuple(v - sum(a * b for a, b in zip(ray, m)) for v, ray in zip(vals, ctx.fan.rays))


def quantum_order(ctx: QuantumContext) -> MonomialOrder:
    w = weight_vector(ctx)
    return GREVLEX if w is None else MonomialOrder.weight(w)


def quantum_generators(ctx: QuantumContext, ring: Optional[PolyRing] = None) -> List[Polynomial]:
    """``z_P - E(P) z^c`` with ``E(P) = u^(D * gap(P))`` for each primitive collection."""
    ring = ring or ctx.ring
    out = []
    for p in ctx.collections:
        a = _mono(ring, {i: 1 for i in p.indices})
        b = _mono(ring, dict(zip(p.sigma_p_indices, p.coeffs)))
        e = ctx.novikov(collection_gap(ctx.phi, p))
        out.append(ring.monomial(a) - ring.monomial(b, e))
    return out


def quantum_ring(ctx: QuantumContext, order: Optional[MonomialOrder] = None) -> RingPresentation:
    ring = ctx.ring
    gens = linear_ideal(ctx.fan, ring) + quantum_generators(ctx, ring)
    return _present(ring, gens, order or quantum_order(ctx))


@dataclass(frozen=True)
class LimitResult:
    initial_is_sr: bool
    limit_is_ordinary: bool

    def __bool__(self):
        return self.initial_is_sr and self.limit_is_ordinary


def limit_check(ctx: QuantumContext) -> LimitResult:
    """Classical limit: initial ideal of the quantum ideal and the ``u -> 0`` fibre."""
    if not is_strictly_convex(ctx.phi):
        raise NotInKahlerCone("phi is not strictly convex; the limit statement does not apply")
    w = weight_vector(ctx)
    ring = ctx.ring
    init = initial_ideal(quantum_generators(ctx, ring), w, ring)
    sr = buchberger(stanley_reisner_ideal(ctx.fan, ring), MonomialOrder.weight(w), ring)
    lim = limit_at_zero(linear_ideal(ctx.fan, ring) + quantum_generators(ctx, ring), GREVLEX, ring,
                        hints=[MonomialOrder.weight(w)])
    return LimitResult(init == sr, lim == ordinary_ring(ctx.fan).gb)


def quantum_basis_check(ctx: QuantumContext) -> bool:
    """The binomials themselves form the reduced basis of their ideal under the weight order."""
    order = quantum_order(ctx)
    gens = quantum_generators(ctx)
    gb = buchberger(gens, order, ctx.ring)
    mine = sorted((g.monic(order) for g in gens), key=lambda g: sorted(g.terms))
    theirs = sorted(gb.gens, key=lambda g: sorted(g.terms))
    return len(mine) == len(theirs) and all(a.terms == b.terms for a, b in zip(mine, theirs))


def zr_grading_check(ctx: QuantumContext) -> Tuple[int, bool]:
    r = chern_divisibility(ctx.fan)
    ok = True
    for p in ctx.collections:
        diff = p.k - p.coeff_sum
        ok &= (diff == 0) if r == 0 else (diff % r == 0)
    return r, ok


# -- homogenised variants ------------------------------------------------------

def z0_ring(ctx: QuantumContext, laurent: bool = False) -> PolyRing:
    names = z_names(ctx.fan.n) + ("z0",)
    if laurent:
        names += ("w0",)
    return PolyRing(names, ctx.D)


def homogenized_quantum_generators(ctx: QuantumContext, mode: str = "poly",
                                   ring: Optional[PolyRing] = None) -> List[Polynomial]:
    """``z_P - E(P) z^c z0^(k - sum c)``.

    In ``laurent`` mode a negative power of ``z0`` is written with the
    auxiliary inverse ``w0`` (the ring also carries ``z0*w0 - 1``).
    """
    if mode not in ("poly", "laurent"):
        raise ToricError(f"unknown z0 mode {mode!r}")
    ring = ring or z0_ring(ctx, laurent=(mode == "laurent"))
    z0 = ring.index("z0")
    out = []
    for p in ctx.collections:
        e = p.k - p.coeff_sum
        a = {i: 1 for i in p.indices}
        b = dict(zip(p.sigma_p_indices, p.coeffs))
        if e >= 0:
            b[z0] = e
        elif mode == "poly":
            raise NegativeHomogenizationExponent(
                f"collection {ctx.fan.display_cone(p.indices)} needs z0^{e}")
        else:
            b[ring.index("w0")] = -e
        out.append(ring.monomial(_mono(ring, a))
                   - ring.monomial(_mono(ring, b), ctx.novikov(collection_gap(ctx.phi, p))))
    return out


def _inverse_relation(ring: PolyRing) -> Polynomial:
    return ring.gen("z0") * ring.gen("w0") - ring.one()


def quantum_ring_z0_laurent(ctx: QuantumContext) -> RingPresentation:
    ring = z0_ring(ctx, laurent=True)
    gens = (linear_ideal(ctx.fan, ring) + homogenized_quantum_generators(ctx, "laurent", ring)
            + [_inverse_relation(ring)])
    return _present(ring, gens, GREVLEX)


def _free_rank(gb: GroebnerBasis, var: int) -> Optional[int]:
    """Rank over ``Q(u)[var]`` when no leading monomial involves ``var``."""
    if any(m[var] for m in gb.leading_monomials):
        return None
    keep = [i for i in range(gb.ring.nvars) if i != var]
    small = PolyRing(tuple(gb.ring.variables[i] for i in keep))
    leads = [small.monomial(tuple(m[i] for i in keep)) for m in gb.leading_monomials]
    proj = GroebnerBasis(small, GREVLEX, leads)
    d = proj.dimension()
    return None if d == INFINITE else d


def quantum_ring_z0_polynomial(ctx: QuantumContext) -> RingPresentation:
    """Polynomial ``z0`` ring; the contraction of the Laurent ideal is compared with the
    homogeneous binomials, and the result is recorded in ``extra``."""
    if not is_convex(anticanonical_pl(ctx.fan)):
        raise NotConvexAnticanonical("the anticanonical PL function is not convex")
    big = z0_ring(ctx, laurent=True)
    laurent = homogenized_quantum_generators(ctx, "laurent", big) + [_inverse_relation(big)]
    contracted = eliminate(laurent, z_names(ctx.fan.n) + ("z0",), big)
    ring = z0_ring(ctx)
    binoms = homogenized_quantum_generators(ctx, "poly", ring)
    binom_gb = buchberger(binoms, GREVLEX, ring)
    gens = linear_ideal(ctx.fan, ring) + binoms
    pres = _present(ring, gens, GREVLEX)
    pres.extra["contraction_generated_by_binomials"] = contracted == binom_gb
    pres.extra["free_rank_over_z0"] = _free_rank(pres.gb, ring.index("z0"))
    return pres


def specialize_z0(pres: RingPresentation, ctx: QuantumContext) -> GroebnerBasis:
    """Set ``z0 = 1`` in a polynomial ``z0`` presentation; basis under the quantum order."""
    ring = ctx.ring
    src = pres.gb.ring
    z0 = src.index("z0")
    imap = [i if i < ctx.fan.n else None for i in range(src.nvars)]
    gens = [g.substitute({z0: ring.one()}, ring, imap) for g in pres.ideal_gens]
    return buchberger([g for g in gens if not g.is_zero()], quantum_order(ctx), ring)


# -- relations of the quantum ring ---------------------------------------------

def relation_binomial(ctx: QuantumContext, lam: Sequence[int],
                      ring: Optional[PolyRing] = None) -> Polynomial:
    """``z^lam - u^(D deg lam)``."""
    ring = ring or ctx.ring
    return ring.monomial(tuple(lam)) - ring.const(ctx.novikov(degree(ctx.phi, lam)))


def quantum_relation_check(ctx: QuantumContext, lam: Sequence[int],
                           gb: Optional[GroebnerBasis] = None) -> bool:
    if not ctx.fan.is_relation(lam):
        raise NotARelation(f"{tuple(lam)} is not a relation among the rays")
    if any(x < 0 for x in lam):
        raise NegativeComponent(f"{tuple(lam)} has a negative component")
    gb = gb or quantum_ring(ctx).gb
    return ideal_member(relation_binomial(ctx, lam, gb.ring), gb)


def a_ring_equality_check(ctx: QuantumContext, bound: int) -> bool:
    """Ideal of all ``z^lam - u^(D deg lam)`` (entries <= bound) plus the linear ideal
    equals the quantum ideal."""
    ring = ctx.ring
    order = quantum_order(ctx)
    rels = [relation_binomial(ctx, lam, ring) for lam in nonnegative_relations(ctx.fan, bound)
            if any(lam)]
    gb = buchberger(linear_ideal(ctx.fan, ring) + rels, order, ring)
    return gb == quantum_ring(ctx, order).gb


# -- flops ---------------------------------------------------------------------

def canonical_fan(fan: Fan) -> Fan:
    """Same fan with rays sorted lexicographically."""
    perm = sorted(range(fan.n), key=lambda i: fan.rays[i])
    pos = {old: new for new, old in enumerate(perm)}
    return make_fan(fan.dim, [fan.rays[i] for i in perm],
                    [[pos[i] for i in c] for c in fan.max_cones])


@dataclass(frozen=True)
class FlopResult:
    quantum_equal: bool
    ordinary_equal: bool

    def __bool__(self):
        return self.quantum_equal


def flop_compare(fan1: Fan, fan2: Fan, phi_values: Sequence, D: Optional[int] = None) -> FlopResult:
    """Compare ``P + Q_phi`` for two fans with the same rays (``phi`` in sorted ray order)."""
    if sorted(fan1.rays) != sorted(fan2.rays):
        raise RaySetMismatch("the fans have different ray sets")
    c1, c2 = canonical_fan(fan1), canonical_fan(fan2)
    ctx1, ctx2 = make_context(c1, phi_values, D), make_context(c2, phi_values, D)
    q1 = quantum_ring(ctx1, GREVLEX).gb
    q2 = quantum_ring(ctx2, GREVLEX).gb
    return FlopResult(q1 == q2, ordinary_ring(c1).gb == ordinary_ring(c2).gb)


def restriction_image_ring(fan: Fan) -> RingPresentation:
    """``H* / Ann(c1)``, presented as ``Q[z] / (I_H : c1)``."""
    ring = PolyRing(z_names(fan.n))
    ih = linear_ideal(fan, ring) + stanley_reisner_ideal(fan, ring)
    c1 = sum(ring.gens(), ring.zero())
    gb = ideal_quotient(ih, c1, GREVLEX)
    return _present(ring, list(gb.gens), GREVLEX, graded=True, gb=gb)
