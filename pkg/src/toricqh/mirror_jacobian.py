"""Mirror side: the Laurent polynomial f_phi, its log-Jacobian ring and R_f / Ann(X0).

Laurent rings are realised by doubling variables: ``Xb_j`` stands for
``X_j^(-1)`` and every ideal carries ``X_j*Xb_j - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology_rings import (QuantumContext, RingPresentation, _present, linear_ideal,
                               quantum_generators, quantum_ring, restriction_image_ring,
                               z0_ring, z_names)
from .errors import NotInKahlerCone
from .pl_support import collection_gap, is_strictly_convex
from .symbolic_ring import (GREVLEX, FieldElement, GroebnerBasis, PolyRing, Polynomial,
                            buchberger, eliminate, ideal_quotient, limit_at_zero)
from .symbolic_ring.field import ONE

LaurentTerms = Dict[Tuple[int, ...], FieldElement]


@dataclass(frozen=True)
class LaurentContext:
    d: int
    D: Optional[int] = None
    with_x0: bool = False

    @property
    def ring(self) -> PolyRing:
        names = tuple(f"X{j + 1}" for j in range(self.d)) + tuple(
            f"Xb{j + 1}" for j in range(self.d))
        if self.with_x0:
            names += ("X0",)
        return PolyRing(names, self.D)

    def inverse_relations(self, ring: Optional[PolyRing] = None) -> List[Polynomial]:
        ring = ring or self.ring
        return [ring.gen(f"X{j + 1}") * ring.gen(f"Xb{j + 1}") - ring.one() for j in range(self.d)]

    def to_poly(self, terms: LaurentTerms, ring: Optional[PolyRing] = None) -> Polynomial:
        """Canonical polynomial of a Laurent expression keyed by exponent vectors.

        With ``with_x0`` the key carries the ``X0`` exponent as its last entry.
        """
        ring = ring or self.ring
        out: Dict[Tuple[int, ...], FieldElement] = {}
        for key, c in terms.items():
            v = key[:self.d]
            e = [0] * ring.nvars
            for j, x in enumerate(v):
                if x > 0:
                    e[ring.index(f"X{j + 1}")] = x
                elif x < 0:
                    e[ring.index(f"Xb{j + 1}")] = -x
            if self.with_x0:
                e[ring.index("X0")] = key[self.d]
            t = tuple(e)
            out[t] = out[t] + c if t in out else c
        return Polynomial(ring, out)


@dataclass(frozen=True)
class MirrorPolynomial:
    """``f = -1 + sum_i c_i X^(v_i)``; ``terms`` lists the pairs ``(v_i, c_i)``."""

    laurent: LaurentContext
    terms: Tuple[Tuple[Tuple[int, ...], FieldElement], ...]

    def as_terms(self) -> LaurentTerms:
        out: LaurentTerms = {(0,) * self.laurent.d: -ONE}
        for v, c in self.terms:
            out[v] = out[v] + c if v in out else c
        return {k: c for k, c in out.items() if not c.is_zero()}

    @property
    def poly(self) -> Polynomial:
        return self.laurent.to_poly(self.as_terms())

    def log_derivative_terms(self, j: int) -> LaurentTerms:
        out: LaurentTerms = {}
        for v, c in self.terms:
            if v[j]:
                t = c * v[j]
                out[v] = out[v] + t if v in out else t
        return {k: c for k, c in out.items() if not c.is_zero()}

    def log_jacobian_generators(self) -> List[Polynomial]:
        gens = [self.laurent.to_poly(self.log_derivative_terms(j)) for j in range(self.laurent.d)]
        return [g for g in gens if not g.is_zero()]


def mirror_polynomial(ctx: QuantumContext) -> MirrorPolynomial:
    lc = LaurentContext(ctx.fan.dim, ctx.D)
    return MirrorPolynomial(lc, tuple((v, ctx.novikov(ctx.phi.values[i]))
                                      for i, v in enumerate(ctx.fan.rays)))


def log_jacobian_ideal(f: MirrorPolynomial) -> GroebnerBasis:
    ring = f.laurent.ring
    return buchberger(f.log_jacobian_generators() + f.laurent.inverse_relations(ring),
                      GREVLEX, ring)


def z_image(ctx: QuantumContext, p: Polynomial) -> LaurentTerms:
    """Image under ``z_i -> exp(-phi(v_i)) X^(v_i)`` (``p`` in the z-variables)."""
    out: LaurentTerms = {}
    d = ctx.fan.dim
    for m, c in p.terms.items():
        v = [0] * d
        w = Fraction(0)
        for i, k in enumerate(m[:ctx.fan.n]):
            if k:
                w += k * ctx.phi.values[i]
                for j in range(d):
                    v[j] += k * ctx.fan.rays[i][j]
        t = c * ctx.novikov(w)
        key = tuple(v)
        out[key] = out[key] + t if key in out else t
    return {k: c for k, c in out.items() if not c.is_zero()}


@dataclass(frozen=True)
class MirrorResult:
    kernel_identity: bool
    linear_image: bool
    c1_image: bool
    quantum_dimension: object
    jacobian_dimension: object

    def __bool__(self):
        return (self.kernel_identity and self.linear_image and self.c1_image
                and self.quantum_dimension == self.jacobian_dimension)


def mirror_map_check(ctx: QuantumContext) -> MirrorResult:
    f = mirror_polynomial(ctx)
    kernel = all(not z_image(ctx, b) for b in quantum_generators(ctx))
    lin = all(z_image(ctx, g) == f.log_derivative_terms(j)
              for j, g in enumerate(linear_ideal(ctx.fan, ctx.ring)))
    c1 = sum(ctx.ring.gens(), ctx.ring.zero())
    f_plus_one = {k: c for k, c in f.as_terms().items() if any(k)}
    c1_ok = z_image(ctx, c1) == f_plus_one
    return MirrorResult(kernel, lin, c1_ok, quantum_ring(ctx).dimension,
                        log_jacobian_ideal(f).dimension())


def _sdelta_ideal(ctx: QuantumContext, ring: PolyRing) -> List[Polynomial]:
    """Kernel of ``z0 -> X0, z_i -> exp(-phi(v_i)) X0 X^(v_i)``, by elimination."""
    lc = LaurentContext(ctx.fan.dim, ctx.D, with_x0=True)
    lring = lc.ring
    big = PolyRing(ring.variables + lring.variables, ctx.D)
    off = ring.nvars
    lift = list(range(off, off + lring.nvars))
    gens = [big.gen("z0") - big.gen("X0")]
    for i, v in enumerate(ctx.fan.rays):
        img = lc.to_poly({tuple(v) + (1,): ctx.novikov(ctx.phi.values[i])}, lring)
        gens.append(big.gen(f"z{i + 1}") - img.map_ring(big, lift))
    gens += [g.map_ring(big, lift) for g in lc.inverse_relations(lring)]
    gb = eliminate(gens, ring.variables, big)
    return [g.map_ring(ring, list(range(ring.nvars))) for g in gb.gens]


def rf_ring(ctx: QuantumContext) -> RingPresentation:
    """``R_f / Ann(X0)`` presented in the variables ``z1..zn, z0``."""
    ring = z0_ring(ctx)
    s = _sdelta_ideal(ctx, ring)
    z0 = ring.gen("z0")
    f0 = sum(ring.gens()[:ctx.fan.n], ring.zero()) - z0
    j = s + [f0] + linear_ideal(ctx.fan, ring)
    gb = ideal_quotient(j, z0, GREVLEX)
    pres = _present(ring, list(gb.gens), GREVLEX, gb=gb)
    pres.extra["sdelta_generators"] = [g.to_str() for g in s]
    return pres


def mirror_limit_check(ctx: QuantumContext) -> bool:
    """``u -> 0`` limit of ``R_f / Ann(X0)`` equals ``H* / Ann(c1)``."""
    if not is_strictly_convex(ctx.phi):
        raise NotInKahlerCone("phi is not strictly convex; the limit statement does not apply")
    rf = rf_ring(ctx)
    lim = limit_at_zero(list(rf.gb.gens), GREVLEX, rf.gb.ring)
    keep = z_names(ctx.fan.n)
    reduced = eliminate(list(lim.gens), keep, lim.ring)
    return reduced == restriction_image_ring(ctx.fan).gb
