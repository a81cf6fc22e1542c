"""Piecewise-linear functions on a fan, convexity, and the polytopes they cut out."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor, gcd
from typing import List, Sequence, Tuple

from .errors import ToricError, Unbounded
from .intlinalg import det, integer_left_kernel, inverse, rank
from .lattice_fan import Fan, LatticeVector, PrimitiveCollection, locate_cone, relation_lattice
from .symbolic_ring.field import lcm_denominators


@dataclass(frozen=True)
class PLFunction:
    """Determined by its values on the rays, in ray order."""

    fan: Fan
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.fan.n:
            raise ToricError(f"PL function needs {self.fan.n} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def D(self) -> int:
        """Least common denominator of the values."""
        return lcm_denominators(self.values)

    def __add__(self, other: "PLFunction") -> "PLFunction":
        return PLFunction(self.fan, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "PLFunction") -> "PLFunction":
        return PLFunction(self.fan, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "PLFunction":
        return PLFunction(self.fan, tuple(Fraction(c) * v for v in self.values))


def linear_pl(fan: Fan, m: Sequence) -> PLFunction:
    """Restriction of the global linear function ``<., m>``."""
    return PLFunction(fan, tuple(sum(Fraction(a) * b for a, b in zip(v, m)) for v in fan.rays))


def linear_on_cone(phi: PLFunction, cone: int) -> Tuple[Fraction, ...]:
    """The ``m`` with ``<v_i, m> = phi(v_i)`` for the generators of ``cone``."""
    fan = phi.fan
    inv = fan._inverses[cone]
    vals = [phi.values[i] for i in fan.max_cones[cone]]
    return tuple(sum(Fraction(inv[j][k]) * vals[k] for k in range(fan.dim))
                 for j in range(fan.dim))


def evaluate(phi: PLFunction, v: Sequence) -> Fraction:
    fan = phi.fan
    ci = locate_cone(fan, v)
    coords = fan.cone_coordinates(ci, v)
    return sum((Fraction(a) * phi.values[i] for a, i in zip(coords, fan.max_cones[ci])),
               Fraction(0))


def degree(phi: PLFunction, lam: Sequence[int]) -> Fraction:
    if len(lam) != phi.fan.n:
        raise ToricError(f"relation has length {len(lam)}, expected {phi.fan.n}")
    return sum((l * v for l, v in zip(lam, phi.values)), Fraction(0))


def collection_gap(phi: PLFunction, p: PrimitiveCollection) -> Fraction:
    """``sum_{i in P} phi(v_i) - phi(v_P)``; positive on the Kähler cone interior."""
    lhs = sum((phi.values[i] for i in p.indices), Fraction(0))
    rhs = sum((c * phi.values[j] for j, c in zip(p.sigma_p_indices, p.coeffs)), Fraction(0))
    return lhs - rhs


def is_strictly_convex(phi: PLFunction) -> bool:
    return all(collection_gap(phi, p) > 0 for p in phi.fan.primitive_collections)


def is_convex(phi: PLFunction) -> bool:
    return all(collection_gap(phi, p) >= 0 for p in phi.fan.primitive_collections)


@dataclass(frozen=True)
class KahlerLine:
    collection: PrimitiveCollection
    lhs: Fraction
    rhs: Fraction

    @property
    def status(self) -> str:
        if self.lhs > self.rhs:
            return "strict"
        if self.lhs == self.rhs:
            return "boundary"
        return "outside"


def kahler_report(phi: PLFunction) -> Tuple[List[KahlerLine], str]:
    """Per-collection inequalities and a verdict: interior, boundary or outside."""
    lines = []
    for p in phi.fan.primitive_collections:
        lhs = sum((phi.values[i] for i in p.indices), Fraction(0))
        lines.append(KahlerLine(p, lhs, lhs - collection_gap(phi, p)))
    st = {l.status for l in lines}
    if "outside" in st:
        verdict = "outside"
    elif "boundary" in st:
        verdict = "boundary"
    else:
        verdict = "interior"
    return lines, verdict


def anticanonical_pl(fan: Fan) -> PLFunction:
    return PLFunction(fan, tuple([1] * fan.n))


def chern_divisibility(fan: Fan) -> int:
    """gcd of the anticanonical degrees of a relation basis (0 when all vanish)."""
    g = 0
    for lam in relation_lattice(fan).basis:
        g = gcd(g, sum(lam))
    return g


@dataclass(frozen=True)
class RationalPolytopeH:
    """``{x : <normal, x> >= -offset}`` for each (normal, offset) pair."""

    inequalities: Tuple[Tuple[LatticeVector, Fraction], ...]

    @property
    def dim(self) -> int:
        return len(self.inequalities[0][0])

    def contains(self, x: Sequence) -> bool:
        return all(sum(a * b for a, b in zip(nv, x)) >= -off for nv, off in self.inequalities)

    def describe(self) -> List[str]:
        out = []
        for nv, off in self.inequalities:
            lhs = " + ".join(f"{c}*x{j + 1}" for j, c in enumerate(nv) if c) or "0"
            out.append(f"{lhs} >= {-off}")
        return out


@dataclass(frozen=True)
class DualPolytopeV:
    vertices: Tuple[LatticeVector, ...]


def polytope_delta(phi: PLFunction) -> RationalPolytopeH:
    return RationalPolytopeH(tuple((v, phi.values[i]) for i, v in enumerate(phi.fan.rays)))


def dual_polytope(fan: Fan) -> DualPolytopeV:
    return DualPolytopeV(fan.rays)


def _check_bounded(poly: RationalPolytopeH) -> None:
    normals = [list(nv) for nv, _ in poly.inequalities]
    d = poly.dim
    if rank(normals) < d:
        raise Unbounded("normals do not span; the polyhedron contains a line")
    # the recession cone is pointed; any non-zero element forces an extreme ray
    for sub in combinations(normals, d - 1):
        if sub and rank(list(sub)) < d - 1:
            continue
        transpose = [[row[j] for row in sub] for j in range(d)] if sub else [[] for _ in range(d)]
        for y in integer_left_kernel(transpose):
            for s in (1, -1):
                if all(s * sum(a * b for a, b in zip(nv, y)) >= 0 for nv in normals):
                    raise Unbounded(f"recession direction {tuple(s * c for c in y)}")


def vertices(poly: RationalPolytopeH) -> List[Tuple[Fraction, ...]]:
    d = poly.dim
    out = set()
    for sub in combinations(poly.inequalities, d):
        m = [list(nv) for nv, _ in sub]
        if det(m) == 0:
            continue
        inv = inverse(m)
        rhs = [-off for _, off in sub]
        x = tuple(sum(inv[i][k] * rhs[k] for k in range(d)) for i in range(d))
        if poly.contains(x):
            out.add(x)
    return sorted(out)


def lattice_points(poly: RationalPolytopeH) -> List[LatticeVector]:
    """All integer points, sorted lexicographically."""
    _check_bounded(poly)
    vs = vertices(poly)
    if not vs:
        return []
    d = poly.dim
    lo = [floor(min(v[j] for v in vs)) for j in range(d)]
    hi = [ceil(max(v[j] for v in vs)) for j in range(d)]
    pts = [p for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))) if poly.contains(p)]
    return sorted(pts)
