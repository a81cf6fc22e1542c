"""Complete regular fans: validation, primitive collections, relation lattice.

Indices are 0-based throughout the Python API; the fan file format and all
human-readable reports use 1-based ray numbers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import (NegativeComponent, NonIntegralDecomposition, NonPrimitiveRay,
                     NonRegularCone, NotAFan, NotARelation, NotComplete, ToricError)
from .intlinalg import det, integer_left_kernel, unimodular_inverse, vec_mat

LatticeVector = Tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """A validated complete fan of regular simplicial cones.

    Build with :func:`make_fan`; direct construction skips validation.
    """

    dim: int
    rays: Tuple[LatticeVector, ...]
    max_cones: Tuple[Tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rays)

    @cached_property
    def _cone_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(c) for c in self.max_cones)

    @cached_property
    def _inverses(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        out = []
        for c in self.max_cones:
            inv = unimodular_inverse([list(self.rays[i]) for i in c])
            out.append(tuple(tuple(r) for r in inv))
        return tuple(out)

    def is_face(self, indices) -> bool:
        s = frozenset(indices)
        return any(s <= c for c in self._cone_sets)

    def cone_coordinates(self, cone: int, v: Sequence) -> list:
        """Coordinates of ``v`` in the generators of maximal cone ``cone``."""
        return vec_mat(list(v), self._inverses[cone])

    def ray_sum(self, indices, coeffs=None) -> LatticeVector:
        coeffs = coeffs or [1] * len(indices)
        out = [0] * self.dim
        for i, c in zip(indices, coeffs):
            for j in range(self.dim):
                out[j] += c * self.rays[i][j]
        return tuple(out)

    def is_relation(self, lam: Sequence[int]) -> bool:
        return len(lam) == self.n and self.ray_sum(range(self.n), list(lam)) == (0,) * self.dim

    @cached_property
    def primitive_collections(self) -> Tuple["PrimitiveCollection", ...]:
        return tuple(primitive_collections(self))

    def display_cone(self, cone) -> str:
        return "{" + ",".join(str(i + 1) for i in cone) + "}"


@dataclass(frozen=True)
class PrimitiveCollection:
    """Minimal non-face ``P`` with ``v_P = sum_s coeffs[s] * v[sigma[s]]``."""

    indices: Tuple[int, ...]
    sigma_p_indices: Tuple[int, ...]
    coeffs: Tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.indices)

    @property
    def coeff_sum(self) -> int:
        return sum(self.coeffs)

    def relation(self, n: int) -> Tuple[int, ...]:
        """The primitive relation ``sum_{i in P} e_i - sum_s c_s e_{j_s}``."""
        lam = [0] * n
        for i in self.indices:
            lam[i] += 1
        for j, c in zip(self.sigma_p_indices, self.coeffs):
            lam[j] -= c
        return tuple(lam)


@dataclass(frozen=True)
class RelationLattice:
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def make_fan(dim: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]) -> Fan:
    """Validate fan data and return a :class:`Fan` (0-based cone indices)."""
    if dim < 1:
        raise ToricError(f"dimension must be >= 1, got {dim}")
    rays_t = tuple(tuple(int(x) for x in r) for r in rays)
    n = len(rays_t)
    if n < dim + 1:
        raise NotComplete(f"a complete fan in dimension {dim} needs at least {dim + 1} rays, got {n}")
    for i, r in enumerate(rays_t):
        if len(r) != dim:
            raise ToricError(f"ray {i + 1} has {len(r)} coordinates, expected {dim}")
        if not _primitive(r):
            raise NonPrimitiveRay(f"ray {i + 1} = {r} is not primitive")
    if len(set(rays_t)) != n:
        raise NotAFan("repeated ray")

    cones = []
    for c in max_cones:
        c = tuple(sorted(int(i) for i in c))
        if len(c) != dim or len(set(c)) != dim:
            raise ToricError(f"cone {c} must have {dim} distinct members")
        if c[0] < 0 or c[-1] >= n:
            raise ToricError(f"cone {c} has an index out of range")
        cones.append(c)
    if len(set(cones)) != len(cones):
        raise NotAFan("repeated maximal cone")
    if not cones:
        raise NotComplete("no maximal cones")

    for c in cones:
        if abs(det([list(rays_t[i]) for i in c])) != 1:
            raise NonRegularCone(f"cone {_one_based(c)} has determinant != +-1")
    used = {i for c in cones for i in c}
    if len(used) != n:
        missing = sorted(set(range(n)) - used)
        raise NotAFan(f"rays {[i + 1 for i in missing]} lie in no maximal cone")

    fan = Fan(dim, rays_t, tuple(cones))
    _check_facets(fan)
    _check_covering_degree(fan)
    return fan


def _one_based(c) -> str:
    return "{" + ",".join(str(i + 1) for i in c) + "}"


def _check_facets(fan: Fan) -> None:
    facets: Dict[Tuple[int, ...], List[int]] = {}
    for ci, c in enumerate(fan.max_cones):
        for drop in c:
            f = tuple(i for i in c if i != drop)
            facets.setdefault(f, []).append(ci)
    adj: Dict[int, List[int]] = {i: [] for i in range(len(fan.max_cones))}
    for f, owners in facets.items():
        if len(owners) == 1:
            raise NotComplete(f"facet {_one_based(f)} of cone "
                              f"{_one_based(fan.max_cones[owners[0]])} is not shared")
        if len(owners) > 2:
            raise NotAFan(f"facet {_one_based(f)} lies in {len(owners)} maximal cones")
        a, b = owners
        adj[a].append(b)
        adj[b].append(a)
        # the two cones must lie on opposite sides of the common facet
        ca, cb = fan.max_cones[a], fan.max_cones[b]
        ia = next(i for i in ca if i not in f)
        ib = next(i for i in cb if i not in f)
        coords = fan.cone_coordinates(a, fan.rays[ib])
        if coords[ca.index(ia)] >= 0:
            raise NotAFan(f"cones {_one_based(ca)} and {_one_based(cb)} overlap across "
                          f"their common facet")
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(fan.max_cones):
        raise NotComplete("facet-adjacency graph is disconnected")


def _check_covering_degree(fan: Fan) -> None:
    """A generic point must lie in the interior of exactly one maximal cone."""
    rng = random.Random(0x5EED)
    for _ in range(20):
        w = [Fraction(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6)) for _ in range(fan.dim)]
        p = [sum(wi * fan.rays[i][j] for wi, i in zip(w, fan.max_cones[0]))
             for j in range(fan.dim)]
        hits = 0
        degenerate = False
        for ci in range(len(fan.max_cones)):
            coords = fan.cone_coordinates(ci, p)
            if any(x == 0 for x in coords):
                degenerate = True
                break
            if all(x > 0 for x in coords):
                hits += 1
        if degenerate:
            continue
        if hits != 1:
            raise NotAFan(f"maximal cones overlap: a generic point lies in {hits} cones")
        return
    raise AssertionError("could not find a generic test point")


def locate_cone(fan: Fan, v: Sequence) -> int:
    """Smallest index of a maximal cone containing ``v``."""
    for ci in range(len(fan.max_cones)):
        if all(x >= 0 for x in fan.cone_coordinates(ci, v)):
            return ci
    raise AssertionError(f"{tuple(v)} lies in no cone of a complete fan")


def minimal_cone_decomposition(fan: Fan, v: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Generators of the minimal cone containing ``v`` and the positive coordinates."""
    ci = locate_cone(fan, v)
    coords = fan.cone_coordinates(ci, v)
    idx, cs = [], []
    for i, x in zip(fan.max_cones[ci], coords):
        x = Fraction(x)
        if x.denominator != 1:
            raise NonIntegralDecomposition(f"{tuple(v)} has coordinates {coords}")
        if x > 0:
            idx.append(i)
            cs.append(int(x))
    return tuple(idx), tuple(cs)


def primitive_collections(fan: Fan) -> List[PrimitiveCollection]:
    """All minimal non-faces, sorted lexicographically."""
    out = []
    for size in range(2, min(fan.n, fan.dim + 1) + 1):
        for s in combinations(range(fan.n), size):
            if fan.is_face(s):
                continue
            if all(fan.is_face(t) for t in combinations(s, size - 1)):
                sig, cs = minimal_cone_decomposition(fan, fan.ray_sum(s))
                out.append(PrimitiveCollection(s, sig, cs))
    out.sort(key=lambda p: p.indices)
    return out


def relation_lattice(fan: Fan) -> RelationLattice:
    """Z-basis (Hermite normal form) of the integer relations among the rays."""
    basis = integer_left_kernel([list(r) for r in fan.rays])
    return RelationLattice(tuple(tuple(b) for b in basis))


def virtual_dimension(fan: Fan, lam: Sequence[int]) -> int:
    if not fan.is_relation(lam):
        raise NotARelation(f"{tuple(lam)} is not a relation among the rays")
    if any(x < 0 for x in lam):
        raise NegativeComponent(f"{tuple(lam)} has a negative component")
    return fan.dim + sum(lam)


def nonnegative_relations(fan: Fan, bound: int) -> List[Tuple[int, ...]]:
    """All relations with entries in ``[0, bound]``, by brute force."""
    out = []
    for lam in _box(fan.n, 0, bound):
        if fan.is_relation(lam):
            out.append(lam)
    return out


def _box(n: int, lo: int, hi: int):
    if n == 0:
        yield ()
        return
    for rest in _box(n - 1, lo, hi):
        for x in range(lo, hi + 1):
            yield rest + (x,)
