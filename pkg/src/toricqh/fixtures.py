"""Bundled example fans.

Each builder returns a validated :class:`Fan`; :data:`FIXTURES` maps a short
name to its builder and :func:`ample_phi` gives a strictly convex PL vector.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from .lattice_fan import Fan, make_fan
from .pl_support import PLFunction, is_strictly_convex


def projective_space(d: int) -> Fan:
    rays = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays.append(tuple([-1] * d))
    cones = list(combinations(range(d + 1), d))
    return make_fan(d, rays, cones)


def p1xp1() -> Fan:
    return make_fan(2, [(1, 0), (-1, 0), (0, 1), (0, -1)],
                    [(0, 2), (0, 3), (1, 2), (1, 3)])


def hirzebruch(a: int) -> Fan:
    """Rays (1,0), (0,1), (-1,a), (0,-1); cones 12, 23, 34, 41."""
    return make_fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)],
                    [(0, 1), (1, 2), (2, 3), (3, 0)])


FLOP_RAYS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (1, 1, -1)]


def flop_sigma1() -> Fan:
    """Cones {a,b,c} with a in {1,4}, b in {2,5}, c in {3,6}."""
    cones = [(a, b, c) for a in (0, 3) for b in (1, 4) for c in (2, 5)]
    return make_fan(3, FLOP_RAYS, cones)


def flop_sigma2() -> Fan:
    """The 3-subsets containing none of {1,4}, {2,5}, {1,2}, {3,5,6}, {3,4,6}."""
    forbidden = [{0, 3}, {1, 4}, {0, 1}, {2, 4, 5}, {2, 3, 5}]
    cones = [c for c in combinations(range(6), 3)
             if not any(f <= set(c) for f in forbidden)]
    return make_fan(3, FLOP_RAYS, cones)


FIXTURES: Dict[str, Callable[[], Fan]] = {
    "p1": lambda: projective_space(1),
    "p2": lambda: projective_space(2),
    "p3": lambda: projective_space(3),
    "p4": lambda: projective_space(4),
    "p1xp1": p1xp1,
    "f1": lambda: hirzebruch(1),
    "f2": lambda: hirzebruch(2),
    "f3": lambda: hirzebruch(3),
    "flop1": flop_sigma1,
    "flop2": flop_sigma2,
}


def fixture(name: str) -> Fan:
    return FIXTURES[name]()


def ample_phi(name: str) -> Tuple[int, ...]:
    """A strictly convex PL vector for each fixture (the anticanonical one where ample)."""
    special = {
        "f2": (1, 1, 2, 1),
        "f3": (1, 1, 3, 1),
        "flop1": (1, 1, 2, 1, 1, 1),
        "flop2": (2, 1, 1, 2, 2, 1),
    }
    if name in special:
        return special[name]
    return tuple([1] * fixture(name).n)


def names() -> List[str]:
    return list(FIXTURES)


def sample_strictly_convex(fan: Fan, base: Sequence, rng: random.Random,
                           tries: int = 200) -> Tuple[Fraction, ...]:
    """A random strictly convex rational PL vector near ``base``.

    ``base + linear + perturbation`` with perturbations in ``{-1/2, 0, 1/2, 1}``,
    rejection-sampled.  Values stay small so that the powers of ``u`` do too.
    """
    for _ in range(tries):
        m = [rng.randint(-1, 1) for _ in range(fan.dim)]
        vals = []
        for b, v in zip(base, fan.rays):
            eps = Fraction(rng.randint(-1, 2), 2)
            vals.append(Fraction(b) + sum(a * x for a, x in zip(m, v)) + eps)
        if is_strictly_convex(PLFunction(fan, tuple(vals))):
            return tuple(vals)
    raise RuntimeError("no strictly convex sample found")
