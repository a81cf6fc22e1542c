from itertools import product

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from oracles import brute_force_primitive_collections
from toricqh.errors import (NegativeComponent, NonIntegralDecomposition, NonPrimitiveRay,
                            NonRegularCone, NotAFan, NotARelation, NotComplete)
from toricqh.fixtures import FIXTURES, fixture, projective_space
from toricqh.intlinalg import elementary_divisors
from toricqh.lattice_fan import (locate_cone, make_fan, minimal_cone_decomposition,
                                 nonnegative_relations, primitive_collections, relation_lattice,
                                 virtual_dimension)

P2_RAYS = [(1, 0), (0, 1), (-1, -1)]


def one_based(c):
    return tuple(i + 1 for i in c)


def test_p2_and_p1_are_valid():
    fan = make_fan(2, P2_RAYS, [(0, 1), (1, 2), (2, 0)])
    assert fan.n == 3 and len(fan.max_cones) == 3
    p1 = make_fan(1, [(1,), (-1,)], [(0,), (1,)])
    assert p1.max_cones == ((0,), (1,))


def test_missing_cone_is_incomplete():
    with pytest.raises(NotComplete):
        make_fan(2, P2_RAYS, [(0, 1), (1, 2)])


def test_validation_errors():
    with pytest.raises(NonPrimitiveRay):
        make_fan(2, [(2, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(NonRegularCone):
        make_fan(2, [(1, 0), (1, 2), (-1, -1)], [(0, 1), (1, 2), (2, 0)])
    # facet shared by three cones
    with pytest.raises(NotAFan):
        make_fan(2, [(1, 0), (0, 1), (-1, -1), (1, 1)], [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)])
    # two cones on the same side of their common facet
    with pytest.raises(NotAFan, match="overlap"):
        make_fan(2, [(1, 0), (0, 1), (1, 1)], [(0, 1), (1, 2), (2, 0)])


def test_double_cover_is_rejected():
    # every facet pairs up correctly, but the cones wind twice around the origin
    rays = [(1, 0), (-3, 1), (-1, 0), (-2, -1), (-3, -2), (2, 1), (-3, -1)]
    cones = [(i, (i + 1) % 7) for i in range(7)]
    with pytest.raises(NotAFan, match="generic point"):
        make_fan(2, rays, cones)


def test_primitive_collection_examples():
    for d in (1, 2, 3, 4):
        pcs = primitive_collections(projective_space(d))
        assert [p.indices for p in pcs] == [tuple(range(d + 1))]
    assert [one_based(p.indices) for p in primitive_collections(fixture("f1"))] == [(1, 3), (2, 4)]
    assert [one_based(p.indices) for p in primitive_collections(fixture("flop1"))] == [
        (1, 4), (2, 5), (3, 6)]
    assert [one_based(p.indices) for p in primitive_collections(fixture("flop2"))] == [
        (1, 2), (1, 4), (2, 5), (3, 4, 6), (3, 5, 6)]


@pytest.mark.parametrize("name", list(FIXTURES))
def test_primitive_collections_match_brute_force(name):
    fan = fixture(name)
    pcs = primitive_collections(fan)
    assert [p.indices for p in pcs] == brute_force_primitive_collections(fan)
    for p in pcs:
        assert len(p.indices) >= 2
        assert fan.ray_sum(p.indices) == fan.ray_sum(p.sigma_p_indices, p.coeffs)
        assert all(c >= 1 for c in p.coeffs)
        assert fan.is_face(p.sigma_p_indices)


def test_minimal_cone_decomposition_examples():
    p2 = fixture("p2")
    assert minimal_cone_decomposition(p2, (0, 0)) == ((), ())
    f1 = fixture("f1")
    assert minimal_cone_decomposition(f1, (0, 1)) == ((1,), (1,))
    # v1 + v2 = v3 + v6 in the second flop fan; in the first one {3,6} is primitive
    assert minimal_cone_decomposition(fixture("flop2"), (1, 1, 0)) == ((2, 5), (1, 1))
    assert minimal_cone_decomposition(fixture("flop1"), (1, 1, 0)) == ((0, 1), (1, 1))


@pytest.mark.parametrize("name", list(FIXTURES))
@given(v=st.lists(st.integers(-7, 7), min_size=4, max_size=4))
def test_decomposition_reconstructs(name, v):
    fan = fixture(name)
    v = tuple(v[:fan.dim])
    idx, cs = minimal_cone_decomposition(fan, v)
    assert fan.ray_sum(idx, list(cs)) == v
    assert fan.is_face(idx)


def test_locate_cone_examples():
    p2 = fixture("p2")
    assert one_based(p2.max_cones[locate_cone(p2, (5, 7))]) == (1, 2)
    # (-1,-1) = v3 lies in {1,3} and {2,3}; the smaller cone index wins
    ci = locate_cone(p2, (-1, -1))
    assert ci == min(i for i, c in enumerate(p2.max_cones) if 2 in c)
    f1 = fixture("f1")
    # (-2,1) = 2*v3 - v2 ... solved per cone: only {3,4} has non-negative coordinates
    assert one_based(f1.max_cones[locate_cone(f1, (-2, 1))]) == (3, 4)


def test_relation_lattice_examples():
    for d in (1, 2, 3, 4):
        assert relation_lattice(projective_space(d)).basis == (tuple([1] * (d + 1)),)
    assert relation_lattice(fixture("p1xp1")).basis == ((1, 1, 0, 0), (0, 0, 1, 1))
    f1 = relation_lattice(fixture("f1")).basis
    # lattice equality with the reference basis {(1,-1,1,0),(0,1,0,1)}
    ref = sp.Matrix([[1, -1, 1, 0], [0, 1, 0, 1]])
    ours = sp.Matrix(f1)
    assert ours.rank() == 2
    assert sp.Matrix.vstack(ours, ref).rank() == 2
    assert abs(sp.Matrix([[1, 0], [0, 1]]).det()) == 1
    assert elementary_divisors([list(r) for r in f1]) == [1, 1]


@pytest.mark.parametrize("name", list(FIXTURES))
def test_relation_lattice_contains_small_relations(name):
    fan = fixture(name)
    basis = relation_lattice(fan).basis
    assert len(basis) == fan.n - fan.dim
    assert elementary_divisors([list(b) for b in basis]) == [1] * len(basis)
    for b in basis:
        assert fan.is_relation(b)
    span = sp.Matrix(basis)
    r = 3 if fan.n <= 5 else 2
    for lam in product(range(-r, r + 1), repeat=fan.n):
        if fan.is_relation(lam):
            sol = span.T.gauss_jordan_solve(sp.Matrix(lam))[0]
            assert all(x.is_integer for x in sol)


def test_virtual_dimension():
    assert virtual_dimension(fixture("p2"), (1, 1, 1)) == 5
    assert virtual_dimension(fixture("f1"), (0, 0, 0, 0)) == 2
    assert virtual_dimension(fixture("p1xp1"), (1, 1, 0, 0)) == 4
    with pytest.raises(NotARelation):
        virtual_dimension(fixture("p2"), (1, 0, 0))
    with pytest.raises(NegativeComponent):
        virtual_dimension(fixture("f1"), (1, -1, 1, 0))


def test_nonnegative_relations_small():
    assert nonnegative_relations(fixture("p2"), 2) == [(0, 0, 0), (1, 1, 1), (2, 2, 2)]


def test_nonintegral_decomposition_is_an_assertion():
    assert issubclass(NonIntegralDecomposition, AssertionError)
