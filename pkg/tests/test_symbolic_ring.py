import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from oracles import ours_as_sympy_set, same_expr_sets, sympy_reduced_gb, to_sympy, field_to_sympy
from toricqh.symbolic_ring import (GREVLEX, INFINITE, ONE, ZERO, FieldElement, MonomialOrder,
                                   NovikovScalar, PolyRing, Polynomial, buchberger, eliminate,
                                   graded_dimensions, ideal_member, ideal_quotient, initial_ideal,
                                   intersect, limit_at_zero, normal_form, quotient_dimension,
                                   s_polynomial, saturate, standard_monomials)

small_q = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def field_elements(draw):
    num = {draw(st.integers(-3, 4)): draw(small_q) for _ in range(draw(st.integers(0, 3)))}
    den = {draw(st.integers(0, 3)): draw(small_q) for _ in range(draw(st.integers(1, 2)))}
    den = {e: c for e, c in den.items() if c}
    if not den:
        den = {0: Fraction(1)}
    return FieldElement.from_poly(num) / FieldElement.from_poly(den)


@given(field_elements(), field_elements(), field_elements())
def test_field_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO
    if not a.is_zero():
        assert a * a.inverse() == ONE
    assert hash(a * b) == hash(b * a)


@given(field_elements(), field_elements())
def test_field_matches_sympy(a, b):
    assert sp.simplify(field_to_sympy(a * b) - field_to_sympy(a) * field_to_sympy(b)) == 0
    assert sp.simplify(field_to_sympy(a + b) - field_to_sympy(a) - field_to_sympy(b)) == 0


def test_novikov_scalar():
    assert NovikovScalar.from_exp(Fraction(3, 2), 2).uexp == 3
    with pytest.raises(ValueError):
        NovikovScalar.from_exp(Fraction(1, 3), 2)
    s = NovikovScalar(Fraction(2), 1) * NovikovScalar(Fraction(1, 2), -3)
    assert s.to_field() == FieldElement.monomial(1, -2)
    assert str(FieldElement.monomial(Fraction(-2, 3), 4)) == "-2/3*u^4"


def test_weight_order_rejects_negative_weights():
    with pytest.raises(ValueError):
        MonomialOrder.weight([1, -1])


R3 = PolyRing(("x", "y", "z"), 1)


@st.composite
def polys(draw, ring=R3, max_terms=4, max_deg=3, with_u=True):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        m = tuple(draw(st.integers(0, max_deg)) for _ in range(ring.nvars))
        c = draw(small_q)
        if c:
            e = draw(st.integers(0, 2)) if with_u else 0
            terms[m] = FieldElement.monomial(c, e)
    return Polynomial(ring, terms)


@st.composite
def binomial_systems(draw, ring=R3, with_u=True, max_deg=3):
    out = []
    for _ in range(draw(st.integers(1, 3))):
        a = tuple(draw(st.integers(0, max_deg)) for _ in range(ring.nvars))
        b = tuple(draw(st.integers(0, 2)) for _ in range(ring.nvars))
        if a == b:
            continue
        e = draw(st.integers(0, 3)) if with_u else 0
        out.append(ring.monomial(a) - ring.monomial(b, FieldElement.monomial(1, e)))
    if not out:
        out.append(ring.gen(0) - ring.one())
    return out


@given(binomial_systems())
def test_gb_matches_sympy_grevlex(gens):
    gb = buchberger(gens, GREVLEX)
    ref, syms, dom = sympy_reduced_gb(gens, "grevlex")
    assert same_expr_sets(ours_as_sympy_set(gb, syms, dom), ref)


@given(st.lists(polys(with_u=False, max_terms=3, max_deg=2), min_size=1, max_size=3))
def test_gb_matches_sympy_lex(gens):
    gens = [g for g in gens if not g.is_zero()] or [R3.gen(0)]
    gb = buchberger(gens, MonomialOrder.lex())
    ref, syms, dom = sympy_reduced_gb(gens, "lex")
    assert same_expr_sets(ours_as_sympy_set(gb, syms, dom), ref)


@given(binomial_systems())
def test_binomial_ideals_have_binomial_bases(gens):
    gb = buchberger(gens, GREVLEX)
    assert all(len(g.terms) <= 2 for g in gb.gens)


@given(st.lists(polys(max_terms=3, max_deg=2), min_size=1, max_size=3))
def test_buchberger_criterion(gens):
    gens = [g for g in gens if not g.is_zero()] or [R3.gen(0)]
    for order in (GREVLEX, MonomialOrder.weight([2, 0, 1])):
        gb = buchberger(gens, order)
        for i, f in enumerate(gb.gens):
            for g in gb.gens[i + 1:]:
                assert normal_form(s_polynomial(f, g, order), gb).is_zero()
        for g in gens:
            assert ideal_member(g, gb)


@given(st.lists(polys(max_terms=3, max_deg=2), min_size=1, max_size=3), st.randoms())
def test_reduced_basis_is_unique(gens, rnd):
    gens = [g for g in gens if not g.is_zero()] or [R3.gen(0)]
    gb = buchberger(gens, GREVLEX)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    extra = shuffled + [gens[0] * R3.gen(1) + gens[-1]]
    assert buchberger(shuffled, GREVLEX) == gb
    assert buchberger(extra, GREVLEX) == buchberger(gens + [gens[0] * R3.gen(1) + gens[-1]],
                                                    GREVLEX)


@given(binomial_systems(), polys())
def test_normal_form_idempotent_and_congruent(gens, p):
    gb = buchberger(gens, GREVLEX)
    nf = normal_form(p, gb)
    assert normal_form(nf, gb) == nf
    assert ideal_member(p - nf, gb)


def test_quotient_dimensions():
    r = PolyRing(("x",))
    x = r.gen(0)
    gb = buchberger([x ** 2 - 1, x ** 3 - x])
    assert gb.to_strs() == ["x^2 - 1"]
    assert quotient_dimension(gb) == 2
    assert quotient_dimension(buchberger([r.zero() + x - x + x * 0 + x ** 0 - 1 + x])) == 1
    r2 = PolyRing(("x", "y"))
    x, y = r2.gens()
    assert quotient_dimension(buchberger([x * y])) == INFINITE
    gb = buchberger([x ** 2, y ** 2])
    assert standard_monomials(gb) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert graded_dimensions(gb) == [1, 2, 1]


def test_ideal_operations():
    r = PolyRing(("x", "y"))
    x, y = r.gens()
    assert ideal_quotient([x ** 2], x).to_strs() == ["x"]
    assert intersect([x], [y]).to_strs() == ["x*y"]
    assert saturate([x * y, x ** 2], x).is_unit_ideal()
    assert eliminate([x - y ** 2, y - 1], ["x"]).to_strs() == ["x - 1"]


@settings(max_examples=25)
@given(binomial_systems(with_u=False, max_deg=2), binomial_systems(with_u=False, max_deg=2))
def test_intersection_matches_sympy(a, b):
    ours = intersect(a, b)
    ea = [to_sympy(g)[0] for g in a]
    eb = [to_sympy(g)[0] for g in b]
    syms = sp.symbols("x y z")
    dom = sp.QQ
    ga = sp.groebner(ea, *syms, order="grevlex", domain=dom)
    gbb = sp.groebner(eb, *syms, order="grevlex", domain=dom)
    for g in ours.gens:
        e = to_sympy(g)[0]
        assert ga.contains(e) and gbb.contains(e)
    # every product lies in the intersection
    for f in a:
        for g in b:
            assert ideal_member(f * g, ours)


def test_initial_ideal_and_limit():
    r = PolyRing(("z1", "z2", "z3"), 1)
    z1, z2, z3 = r.gens()
    u3 = FieldElement.monomial(1, 3)
    init = initial_ideal([z1 * z2 * z3 - u3], [1, 1, 1], r)
    assert init.to_strs() == ["z1*z2*z3"]
    lim = limit_at_zero([z1 - z3, z2 - z3, z1 * z2 * z3 - u3], GREVLEX, r)
    assert lim.to_strs() == ["z1 - z3", "z2 - z3", "z3^3"]
    # a point escaping to infinity as u -> 0 is dropped by the flat limit
    r1 = PolyRing(("x",), 1)
    x = r1.gen(0)
    u = FieldElement.monomial(1, 1)
    lim = limit_at_zero([x * (x * u - 1)], GREVLEX, r1)
    assert lim.to_strs() == ["x"]
