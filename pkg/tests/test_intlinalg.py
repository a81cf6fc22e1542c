import sympy as sp
from hypothesis import given, strategies as st

from toricqh.intlinalg import (det, elementary_divisors, hermite_normal_form,
                               integer_left_kernel, inverse, rank, vec_mat)

small = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(m):
    assert det(m) == sp.Matrix(m).det()


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_inverse_is_inverse(m):
    if det(m) == 0:
        return
    inv = inverse(m)
    n = len(m)
    for i in range(n):
        assert vec_mat(m[i], inv) == [int(i == j) for j in range(n)]


@given(st.integers(2, 6).flatmap(lambda r: st.integers(1, 3).flatmap(lambda c: matrices(r, c))))
def test_left_kernel_is_saturated_basis(a):
    ker = integer_left_kernel(a)
    for k in ker:
        assert vec_mat(k, a) == [0] * len(a[0])
    assert len(ker) == len(a) - sp.Matrix(a).rank()
    if ker:
        # a Z-basis of a kernel is saturated: all elementary divisors are 1
        assert all(x == 1 for x in elementary_divisors(ker))
        assert hermite_normal_form(ker) == ker


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_rank_and_hnf(a):
    assert rank(a) == sp.Matrix(a).rank()
    h = hermite_normal_form(a)
    assert len(h) == rank(a)
    # same row lattice: each side expressible in the other (check via rank of stacked matrix
    # and equal absolute gcd of maximal minors)
    if h:
        assert sp.Matrix(h + a).rank() == len(h)
        assert elementary_divisors(h) == elementary_divisors(a)


def test_elementary_divisors_known():
    assert elementary_divisors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
