"""Small exact integer/rational matrix routines (lists of lists, Python ints)."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Matrix = List[List[int]]


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    """Rational inverse by Gauss-Jordan elimination."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def unimodular_inverse(m: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def vec_mat(v: Sequence, m: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def _row_echelon_with_transform(a: Matrix):
    """Unimodular row reduction of ``a``; returns (echelon, transform, rank).

    ``transform @ a == echelon`` and ``transform`` has determinant +-1.
    """
    rows, cols = len(a), len(a[0]) if a else 0
    e = [list(r) for r in a]
    t = [[int(i == j) for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if e[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(e[i][c]), i))
            e[r], e[piv] = e[piv], e[r]
            t[r], t[piv] = t[piv], t[r]
            done = True
            for i in range(r + 1, rows):
                if e[i][c]:
                    q = e[i][c] // e[r][c]
                    e[i] = [x - q * y for x, y in zip(e[i], e[r])]
                    t[i] = [x - q * y for x, y in zip(t[i], t[r])]
                    if e[i][c]:
                        done = False
            if done:
                break
        if any(e[i][c] for i in range(r, rows)):
            r += 1
    return e, t, r


def hermite_normal_form(a: Matrix) -> Matrix:
    """Row-style Hermite normal form (zero rows dropped).

    Pivots are positive, entries above a pivot lie in ``[0, pivot)``.
    """
    e, _, rank = _row_echelon_with_transform(a)
    e = e[:rank]
    pivcols = []
    for i, row in enumerate(e):
        c = next(j for j, x in enumerate(row) if x)
        if row[c] < 0:
            e[i] = row = [-x for x in row]
        pivcols.append(c)
    for i, c in enumerate(pivcols):
        for k in range(i):
            q = e[k][c] // e[i][c]
            if q:
                e[k] = [x - q * y for x, y in zip(e[k], e[i])]
    return e


def integer_left_kernel(a: Matrix) -> Matrix:
    """Z-basis (in Hermite normal form) of ``{x in Z^rows : x @ a = 0}``."""
    rows = len(a)
    e, t, rank = _row_echelon_with_transform(a)
    basis = [t[i] for i in range(rank, rows)]
    if not basis:
        return []
    return hermite_normal_form(basis)


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return _row_echelon_with_transform(a)[2]


def elementary_divisors(a: Matrix) -> List[int]:
    """Smith invariants of an integer matrix, via gcds of k-minors is too slow;
    uses repeated HNF on the matrix and its transpose until diagonal."""
    m = [list(r) for r in a if any(r)]
    while True:
        m = hermite_normal_form(m)
        mt = [list(col) for col in zip(*m)] if m else []
        mt = hermite_normal_form(mt)
        m2 = [list(col) for col in zip(*mt)] if mt else []
        diag = all(m2[i][j] == 0 for i in range(len(m2)) for j in range(len(m2[0])) if i != j)
        m = m2
        if diag:
            break
    d = [abs(m[i][i]) for i in range(min(len(m), len(m[0]) if m else 0))]
    # enforce divisibility chain
    from math import gcd
    changed = True
    while changed:
        changed = False
        for i in range(len(d) - 1):
            g = gcd(d[i], d[i + 1])
            if g != d[i]:
                l = d[i] * d[i + 1] // g if g else 0
                d[i], d[i + 1] = g, l
                changed = True
    return d
