"""Brute-force Hochschild cohomology, independent of the package's linear algebra.

Algebras are dicts ``{(i, j): {k: c}}`` over Fractions; bimodules give
``left[a][m] = {m': c}`` and ``right[m][a] = {m': c}`` for basis indices.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def rank(rows, p=0):
    """Row rank by plain elimination (over Q, or GF(p) when p > 0)."""
    rows = [list(r) for r in rows]
    if p:
        rows = [[x % p for x in r] for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        if p:
            inv = pow(int(rows[r][c]), p - 2, p)
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                if p:
                    t = rows[i][c] * inv % p
                    rows[i] = [(x - t * y) % p for x, y in zip(rows[i], rows[r])]
                else:
                    t = Fraction(rows[i][c]) / rows[r][c]
                    rows[i] = [x - t * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def hochschild_matrix(a, m, mult, left, right, n):
    """Matrix (list of rows) of d: Hom(A^n, M) -> Hom(A^{n+1}, M), standard signs.

    Column index (out, x) with f = e_out (x) x^*; row index (out', y).
    """
    xs = list(itertools.product(range(a), repeat=n))
    ys = list(itertools.product(range(a), repeat=n + 1))
    col_index = {(o, x): i for i, (o, x) in enumerate(itertools.product(range(m), xs))}
    row_index = {(o, y): i for i, (o, y) in enumerate(itertools.product(range(m), ys))}
    mat = [[Fraction(0)] * len(col_index) for _ in row_index]

    def add(o, y, col, c):
        mat[row_index[(o, y)]][col] += c

    for (o, x), col in col_index.items():
        # (df)(y) = y0 f(y1..yn) + sum (-1)^i f(.. y_{i-1} y_i ..) + (-1)^{n+1} f(y0..y_{n-1}) yn
        for y in ys:
            if tuple(y[1:]) == x:
                for o2, c in left[y[0]][o].items():
                    add(o2, y, col, c)
            for i in range(1, n + 1):
                for k, c in mult.get((y[i - 1], y[i]), {}).items():
                    if tuple(y[:i - 1]) + (k,) + tuple(y[i + 1:]) == x:
                        add(o, y, col, (-1) ** i * c)
            if tuple(y[:n]) == x:
                for o2, c in right[o][y[n]].items():
                    add(o2, y, col, (-1) ** (n + 1) * c)
    return mat


def hochschild_dims(a, m, mult, left, right, top, p=0):
    ranks = {}
    for n in range(top + 1):
        mat = hochschild_matrix(a, m, mult, left, right, n)
        ranks[n] = rank(mat, p) if mat else 0
    dims = []
    for n in range(top + 1):
        dims.append(m * a ** n - ranks[n] - (ranks[n - 1] if n > 0 else 0))
    return dims


def dual_numbers():
    one = Fraction(1)
    return {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}}


def regular(a, mult):
    left = [[mult.get((i, j), {}) for j in range(a)] for i in range(a)]
    right = [[mult.get((j, i), {}) for i in range(a)] for j in range(a)]
    return left, right


def twisted_dual_numbers():
    """The bimodule Ag for g: x -> -x: left a.(m g) = am g, right (m g).a = m g(a) g."""
    mult = dual_numbers()
    left, _ = regular(2, mult)
    sign = [Fraction(1), Fraction(-1)]
    right = [[{k: c * sign[i] for k, c in mult.get((j, i), {}).items()} for i in range(2)] for j in range(2)]
    return mult, left, right
