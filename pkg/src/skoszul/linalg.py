"""Exact dense linear algebra over the coefficient fields.

Over F_p the elimination runs on int64 numpy arrays reduced mod p after
every pivot; entries stay below p^2 < 2^62, so there is no overflow.
Over Q the same algorithm runs on Fractions in plain lists.  Systems in
this package are small (hundreds of unknowns), so clarity wins over
asymptotics.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fields import FieldSpec


def _rref_mod_p(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (rref, pivot column list)."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if nz.size:
            a[nz] = (a[nz] - np.outer(col[nz], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _rref_fractions(matrix: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        scale = a[r][c]
        a[r] = [x / scale for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def solve_linear(field: FieldSpec, rows: list[list], rhs: list) -> list | None:
    """One exact solution x of A x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0:
        return []
    if field.p:
        aug = np.zeros((m, n + 1), dtype=np.int64)
        for i, row in enumerate(rows):
            aug[i, :n] = row
        aug[:, n] = rhs
        red, pivots = _rref_mod_p(aug, field.p)
        if n in pivots:
            return None
        x = [0] * n
        for r, c in enumerate(pivots):
            x[c] = int(red[r, n])
        return x
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = _rref_fractions(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return x


def nullspace(field: FieldSpec, rows: list[list], ncols: int) -> list[list]:
    """Basis of {x : A x = 0}, one vector per non-pivot column.

    The basis is deterministic: free variables are taken in column order
    and each basis vector sets exactly one free variable to 1.  ``rows``
    may be a list of rows or a 2-d numpy array.
    """
    if len(rows) == 0:
        one = field.one
        zero = field.zero
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    if field.p:
        red, pivots = _rref_mod_p(np.array(rows, dtype=np.int64), field.p)
        p = field.p
        free = [c for c in range(ncols) if c not in set(pivots)]
        basis = []
        for f in free:
            vec = [0] * ncols
            vec[f] = 1
            for r, c in enumerate(pivots):
                vec[c] = (-int(red[r, f])) % p
            basis.append(vec)
        return basis
    red, pivots = _rref_fractions(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -red[r][f]
        basis.append(vec)
    return basis
