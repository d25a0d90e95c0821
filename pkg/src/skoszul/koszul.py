"""Classical Koszul differentials, twist diagonals and the graded solver.

The Koszul matrix of a sequence (y_1, ..., y_n) at level l is written in
the lexicographically ordered bases of l-subsets (rows) and (l-1)-subsets
(columns) of {1, ..., n}; the row of a subset {i_1 < ... < i_l} carries
(-1)^(r-1) y_{i_r} in the column of the subset with i_r removed.  With
this convention the matrices compose by right multiplication on row
vectors and the product of two consecutive levels vanishes.

solve_right solves X * M = B exactly over the polynomial ring when every
entry of M is homogeneous.  It assigns weights to rows and columns so
that deg M[i][j] = w_row(i) - w_col(j), splits B into the induced graded
components, and solves one finite linear system over the coefficient
field per component.  That decomposition is exact, so a solution within
the candidate degrees exists whenever any solution exists.
"""

from __future__ import annotations

import itertools
from collections import deque

from .endo import Endo
from .errors import LevelOutOfRange, NoSolution, NonHomogeneous, ShapeMismatch
from .linalg import solve_linear
from .poly import Poly, monomials_of_degree
from .skew import SkewMatrix, SkewPoly


def subsets(n: int, l: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered l-subsets of {1, ..., n}."""
    return list(itertools.combinations(range(1, n + 1), l))


def koszul_matrix(sequence: list[Poly], l: int) -> list[list[Poly]]:
    """Matrix of the level-l Koszul differential of the sequence.

    Shape C(n, l) x C(n, l-1); valid for 1 <= l <= n.
    """
    n = len(sequence)
    if not 1 <= l <= n:
        raise LevelOutOfRange(f"koszul level {l} outside 1..{n}")
    field = sequence[0].field
    nvars = sequence[0].nvars
    col_index = {T: k for k, T in enumerate(subsets(n, l - 1))}
    rows = []
    for T in subsets(n, l):
        row = [Poly.zero(field, nvars) for _ in col_index]
        for r, i in enumerate(T):
            rest = T[:r] + T[r + 1:]
            entry = sequence[i - 1]
            row[col_index[rest]] = entry if r % 2 == 0 else -entry
        rows.append(row)
    return rows


def poly_matrix_mul(a: list[list[Poly]], b: list[list[Poly]]) -> list[list[Poly]]:
    if a and b and len(a[0]) != len(b):
        raise ShapeMismatch("incompatible polynomial matrices")
    if not a or not b:
        return []
    width = len(b[0])
    out = []
    for row in a:
        acc = [Poly.zero(row[0].field, row[0].nvars) for _ in range(width)]
        for k, f in enumerate(row):
            if f.is_zero():
                continue
            for j in range(width):
                g = b[k][j]
                if not g.is_zero():
                    acc[j] = acc[j] + f * g
        out.append(acc)
    return out


def poly_matrix_is_zero(a: list[list[Poly]]) -> bool:
    return all(f.is_zero() for row in a for f in row)


def twist_diagonal(endo: Endo, multipliers: list[Poly], l: int) -> SkewMatrix:
    """The diagonal coupling matrix D_l: entries T - prod(s_i, i in subset)
    over the lex-ordered l-subsets of {1, ..., n}."""
    n = len(multipliers)
    if not 0 <= l <= n:
        raise LevelOutOfRange(f"twist level {l} outside 0..{n}")
    size = len(subsets(n, l))
    mat = SkewMatrix.zeros(endo, size, size)
    for k, T in enumerate(subsets(n, l)):
        prod = Poly.one(endo.field, endo.nvars)
        for i in T:
            prod = prod * multipliers[i - 1]
        mat.entries[k][k] = SkewPoly.theta(endo) - SkewPoly.from_poly(endo, prod)
    return mat


# -- graded solver ------------------------------------------------------------------


def _grade_matrix(matrix: list[list[Poly]], ncols: int):
    """Assign row/column weights with deg M[i][j] = w_row - w_col.

    Returns (row_weight, col_weight, components) where components is a
    list of (rows, cols) index lists, one per connected block of the
    bipartite support graph.  Raises NonHomogeneous when no consistent
    weight assignment exists.
    """
    m = len(matrix)
    adj_row: list[list[tuple[int, int]]] = [[] for _ in range(m)]  # row -> [(col, deg)]
    adj_col: list[list[tuple[int, int]]] = [[] for _ in range(ncols)]
    for i, row in enumerate(matrix):
        for j, f in enumerate(row):
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise NonHomogeneous(f"matrix entry ({i},{j}) is not homogeneous")
            d = f.total_degree()
            adj_row[i].append((j, d))
            adj_col[j].append((i, d))
    row_w: dict[int, int] = {}
    col_w: dict[int, int] = {}
    components = []
    for start in range(m):
        if start in row_w or not adj_row[start]:
            continue
        rows_in, cols_in = [], []
        row_w[start] = 0
        queue = deque([("r", start)])
        while queue:
            kind, idx = queue.popleft()
            if kind == "r":
                rows_in.append(idx)
                for j, d in adj_row[idx]:
                    want = row_w[idx] - d
                    if j in col_w:
                        if col_w[j] != want:
                            raise NonHomogeneous(
                                "matrix support admits no consistent grading")
                    else:
                        col_w[j] = want
                        queue.append(("c", j))
            else:
                cols_in.append(idx)
                for i, d in adj_col[idx]:
                    want = col_w[idx] + d
                    if i in row_w:
                        if row_w[i] != want:
                            raise NonHomogeneous(
                                "matrix support admits no consistent grading")
                    else:
                        row_w[i] = want
                        queue.append(("r", i))
        components.append((sorted(rows_in), sorted(cols_in)))
    return row_w, col_w, components


def solve_right(matrix: list[list[Poly]], target: list[Poly]) -> list[Poly]:
    """Solve X * M = B exactly over S, one graded component at a time.

    ``matrix`` is a list of rows over S (possibly empty), ``target`` a row
    vector of length matching the column count.  Every nonzero entry of M
    must be homogeneous.  Raises NoSolution when the system is infeasible
    and NonHomogeneous when degree bookkeeping is impossible.
    """
    m = len(matrix)
    ncols = len(target)
    for row in matrix:
        if len(row) != ncols:
            raise ShapeMismatch("matrix width does not match target length")
    if ncols == 0:
        if m == 0:
            return []
        field = matrix[0][0].field
        nvars = matrix[0][0].nvars
        return [Poly.zero(field, nvars)] * m
    field = target[0].field
    nvars = target[0].nvars
    if m == 0:
        if any(not b.is_zero() for b in target):
            raise NoSolution("zero-row system with nonzero target")
        return []

    row_w, col_w, components = _grade_matrix(matrix, ncols)
    # columns outside every component have an identically zero matrix column
    covered_cols = set(col_w)
    for j, b in enumerate(target):
        if j not in covered_cols and not b.is_zero():
            raise NoSolution(f"target column {j} lies outside the column space")

    solution: list[dict] = [{} for _ in range(m)]
    for rows_in, cols_in in components:
        degrees = sorted({col_w[j] + d
                          for j in cols_in for d in target[j].homogeneous_degrees()})
        for big_d in degrees:
            unknowns: list[tuple[int, tuple[int, ...]]] = []
            for i in rows_in:
                pd = big_d - row_w[i]
                if pd >= 0:
                    unknowns.extend((i, nu) for nu in monomials_of_degree(nvars, pd))
            unk_index = {key: k for k, key in enumerate(unknowns)}
            equations: list[tuple[int, tuple[int, ...]]] = []
            for j in cols_in:
                ed = big_d - col_w[j]
                if ed >= 0:
                    equations.extend((j, mu) for mu in monomials_of_degree(nvars, ed))
            eq_index = {key: k for k, key in enumerate(equations)}
            zero = field.zero
            rows_dense = [[zero] * len(unknowns) for _ in equations]
            for i in rows_in:
                pd = big_d - row_w[i]
                if pd < 0:
                    continue
                for j in cols_in:
                    entry = matrix[i][j]
                    if entry.is_zero():
                        continue
                    for nu in monomials_of_degree(nvars, pd):
                        col_k = unk_index[(i, nu)]
                        for gexps, gcoeff in entry.terms.items():
                            mu = tuple(map(int.__add__, nu, gexps))
                            row_k = eq_index[(j, mu)]
                            rows_dense[row_k][col_k] = field.add(
                                rows_dense[row_k][col_k], gcoeff)
            rhs = [target[j].coefficient(mu) for j, mu in equations]
            found = solve_linear(field, rows_dense, rhs)
            if found is None:
                raise NoSolution(f"no solution in graded component of degree {big_d}")
            for (i, nu), value in zip(unknowns, found):
                if value:
                    solution[i][nu] = field.add(solution[i].get(nu, zero), value)

    return [Poly(field, nvars, {e: c for e, c in terms.items() if c})
            for terms in solution]
