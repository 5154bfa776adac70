"""Dense Gauss-Jordan elimination over exact rationals or floats.

Used by the multivector inverse: either a solution of M x = rhs or, when
M is singular, a nonzero kernel vector certifying that no solution can
be unique (for a left-multiplication matrix, that no inverse exists).
"""

from __future__ import annotations

from fractions import Fraction


def solve_or_witness(matrix, rhs):
    """Solve M x = rhs by Gauss-Jordan elimination with partial pivoting.

    Returns ``("solution", x)`` when M is nonsingular, otherwise
    ``("singular", y)`` with y a nonzero vector satisfying M y = 0.
    Entries may be Fraction (exact zero tests) or float (pivots below a
    scale-relative threshold are treated as zero).
    """
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]

    exact = not any(isinstance(v, float) for row in matrix for v in row)
    if exact:
        def negligible(value):
            return value == 0
    else:
        scale = max((abs(v) for row in matrix for v in row), default=1.0)
        tol = 1e-12 * max(scale, 1.0)

        def negligible(value):
            return abs(value) <= tol

    pivot_cols: list[int] = []
    row = 0
    for col in range(n):
        pivot = max(range(row, n), key=lambda r: abs(aug[r][col]), default=None)
        if pivot is None or negligible(aug[pivot][col]):
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        lead = aug[row][col]
        aug[row] = [v / lead for v in aug[row]]
        for other in range(n):
            if other == row:
                continue
            factor = aug[other][col]
            if factor == 0:
                continue
            aug[other] = [v - factor * p for v, p in zip(aug[other], aug[row])]
        pivot_cols.append(col)
        row += 1
        if row == n:
            break

    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0

    if len(pivot_cols) == n:
        x = [zero] * n
        for i, col in enumerate(pivot_cols):
            x[col] = aug[i][n]
        return "solution", x

    free = next(c for c in range(n) if c not in pivot_cols)
    y = [zero] * n
    y[free] = one
    for i, col in enumerate(pivot_cols):
        y[col] = -aug[i][free]
    return "singular", y
