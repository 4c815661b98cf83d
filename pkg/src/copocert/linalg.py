"""Exact linear algebra over the integers and rationals.

Integer systems go through fraction-free (Bareiss) elimination, which keeps
every intermediate entry an integer bounded by a minor of the input. Rational
work (kernels, rank, consistent singular systems) uses ``Fraction`` row
reduction with the first nonzero pivot in column order.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

IntMatrix = List[List[int]]


def bareiss_solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> Tuple[int, Optional[List[Fraction]]]:
    """Solve the square integer system A x = b.

    Returns ``(det A, x)``. When A is singular the determinant is 0 and x is
    None. Row pivoting takes the first nonzero entry below the diagonal.
    """
    n = len(A)
    if n == 0:
        return 1, []
    rows = [list(A[i]) + [b[i]] for i in range(n)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0, None
        pivot = rows[k][k]
        pk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n + 1):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (ri[j] * pivot - pk[j] * lead) // prev
            ri[k] = 0
        prev = pivot
    det = rows[n - 1][n - 1]
    if det == 0:
        return 0, None
    x: List[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(rows[i][n])
        for j in range(i + 1, n):
            if rows[i][j]:
                acc -= rows[i][j] * x[j]
        x[i] = acc / rows[i][i]
    return sign * det, x


def determinant(A: Sequence[Sequence[int]]) -> int:
    return bareiss_solve(A, [0] * len(A))[0]


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over the rationals.

    Only the first ``ncols`` columns are eligible as pivots (default: all),
    which lets callers reduce an augmented matrix without pivoting on the
    right-hand side.
    """
    R = [[Fraction(v) for v in row] for row in rows]
    if not R:
        return R, []
    m = len(R)
    width = len(R[0])
    if ncols is None:
        ncols = width
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        pv = R[r][c]
        if pv != 1:
            R[r] = [v / pv for v in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def solve_consistent(A: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """Any solution of A x = b with non-pivot variables pinned to 0.

    Returns None if the system is inconsistent. Works for rectangular and
    singular A.
    """
    m = len(A)
    ncols = len(A[0]) if m else 0
    R, pivots = rref([list(A[i]) + [b[i]] for i in range(m)], ncols)
    for i in range(len(pivots), m):
        if R[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = R[i][ncols]
    return x


def nullspace(A: Sequence[Sequence], ncols: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of the right kernel of A (one vector per free column)."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if not A:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(v)
    return basis


def columns(A: Sequence[Sequence], idx: Sequence[int]) -> List[list]:
    """Submatrix of A made of the listed columns, in the given order."""
    return [[row[j] for j in idx] for row in A]
