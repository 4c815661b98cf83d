"""Complementary solutions of the box-QP optimality system.

The system in non-negative variables s = (x, y, u, v), each block of length n::

    [ -M  -I   I   0 ] s = [ 0 ]
    [  I   0   0   I ]     [ e ]

encodes u = Mx + y and v = e - x. A solution is complementary when
x_i*u_i = 0 and y_i*v_i = 0 for every i; complementary solutions are exactly
the KKT points of min x'Mx over [0,1]^n, and every one of them satisfies
x'Mx = -e'y.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from . import linalg
from .core import EncodingStats, RationalVector, SymmetricIntMatrix, as_vector, quadratic_form
from .errors import (
    ComplementarityError,
    DimensionLimitError,
    DomainError,
    InfeasibleError,
    NoBasisError,
)

DEFAULT_MAX_N = 12


@dataclass(frozen=True)
class LcpSystem:
    n: int
    A: Tuple[Tuple[int, ...], ...]
    b: Tuple[int, ...]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.A)


@dataclass(frozen=True)
class ComplementarySolution:
    s: RationalVector
    n: int
    basis: Optional[Tuple[int, ...]] = None
    basis_det: Optional[int] = None

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(j for j, v in enumerate(self.s) if v != 0)

    @property
    def x(self) -> RationalVector:
        return self.s[: self.n]

    @property
    def y(self) -> RationalVector:
        return self.s[self.n: 2 * self.n]

    @property
    def u(self) -> RationalVector:
        return self.s[2 * self.n: 3 * self.n]

    @property
    def v(self) -> RationalVector:
        return self.s[3 * self.n:]


@dataclass(frozen=True)
class MinimizationResult:
    gamma: Fraction
    argmin: RationalVector
    witness: ComplementarySolution
    method: str


@dataclass(frozen=True)
class PatternSolve:
    """Outcome of solving one complementary column pattern."""

    index: int
    columns: Tuple[int, ...]
    det: int
    solution: Optional[RationalVector]


def build_system(M: SymmetricIntMatrix) -> LcpSystem:
    n = M.n
    A = []
    for i in range(n):
        row = [0] * (4 * n)
        for j in range(n):
            row[j] = -M[i, j]
        row[n + i] = -1
        row[2 * n + i] = 1
        A.append(tuple(row))
    for i in range(n):
        row = [0] * (4 * n)
        row[i] = 1
        row[3 * n + i] = 1
        A.append(tuple(row))
    return LcpSystem(n, tuple(A), tuple([0] * n + [1] * n))


def residual_ok(sys: LcpSystem, s: Sequence) -> bool:
    return all(
        sum(a * v for a, v in zip(row, s) if a) == bi
        for row, bi in zip(sys.A, sys.b)
    )


def is_complementary(s: Sequence, n: int) -> bool:
    return all(s[i] * s[2 * n + i] == 0 and s[n + i] * s[3 * n + i] == 0 for i in range(n))


def pattern_columns(n: int, index: int) -> Tuple[int, ...]:
    """Columns chosen by pattern ``index``.

    Bit 2i selects x_i (set) or u_i (clear); bit 2i+1 selects y_i or v_i.
    """
    cols = []
    for i in range(n):
        cols.append(i if index >> (2 * i) & 1 else 2 * n + i)
        cols.append(n + i if index >> (2 * i + 1) & 1 else 3 * n + i)
    return tuple(sorted(cols))


def _check_limit(n: int, max_n: int):
    if n > max_n:
        raise DimensionLimitError(f"n={n} exceeds enumeration limit {max_n}")


def complementary_patterns(M: SymmetricIntMatrix, sys: Optional[LcpSystem] = None,
                           max_n: int = DEFAULT_MAX_N) -> Iterator[PatternSolve]:
    """Solve every complementary pattern in index order.

    Nonsingular patterns are solved by fraction-free elimination and carry
    their determinant. Singular ones fall back to rational row reduction with
    free variables pinned to 0 (``det == 0``). ``solution`` is None when the
    pattern is inconsistent or its solution has a negative entry.
    """
    n = M.n
    _check_limit(n, max_n)
    sys = sys or build_system(M)
    width = 4 * n
    for index in range(4 ** n):
        cols = pattern_columns(n, index)
        # u_i and y_i together leave row n+i (x_i + v_i = 1) with no column
        if any(not (index >> (2 * i)) & 1 and (index >> (2 * i + 1)) & 1 for i in range(n)):
            yield PatternSolve(index, cols, 0, None)
            continue
        B = linalg.columns(sys.A, cols)
        det, sol = linalg.bareiss_solve(B, sys.b)
        if det == 0:
            sol = linalg.solve_consistent(B, sys.b)
        if sol is None or any(v < 0 for v in sol):
            yield PatternSolve(index, cols, det, None)
            continue
        s = [Fraction(0)] * width
        for c, v in zip(cols, sol):
            s[c] = v
        yield PatternSolve(index, cols, det, tuple(s))


def enumerate_complementary_solutions(M: SymmetricIntMatrix,
                                      max_n: int = DEFAULT_MAX_N) -> List[ComplementarySolution]:
    """All distinct complementary solutions reachable from a column pattern.

    Ordered by the first pattern producing each solution; when a solution is
    produced by both a singular and a nonsingular pattern, the nonsingular
    basis is kept.
    """
    sys = build_system(M)
    found = {}
    for ps in complementary_patterns(M, sys, max_n):
        if ps.solution is None:
            continue
        prev = found.get(ps.solution)
        if prev is None or (prev.basis is None and ps.det != 0):
            found[ps.solution] = ComplementarySolution(
                s=ps.solution,
                n=M.n,
                basis=ps.columns if ps.det else None,
                basis_det=ps.det or None,
            )
    return list(found.values())


def solve_box_qp_lcp(M: SymmetricIntMatrix, max_n: int = DEFAULT_MAX_N) -> MinimizationResult:
    """Exact min of x'Mx over [0,1]^n as the best complementary solution."""
    best = None
    for sol in enumerate_complementary_solutions(M, max_n):
        key = (quadratic_form(M, sol.x), sol.x)
        if best is None or key < best[0]:
            best = (key, sol)
    (gamma, argmin), witness = best
    return MinimizationResult(gamma, argmin, witness, "lcp-enumeration")


def kkt_witness(M: SymmetricIntMatrix, xbar: Sequence) -> ComplementarySolution:
    """Assemble (x, y, u, v) from a box point using the dual formula.

    y_i = max(0, -(Mx)_i), u = Mx + y, v = e - x. Raises
    ComplementarityError if the result is not complementary, which means
    ``xbar`` is not a KKT point of the box minimization.
    """
    x = as_vector(xbar)
    if len(x) != M.n:
        raise DomainError(f"vector of length {len(x)} for n={M.n}")
    if any(not 0 <= xi <= 1 for xi in x):
        raise DomainError("xbar must lie in [0,1]^n")
    Mx = M.matvec(x)
    y = tuple(max(Fraction(0), -t) for t in Mx)
    u = tuple(t + yi for t, yi in zip(Mx, y))
    v = tuple(1 - xi for xi in x)
    s = x + y + u + v
    if not residual_ok(build_system(M), s):
        raise AssertionError("witness violates A s = b")
    if not is_complementary(s, M.n):
        raise ComplementarityError("xbar is not a KKT point (complementarity fails)")
    return ComplementarySolution(s=s, n=M.n)


def validate_solution(sys: LcpSystem, s: Sequence):
    if len(s) != 4 * sys.n:
        raise InfeasibleError(f"solution has length {len(s)}, expected {4 * sys.n}")
    if any(v < 0 for v in s) or not residual_ok(sys, s):
        raise InfeasibleError("solution is not feasible for A s = b, s >= 0")
    if not is_complementary(s, sys.n):
        raise ComplementarityError("solution is not complementary")


def support_independent(sys: LcpSystem, support) -> bool:
    cols = sorted(support)
    if not cols:
        return True
    return linalg.rank(linalg.columns(sys.A, cols)) == len(cols)


def purification_path(sys: LcpSystem, sol: ComplementarySolution) -> List[ComplementarySolution]:
    """Successive solutions visited while reducing ``sol`` to a basic one.

    The first element is the input, the last is a basic feasible solution.
    Each step moves along a kernel direction of the support columns until a
    coordinate reaches zero, so the support shrinks strictly every step.
    Moving inside the support keeps the solution complementary.
    """
    validate_solution(sys, sol.s)
    path = [sol]
    s = list(sol.s)
    while True:
        support = sorted(j for j, v in enumerate(s) if v != 0)
        kernel = linalg.nullspace(linalg.columns(sys.A, support), len(support)) if support else []
        if not kernel:
            return path
        d = kernel[0]
        if not any(t < 0 for t in d):
            d = [-t for t in d]
        step = min(s[j] / -t for j, t in zip(support, d) if t < 0)
        for j, t in zip(support, d):
            s[j] += step * t
        path.append(ComplementarySolution(s=tuple(s), n=sys.n))


def purify_to_bfs(sys: LcpSystem, sol: ComplementarySolution) -> ComplementarySolution:
    return purification_path(sys, sol)[-1]


def check_basis_determinant_bound(sol: ComplementarySolution, stats: EncodingStats) -> bool:
    """True iff |det B| <= 2^(2L-1) for the basis recorded on ``sol``."""
    if sol.basis_det is None:
        raise NoBasisError("solution carries no basis determinant")
    return abs(sol.basis_det) <= 2 ** (2 * stats.L - 1)
