"""Exact global minimum of x'Mx over [0,1]^n by enumerating faces.

Each of the 3^n faces fixes some coordinates at 0, some at 1 and leaves the
rest free. On a face the restricted quadratic is stationary where
M_FF x_F = -M_FO e. A box minimizer lies in the relative interior of a face
with vanishing restricted gradient; when that face's Hessian is singular the
minimum value is also attained on a subface, so skipping singular faces
loses nothing.

The search shares only the integer solver with the complementarity
enumeration in ``lcp``, so the two can check each other.
"""
from fractions import Fraction
from itertools import product
from typing import Iterator, List, Tuple

from . import linalg
from .core import RationalVector, SymmetricIntMatrix, quadratic_form
from .errors import DimensionLimitError
from .lcp import MinimizationResult, kkt_witness

DEFAULT_MAX_N = 10

FIXED_0, FIXED_1, FREE = 0, 1, 2


def faces(n: int) -> Iterator[Tuple[int, ...]]:
    return product((FIXED_0, FIXED_1, FREE), repeat=n)


def face_candidate(M: SymmetricIntMatrix, face: Tuple[int, ...]):
    """Stationary point in the open face, or None.

    Vertices (no free coordinates) are always returned.
    """
    free = [i for i, t in enumerate(face) if t == FREE]
    ones = [i for i, t in enumerate(face) if t == FIXED_1]
    x: List[Fraction] = [Fraction(int(t == FIXED_1)) for t in face]
    if not free:
        return tuple(x)
    H = [[M[i, j] for j in free] for i in free]
    rhs = [-sum(M[i, j] for j in ones) for i in free]
    det, sol = linalg.bareiss_solve(H, rhs)
    if det == 0 or any(not 0 < t < 1 for t in sol):
        return None
    for i, t in zip(free, sol):
        x[i] = t
    return tuple(x)


def face_enumerate_min(M: SymmetricIntMatrix, max_n: int = DEFAULT_MAX_N) -> MinimizationResult:
    if M.n > max_n:
        raise DimensionLimitError(f"n={M.n} exceeds oracle limit {max_n}")
    best = None
    for face in faces(M.n):
        x = face_candidate(M, face)
        if x is None:
            continue
        key = (quadratic_form(M, x), x)
        if best is None or key < best:
            best = key
    gamma, argmin = best
    return MinimizationResult(gamma, argmin, kkt_witness(M, argmin), "oracle")


def is_copositive(M: SymmetricIntMatrix, max_n: int = DEFAULT_MAX_N) -> bool:
    return face_enumerate_min(M, max_n).gamma == 0
