"""Short rational certificates of non-copositivity.

Pipeline: take an exact box minimizer x with x'Mx = gamma < 0, scale it by
2^(2L-1) so the value drops below -2^(2L-1), then round every coordinate up
onto a grid of spacing 1/(4dn^2) (``fixed``) or 2^-l with 2^l >= 4dn^2
(``dyadic``). The rounding error is small enough that the value stays
negative, and the grid keeps the bit count under 17*L^1.5 (resp. 10*L^1.5).
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple

from .core import RationalVector, SymmetricIntMatrix, as_vector, encoding_length, quadratic_form
from .errors import (
    CertificateFailure,
    CopositiveInputError,
    DimensionMismatchError,
    DomainError,
    NotRepresentableError,
)
from .lcp import MinimizationResult, solve_box_qp_lcp
from .oracle import face_enumerate_min

FIXED = "fixed"
DYADIC = "dyadic"
SCHEMES = (FIXED, DYADIC)

# squared forms of the 17*L^1.5 and 10*L^1.5 bounds
BOUND_FACTOR_SQ = {FIXED: 289, DYADIC: 100}


@dataclass(frozen=True)
class CertificateReport:
    y: RationalVector
    value: Fraction
    scheme: str
    L: int
    d: int
    n: int
    measured_bits: int
    bound_bits_ok: bool
    spacing_denominator: int
    gamma: Fraction
    argmin: RationalVector
    method: str


class Verification(NamedTuple):
    valid: bool
    value: Fraction
    reason: str


def scale_optimal(xbar: Sequence, L: int) -> RationalVector:
    x = as_vector(xbar)
    if any(not 0 <= t <= 1 for t in x):
        raise DomainError("xbar must lie in [0,1]^n")
    scale = 2 ** (2 * L - 1)
    return tuple(scale * t for t in x)


def _check_round_args(xstar, d):
    if d < 1:
        raise ValueError("d must be at least 1; a zero matrix has no certificate")
    if any(t < 0 for t in xstar):
        raise DomainError("xstar must be non-negative")


def _round_up(xstar: Sequence, denom: int) -> RationalVector:
    return tuple(Fraction(math.ceil(Fraction(t) * denom), denom) for t in xstar)


def round_certificate(xstar: Sequence, d: int, n: int) -> RationalVector:
    """Round each coordinate up to the next multiple of 1/(4dn^2)."""
    _check_round_args(xstar, d)
    return _round_up(xstar, 4 * d * n * n)


def dyadic_exponent(d: int, n: int) -> int:
    """Smallest l with 2^l >= 4dn^2."""
    return (4 * d * n * n - 1).bit_length()


def dyadic_certificate(xstar: Sequence, d: int, n: int) -> Tuple[RationalVector, int]:
    _check_round_args(xstar, d)
    l = dyadic_exponent(d, n)
    return _round_up(xstar, 2 ** l), l


def _bits(z: int) -> int:
    # unsigned field width: ceil(log2(z+1)), at least one bit
    return max(1, z.bit_length())


def measured_complexity(y: Sequence, scheme: str, spacing_denominator: int) -> int:
    """Bits to write ``y`` on its grid.

    fixed: per coordinate, integer part + fractional numerator + the
    denominator (counted per coordinate, as in the bound being checked).
    dyadic: per coordinate, integer part + l fraction bits, where
    spacing_denominator = 2^l.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    D = spacing_denominator
    if scheme == DYADIC and (D < 1 or D & (D - 1)):
        raise ValueError("dyadic spacing denominator must be a power of two")
    total = 0
    for t in y:
        t = Fraction(t)
        if t < 0:
            raise DomainError("certificate coordinates must be non-negative")
        scaled = t * D
        if scaled.denominator != 1:
            raise NotRepresentableError(f"{t} is not a multiple of 1/{D}")
        whole, num = divmod(scaled.numerator, D)
        if scheme == FIXED:
            total += _bits(whole) + _bits(num) + _bits(D)
        else:
            total += _bits(whole) + (D.bit_length() - 1)
    return total


def bound_ok(bits: int, L: int, scheme: str) -> bool:
    return bits * bits <= BOUND_FACTOR_SQ[scheme] * L ** 3


def minimize(M: SymmetricIntMatrix, method: str = "lcp", max_n: Optional[int] = None) -> MinimizationResult:
    if method == "lcp":
        return solve_box_qp_lcp(M) if max_n is None else solve_box_qp_lcp(M, max_n)
    if method == "oracle":
        return face_enumerate_min(M) if max_n is None else face_enumerate_min(M, max_n)
    raise ValueError(f"unknown method {method!r}")


def certify_noncopositive(M: SymmetricIntMatrix, scheme: str = FIXED, method: str = "lcp",
                          result: Optional[MinimizationResult] = None) -> CertificateReport:
    """Build and audit a certificate y >= 0 with y'My < 0.

    ``result`` may carry a precomputed box minimization to avoid solving
    again.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if M.is_zero():
        raise CopositiveInputError("the zero matrix is copositive")
    if result is None:
        result = minimize(M, method)
    if result.gamma >= 0:
        raise CopositiveInputError("matrix is copositive; no certificate exists")
    stats = encoding_length(M)
    xstar = scale_optimal(result.argmin, stats.L)
    if scheme == FIXED:
        y = round_certificate(xstar, stats.d, M.n)
        D = 4 * stats.d * M.n ** 2
    else:
        y, l = dyadic_certificate(xstar, stats.d, M.n)
        D = 2 ** l
    value = quadratic_form(M, y)
    if value >= 0:
        raise CertificateFailure(f"rounded certificate has value {value} >= 0")
    bits = measured_complexity(y, scheme, D)
    return CertificateReport(
        y=y, value=value, scheme=scheme, L=stats.L, d=stats.d, n=M.n,
        measured_bits=bits, bound_bits_ok=bound_ok(bits, stats.L, scheme),
        spacing_denominator=D, gamma=result.gamma, argmin=result.argmin,
        method=result.method,
    )


def verify_certificate(M: SymmetricIntMatrix, y: Sequence) -> Verification:
    if len(y) != M.n:
        raise DimensionMismatchError(f"certificate of length {len(y)} for n={M.n}")
    y = as_vector(y)
    value = quadratic_form(M, y)
    negative = [i + 1 for i, t in enumerate(y) if t < 0]
    if negative:
        return Verification(False, value, f"negative coordinate(s) at {negative}")
    if value >= 0:
        return Verification(False, value, "quadratic form is not negative")
    return Verification(True, value, "ok")
