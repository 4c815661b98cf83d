"""Symmetric integer matrices, exact quadratic forms and encoding length.

Rational scalars are ``fractions.Fraction`` (always in lowest terms with a
positive denominator); rational vectors are tuples of them.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatchError

RationalVector = Tuple[Fraction, ...]


def as_vector(values: Iterable) -> RationalVector:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class SymmetricIntMatrix:
    """Symmetric n x n integer matrix stored as its upper triangle.

    ``upper`` holds m_ij for i <= j, row by row: m_11, m_12, ..., m_1n,
    m_22, ..., m_nn.
    """

    n: int
    upper: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")
        if len(self.upper) != self.n * (self.n + 1) // 2:
            raise DimensionMismatchError(
                f"expected {self.n * (self.n + 1) // 2} upper entries, got {len(self.upper)}")
        object.__setattr__(self, "upper", tuple(int(v) for v in self.upper))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SymmetricIntMatrix":
        """Build from a full square array; asymmetric input is rejected."""
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatchError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i + 1}, {j + 1})")
        return cls(n, tuple(rows[i][j] for i in range(n) for j in range(i, n)))

    def _offset(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return i * self.n - i * (i - 1) // 2 + (j - i)

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(ij)
        return self.upper[self._offset(i, j)]

    def rows(self) -> List[List[int]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def matvec(self, x: Sequence) -> List:
        if len(x) != self.n:
            raise DimensionMismatchError(f"vector of length {len(x)} for n={self.n}")
        return [sum(self[i, j] * x[j] for j in range(self.n)) for i in range(self.n)]

    def is_zero(self) -> bool:
        return not any(self.upper)

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows())


@dataclass(frozen=True)
class EncodingStats:
    L: int
    d: int
    n: int


def encode_bits(m: int) -> int:
    """Bits to store one signed entry: ceil(log2(|m|+1)) magnitude bits plus a sign bit.

    ``(|m|).bit_length()`` equals ceil(log2(|m|+1)) exactly, so 0 costs 1 bit.
    """
    return abs(m).bit_length() + 1


def encoding_length(M: SymmetricIntMatrix) -> EncodingStats:
    return EncodingStats(
        L=sum(encode_bits(m) for m in M.upper),
        d=max(abs(m) for m in M.upper),
        n=M.n,
    )


def quadratic_form(M: SymmetricIntMatrix, x: Sequence) -> Fraction:
    if len(x) != M.n:
        raise DimensionMismatchError(f"vector of length {len(x)} for n={M.n}")
    x = [Fraction(v) for v in x]
    total = Fraction(0)
    for i in range(M.n):
        if x[i] == 0:
            continue
        # diagonal once, off-diagonal twice
        acc = M[i, i] * x[i]
        for j in range(i + 1, M.n):
            acc += 2 * M[i, j] * x[j]
        total += x[i] * acc
    return total


def gamma_threshold(L: int) -> Fraction:
    """The gap value -2^(-2L+1): a non-copositive matrix has box minimum at most this."""
    if L < 1:
        raise ValueError("L must be positive")
    return Fraction(-1, 2 ** (2 * L - 1))
