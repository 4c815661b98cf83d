"""Instance generators: the two-dimensional adversarial family, zero
padding, and seeded random matrices for property tests."""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .core import SymmetricIntMatrix, encoding_length

KINDS = ("symmetric", "nonnegative", "psd")


def remark_b_matrix(k: int) -> SymmetricIntMatrix:
    """[[2^(2k+2), -2^(k+2)], [-2^(k+2), 3]].

    On the line (x, 1) the form equals 4(2^k x - 1)^2 - 1, so certificates
    must have a coordinate ratio within (1/2^(k+1), 3/2^(k+1)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return SymmetricIntMatrix(2, (2 ** (2 * k + 2), -(2 ** (k + 2)), 3))


def embed(M: SymmetricIntMatrix, n: int) -> SymmetricIntMatrix:
    """Pad M with zeros to an n x n matrix (M in the top-left corner)."""
    if n < M.n:
        raise ValueError(f"cannot embed a {M.n}x{M.n} matrix into dimension {n}")
    rows = [[M[i, j] if i < M.n and j < M.n else 0 for j in range(n)] for i in range(n)]
    return SymmetricIntMatrix.from_rows(rows)


def certificate_interval(k: int) -> Tuple[Fraction, Fraction]:
    return Fraction(1, 2 ** (k + 1)), Fraction(3, 2 ** (k + 1))


def certificate_interval_check(k: int, y: Sequence) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    y1, y2 = Fraction(y[0]), Fraction(y[1])
    if y2 <= 0:
        return False
    lo, hi = certificate_interval(k)
    return lo < y1 / y2 < hi


def paper_stated_length(k: int, n: int = 2) -> int:
    """Encoding length as printed for the family: 3k+10 (+ n(n+1)/2 - 3 padded).

    Strict per-entry counting gives one bit more; see ``encoding_length``.
    """
    return 3 * k + 10 + n * (n + 1) // 2 - 3


@dataclass(frozen=True)
class AdversarialInstance:
    k: int
    n: int
    M: SymmetricIntMatrix
    expected_L_strict: int
    paper_L: int
    certificate_interval: Tuple[Fraction, Fraction]


def adversarial_instance(k: int, n: int = 2) -> AdversarialInstance:
    M = embed(remark_b_matrix(k), n)
    return AdversarialInstance(
        k=k, n=n, M=M,
        expected_L_strict=encoding_length(M).L,
        paper_L=paper_stated_length(k, n),
        certificate_interval=certificate_interval(k),
    )


def random_instance(kind: str, n: int, entry_bound: int, rng_seed: int) -> SymmetricIntMatrix:
    """Seeded random symmetric matrix.

    symmetric: entries uniform in [-bound, bound]; nonnegative: in [0, bound];
    psd: G'G with G an n x n matrix of entries in [-bound, bound].
    """
    if n < 1 or entry_bound < 1:
        raise ValueError("n and entry_bound must be positive")
    rng = random.Random(f"{kind}:{n}:{entry_bound}:{rng_seed}")
    if kind == "symmetric":
        return SymmetricIntMatrix(n, tuple(rng.randint(-entry_bound, entry_bound)
                                           for _ in range(n * (n + 1) // 2)))
    if kind == "nonnegative":
        return SymmetricIntMatrix(n, tuple(rng.randint(0, entry_bound)
                                           for _ in range(n * (n + 1) // 2)))
    if kind == "psd":
        G = [[rng.randint(-entry_bound, entry_bound) for _ in range(n)] for _ in range(n)]
        rows = [[sum(G[r][i] * G[r][j] for r in range(n)) for j in range(n)] for i in range(n)]
        return SymmetricIntMatrix.from_rows(rows)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
