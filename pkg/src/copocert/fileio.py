"""Text formats for matrices, vectors and reports.

Matrix file: first line n, then either n rows of n integers (must be
symmetric) or the n(n+1)/2 upper-triangular entries row by row. Blank lines
and ``#`` comments are ignored. Vector file: one rational ``p/q`` (or
integer) per line.
"""
import json
from fractions import Fraction
from typing import Iterable, List

from .core import RationalVector, SymmetricIntMatrix
from .errors import ParseError


def _tokens(text: str) -> List[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.extend(line.split())
    return out


def parse_matrix(text: str) -> SymmetricIntMatrix:
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty matrix file")
    try:
        vals = [int(t) for t in toks]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    n, entries = vals[0], vals[1:]
    if n < 1:
        raise ParseError(f"dimension must be positive, got {n}")
    if len(entries) == n * (n + 1) // 2:
        return SymmetricIntMatrix(n, tuple(entries))
    if len(entries) == n * n:
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        try:
            return SymmetricIntMatrix.from_rows(rows)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"expected {n * n} or {n * (n + 1) // 2} entries for n={n}, got {len(entries)}")


def serialize_matrix(M: SymmetricIntMatrix, comment: str = "") -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(str(M.n))
    lines.extend(" ".join(str(v) for v in row) for row in M.rows())
    return "\n".join(lines) + "\n"


def read_matrix(path: str) -> SymmetricIntMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def fraction_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(text: str) -> RationalVector:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(Fraction(line))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {line!r}") from None
    if not out:
        raise ParseError("empty vector file")
    return tuple(out)


def serialize_vector(y: Iterable) -> str:
    return "".join(fraction_str(t) + "\n" for t in y)


def read_vector(path: str) -> RationalVector:
    with open(path) as fh:
        return parse_vector(fh.read())


def render_report(report: dict, fmt: str = "plain") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    lines = []
    for key, val in report.items():
        if isinstance(val, list):
            val = " ".join(str(v) for v in val)
        lines.append(f"{key}: {val}")
    return "\n".join(lines) + "\n"
