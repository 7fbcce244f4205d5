"""Exact integer primitives: exponent vectors, single terms, primitive
normals and fraction-free determinants.

Exponent vectors and integer vectors are plain tuples of Python ints, so all
arithmetic is arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

ExponentVector = tuple[int, ...]
IntegerVector = tuple[int, ...]


class DimensionError(ValueError):
    """Vectors or matrices of incompatible shape."""


class DomainError(ValueError):
    """An argument outside the domain of an operation."""


def exponent_vector(coords: Iterable[int], n: int | None = None) -> ExponentVector:
    """Validate and freeze ``coords`` as an exponent vector of length ``n``."""
    v = tuple(int(c) for c in coords)
    if n is not None and len(v) != n:
        raise DimensionError(f"expected {n} coordinates, got {len(v)}")
    if any(c < 0 for c in v):
        raise DomainError(f"negative exponent in {v}")
    return v


def dot(v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != len(w):
        raise DimensionError(f"length mismatch: {len(v)} vs {len(w)}")
    return sum(a * b for a, b in zip(v, w))


def add(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    if len(v) != len(w):
        raise DimensionError(f"length mismatch: {len(v)} vs {len(w)}")
    return tuple(a + b for a, b in zip(v, w))


def sub(v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    if len(v) != len(w):
        raise DimensionError(f"length mismatch: {len(v)} vs {len(w)}")
    return tuple(a - b for a, b in zip(v, w))


def scale(k: int, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(k * a for a in v)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True if z^a divides z^b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def unit_vector(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


def make_primitive(v: Sequence[int]) -> IntegerVector:
    """Divide ``v`` by the gcd of its entries, keeping signs."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g == 0:
        raise DomainError("cannot normalize the zero vector")
    return tuple(a // g for a in v)


def _check_square(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"matrix is not square ({n} rows, row of length {len(r)})")
    return n


def exact_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    n = _check_square(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (fraction-free row reduction)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [x * p - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def normal_vector(rows: Sequence[Sequence[int]]) -> IntegerVector:
    """Generalized cross product of ``n - 1`` integer rows of length ``n``.

    The result is orthogonal to every row and is zero exactly when the rows
    are linearly dependent.
    """
    k = len(rows)
    n = k + 1
    for r in rows:
        if len(r) != n:
            raise DimensionError(f"expected rows of length {n}")
    out = []
    for i in range(n):
        minor = [[r[j] for j in range(n) if j != i] for r in rows]
        d = exact_determinant(minor)
        out.append(d if (i + k) % 2 == 0 else -d)
    return tuple(out)


class _Zero:
    """The zero polynomial."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    is_zero = True

    def __repr__(self) -> str:
        return "ZERO"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class Term:
    """A single term ``coeff * z^exponent`` with nonzero integer coefficient."""

    coeff: int
    exponent: ExponentVector

    is_zero = False

    def __post_init__(self):
        if self.coeff == 0:
            raise DomainError("use ZERO for the zero polynomial")
        if any(e < 0 for e in self.exponent):
            raise DomainError(f"negative exponent in {self.exponent}")
