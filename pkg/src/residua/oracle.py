"""Brute-force reference implementations, used to cross-check the main code.

Nothing here imports from the polyhedron, ideal or residue modules.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Sequence

from residua.lattice import ZERO, DomainError, Term, make_primitive


def cofactor_determinant(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in (list(x) for x in rows[1:])]
        total += (-1) ** j * rows[0][j] * cofactor_determinant(minor)
    return total


def hull2d_oracle(points: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Primitive inward normals of the bounded edges of conv(points) + R^2_+."""
    if any(len(p) != 2 for p in points):
        raise DomainError("hull2d_oracle works in dimension 2 only")
    pts = sorted(set(tuple(p) for p in points))
    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2:
            (x1, y1), (x2, y2) = lower[-2], lower[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                lower.pop()
            else:
                break
        lower.append(p)
    normals = []
    for (x1, y1), (x2, y2) in zip(lower, lower[1:]):
        dx, dy = x2 - x1, y2 - y1
        if dy < 0:
            normals.append(make_primitive((-dy, dx)))
    return sorted(normals)


class CaratheodoryOracle:
    """Membership in conv(points) + R^n_+ by enumerating basic solutions.

    ``q`` is a member iff ``(q, 1)`` is a nonnegative combination of some
    ``n + 1`` linearly independent columns among ``(p, 1)`` for the points and
    ``(e_i, 0)`` for the coordinate rays. Each basis is inverted once through
    its integer adjugate.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        self.points = [tuple(p) for p in points]
        n = self.n = len(self.points[0])
        cols = [p + (1,) for p in self.points]
        cols += [tuple(1 if j == i else 0 for j in range(n)) + (0,) for i in range(n)]
        self.bases = []
        for chosen in combinations(cols, n + 1):
            mat = [[c[r] for c in chosen] for r in range(n + 1)]
            det = cofactor_determinant(mat)
            if det == 0:
                continue
            adj = [[(-1) ** (i + j) * cofactor_determinant(
                        [row[:i] + row[i + 1:] for k, row in enumerate(mat) if k != j])
                    for j in range(n + 1)] for i in range(n + 1)]
            self.bases.append((1 if det > 0 else -1, adj))

    def __contains__(self, q: Sequence[int]) -> bool:
        rhs = tuple(q) + (1,)
        for sign, adj in self.bases:
            if all(sign * sum(a * b for a, b in zip(row, rhs)) >= 0 for row in adj):
                return True
        return False


def caratheodory_membership(points: Sequence[Sequence[int]], q: Sequence[int]) -> bool:
    return q in CaratheodoryOracle(points)


def closure_oracle(points: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Minimal lattice points of conv(points) + R^n_+ by scanning the bounding box."""
    oracle = CaratheodoryOracle(points)
    n = oracle.n
    box = [max(p[i] for p in oracle.points) for i in range(n)]
    inside = [q for q in product(*(range(b + 1) for b in box)) if q in oracle]
    return sorted(q for q in inside
                  if not any(r != q and all(x <= y for x, y in zip(r, q)) for r in inside))


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_add(f: dict, g: dict, sign: int = 1) -> dict:
    out = dict(f)
    for e, c in g.items():
        out[e] = out.get(e, 0) + sign * c
    return {e: c for e, c in out.items() if c}


def _poly_det(m: list[list[dict]]) -> dict:
    n = len(m)
    if n == 1:
        return m[0][0]
    total: dict = {}
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total = _poly_add(total, _poly_mul(m[0][j], _poly_det(minor)), (-1) ** j)
    return total


def jacobian_symbolic_oracle(exponents: Sequence[Sequence[int]]):
    """Differentiate each monomial, expand the determinant, return a Term or ZERO."""
    n = len(exponents)
    if n == 0 or n > 3 or any(len(a) != n for a in exponents):
        raise DomainError("jacobian oracle needs n <= 3 exponent vectors of length n")
    matrix = []
    for a in exponents:
        row = []
        for j in range(n):
            if a[j] == 0:
                row.append({})
            else:
                e = tuple(x - (1 if k == j else 0) for k, x in enumerate(a))
                row.append({e: a[j]})
        matrix.append(row)
    det = _poly_det(matrix)
    if not det:
        return ZERO
    if len(det) != 1:
        raise AssertionError(f"determinant of monomial Jacobian is not a term: {det}")
    (e, c), = det.items()
    return Term(c, e)


def staircase_oracle(gens: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
    """Monomials outside the ideal, scanning the box bounded by the largest exponents."""
    n = len(gens[0])
    box = [max(g[i] for g in gens) for i in range(n)]
    return {q for q in product(*(range(b + 1) for b in box))
            if not any(all(x <= y for x, y in zip(g, q)) for g in gens)}


def socle_oracle(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    outside = staircase_oracle(gens)
    n = len(gens[0])
    return sorted(q for q in outside
                  if all(tuple(x + (k == i) for k, x in enumerate(q)) not in outside
                         for i in range(n)))
