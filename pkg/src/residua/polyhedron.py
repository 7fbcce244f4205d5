"""Newton polyhedra ``conv(S) + R^n_+`` with an exact H-representation.

Facets are found by brute force over candidate normals: pick ``k >= 1``
points and ``n - k`` coordinate directions, take the integer vector
orthogonal to the spanned affine subspace, and keep it when it is
nonnegative and its face really is ``(n-1)``-dimensional. The search is
exponential in ``n`` but exact; it targets ``n <= 6`` and a few dozen points.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice, product
from typing import Iterable, Iterator, Sequence

from residua.lattice import (
    DimensionError,
    DomainError,
    ExponentVector,
    IntegerVector,
    divides,
    dot,
    exponent_vector,
    make_primitive,
    normal_vector,
    rank,
    scale,
    sub,
    unit_vector,
)


@dataclass(frozen=True)
class Facet:
    normal: IntegerVector
    offset: int
    compact: bool
    touching: tuple[int, ...]  # indices into the polyhedron's source points


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    points: tuple[ExponentVector, ...]
    facets: tuple[Facet, ...]

    @property
    def compact_facets(self) -> tuple[Facet, ...]:
        return tuple(f for f in self.facets if f.compact)

    def hrep(self) -> tuple[tuple[IntegerVector, int], ...]:
        """The (normal, offset) pairs; two polyhedra are equal iff these agree."""
        return tuple((f.normal, f.offset) for f in self.facets)


def _minimal_points(points: Iterable[ExponentVector]) -> list[ExponentVector]:
    pts = sorted(set(points), key=lambda p: (sum(p), p))
    out: list[ExponentVector] = []
    for p in pts:
        if not any(divides(q, p) for q in out):
            out.append(p)
    return sorted(out)


def _candidate_choices(m: int, n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for k in range(1, min(m, n) + 1):
        for units in combinations(range(n), n - k):
            for pts in combinations(range(m), k):
                yield pts, units


def _candidate_normals(pts: Sequence[ExponentVector], n: int,
                       choices: Iterable[tuple[tuple[int, ...], tuple[int, ...]]]) -> set[IntegerVector]:
    found = set()
    for idx, units in choices:
        base = pts[idx[0]]
        rows = [sub(pts[i], base) for i in idx[1:]]
        rows.extend(unit_vector(u, n) for u in units)
        v = normal_vector(rows)
        if all(x >= 0 for x in v):
            pass
        elif all(x <= 0 for x in v):
            v = tuple(-x for x in v)
        else:
            continue
        if any(v):
            found.add(make_primitive(v))
    return found


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def _normals_worker(args):
    pts, n, choices = args
    return _candidate_normals(pts, n, choices)


def _is_facet(normal: IntegerVector, touching: Sequence[ExponentVector], n: int) -> bool:
    base = touching[0]
    rows = [sub(p, base) for p in touching[1:]]
    rows.extend(unit_vector(i, n) for i in range(n) if normal[i] == 0)
    return rank(rows) == n - 1


def build_newton_polyhedron(points: Sequence[Sequence[int]], n: int,
                            workers: int = 1) -> NewtonPolyhedron:
    """Newton polyhedron of ``points`` with its complete, sorted facet list.

    ``workers > 1`` spreads the candidate enumeration over processes; the
    result does not depend on it.
    """
    if n < 1:
        raise DomainError("dimension must be at least 1")
    if not points:
        raise DomainError("empty point list")
    src = tuple(exponent_vector(p, n) for p in points)
    pts = _minimal_points(src)
    choices = _candidate_choices(len(pts), n)
    if workers > 1:
        jobs = ((pts, n, chunk) for chunk in _chunks(choices, 2048))
        normals: set[IntegerVector] = set()
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_normals_worker, jobs):
                normals |= part
    else:
        normals = _candidate_normals(pts, n, choices)

    facets = []
    for normal in sorted(normals):
        values = [dot(normal, p) for p in pts]
        offset = min(values)
        on_face = [p for p, v in zip(pts, values) if v == offset]
        if not _is_facet(normal, on_face, n):
            continue
        touching = tuple(j for j, p in enumerate(src) if dot(normal, p) == offset)
        facets.append(Facet(normal, offset, all(x > 0 for x in normal), touching))
    return NewtonPolyhedron(n, src, tuple(facets))


def contains(np: NewtonPolyhedron, q: Sequence[int]) -> bool:
    if len(q) != np.n:
        raise DimensionError(f"expected {np.n} coordinates, got {len(q)}")
    return all(dot(f.normal, q) >= f.offset for f in np.facets)


def minkowski(a: NewtonPolyhedron, b: NewtonPolyhedron, workers: int = 1) -> NewtonPolyhedron:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")
    sums = [tuple(x + y for x, y in zip(p, q)) for p in a.points for q in b.points]
    return build_newton_polyhedron(sums, a.n, workers=workers)


def dilate(np: NewtonPolyhedron, k: int) -> NewtonPolyhedron:
    """``k * np``: same normals and touching indices, offsets times ``k``."""
    if k < 1:
        raise DomainError("dilation factor must be a positive integer")
    facets = tuple(Facet(f.normal, k * f.offset, f.compact, f.touching) for f in np.facets)
    return NewtonPolyhedron(np.n, tuple(scale(k, p) for p in np.points), facets)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def is_bounded_staircase(points: Iterable[Sequence[int]], n: int) -> bool:
    """True if every coordinate axis carries a point (finite staircase)."""
    covered = set()
    for p in points:
        support = [i for i, x in enumerate(p) if x]
        if not support:
            return True
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == n


def minimal_lattice_points(np: NewtonPolyhedron) -> list[ExponentVector]:
    """Divisibility-minimal lattice points of ``np``, sorted.

    No minimal point exceeds the coordinatewise max of the source points, so
    it suffices to scan prefixes in that box and solve for the smallest last
    coordinate.
    """
    n = np.n
    if not is_bounded_staircase(np.points, n):
        raise DomainError("Newton polyhedron of a non m-primary set has no finite staircase")
    box = [max(p[i] for p in np.points) for i in range(n)]
    last = [f for f in np.facets if f.normal[-1] > 0]
    flat = [f for f in np.facets if f.normal[-1] == 0]
    found = []
    for prefix in product(*(range(b + 1) for b in box[:-1])):
        if any(dot(f.normal[:-1], prefix) < f.offset for f in flat):
            continue
        t = 0
        for f in last:
            t = max(t, _ceil_div(f.offset - dot(f.normal[:-1], prefix), f.normal[-1]))
        found.append(prefix + (t,))
    return _minimal_points(found)
