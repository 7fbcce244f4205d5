"""Monomial ideals in the local ring, handled through their staircases."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Sequence

from residua.lattice import (
    DimensionError,
    DomainError,
    ExponentVector,
    divides,
    exponent_vector,
    unit_vector,
)
from residua.polyhedron import build_newton_polyhedron, dilate, minimal_lattice_points


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, sorted lexicographically."""

    n: int
    gens: tuple[ExponentVector, ...]

    def __post_init__(self):
        if not self.gens:
            raise DomainError("a monomial ideal needs at least one generator")
        for g in self.gens:
            if len(g) != self.n:
                raise DimensionError(f"generator {g} does not have {self.n} coordinates")
        if list(self.gens) != sorted(set(self.gens)):
            raise ValueError("generators must be sorted and distinct")
        for a in self.gens:
            for b in self.gens:
                if a != b and divides(a, b):
                    raise ValueError(f"{a} divides {b}; generators are not minimal")

    def __contains__(self, q) -> bool:
        return contains_monomial(self, q)

    def __len__(self) -> int:
        return len(self.gens)


def minimalize(raw: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    pts = sorted({exponent_vector(p, n) for p in raw}, key=lambda p: (sum(p), p))
    if not pts:
        raise DomainError("empty generator list")
    keep: list[ExponentVector] = []
    for p in pts:
        if not any(divides(q, p) for q in keep):
            keep.append(p)
    return MonomialIdeal(n, tuple(sorted(keep)))


def maximal_ideal(n: int) -> MonomialIdeal:
    return minimalize([unit_vector(i, n) for i in range(n)], n)


def _check_dim(a: MonomialIdeal, q: Sequence[int]) -> None:
    if len(q) != a.n:
        raise DimensionError(f"expected {a.n} coordinates, got {len(q)}")


def contains_monomial(a: MonomialIdeal, q: Sequence[int]) -> bool:
    _check_dim(a, q)
    return any(divides(g, q) for g in a.gens)


def contains_ideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True if ``b`` is contained in ``a``."""
    return all(contains_monomial(a, g) for g in b.gens)


def is_m_primary(a: MonomialIdeal) -> bool:
    """Each variable has a pure power among the generators.

    The unit ideal has empty zero locus and is not m-primary.
    """
    covered = set()
    for g in a.gens:
        support = [i for i, x in enumerate(g) if x]
        if not support:
            return False
        if len(support) == 1:
            covered.add(support[0])
    return len(covered) == a.n


def _require_m_primary(a: MonomialIdeal) -> None:
    if is_m_primary(a):
        return
    if any(not any(g) for g in a.gens):
        raise DomainError("the unit ideal is not m-primary")
    covered = {i for g in a.gens for i in range(a.n) if g[i] and sum(1 for x in g if x) == 1}
    missing = [i for i in range(a.n) if i not in covered]
    raise DomainError(f"ideal is not m-primary: no pure power of variable(s) {missing}")


def _check_same_dim(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise DimensionError(f"dimension mismatch: {a.n} vs {b.n}")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    return minimalize((tuple(x + y for x, y in zip(p, q)) for p in a.gens for q in b.gens), a.n)


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise DomainError("power exponent must be a positive integer")
    out = a
    for _ in range(k - 1):
        out = product(out, a)
    return out


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    return minimalize((tuple(map(max, p, q)) for p in a.gens for q in b.gens), a.n)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same_dim(a, b)
    return minimalize(a.gens + b.gens, a.n)


def colon(a: MonomialIdeal, q: Sequence[int]) -> MonomialIdeal:
    """The quotient ``(a : z^q)``."""
    _check_dim(a, q)
    return minimalize((tuple(max(x - y, 0) for x, y in zip(g, q)) for g in a.gens), a.n)


def _box(a: MonomialIdeal) -> list[int]:
    """Pure-power exponents; every standard monomial lies strictly inside."""
    box = [0] * a.n
    for g in a.gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) == 1:
            i = support[0]
            box[i] = g[i] if box[i] == 0 else min(box[i], g[i])
    return box


def standard_monomials(a: MonomialIdeal) -> list[ExponentVector]:
    """Monomials outside ``a``, a basis of the Artinian quotient; sorted."""
    _require_m_primary(a)
    return [q for q in cartesian(*(range(b) for b in _box(a))) if not contains_monomial(a, q)]


def colength(a: MonomialIdeal) -> int:
    return len(standard_monomials(a))


def socle(a: MonomialIdeal) -> list[ExponentVector]:
    """Standard monomials killed by every variable (the staircase corners)."""
    basis = standard_monomials(a)
    return [
        q for q in basis
        if all(contains_monomial(a, tuple(x + e for x, e in zip(q, unit_vector(i, a.n))))
               for i in range(a.n))
    ]


def _split(a: MonomialIdeal) -> list[MonomialIdeal]:
    for g in a.gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) > 1:
            i = support[0]
            pure = tuple(g[i] if j == i else 0 for j in range(a.n))
            rest = tuple(0 if j == i else g[j] for j in range(a.n))
            return [minimalize(a.gens + (pure,), a.n), minimalize(a.gens + (rest,), a.n)]
    return [a]


def irreducible_decomposition(a: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant decomposition of ``a`` into ideals generated by pure powers.

    Splits ``(I, z^g) = (I, z_i^{g_i}) ∩ (I, z^{g - g_i e_i})`` on a generator
    with mixed support until only pure powers remain, then drops every
    component containing another one. Components are sorted by their socle
    corner.
    """
    _require_m_primary(a)
    todo = [a]
    leaves: set[MonomialIdeal] = set()
    seen: set[MonomialIdeal] = set()
    while todo:
        cur = todo.pop()
        if cur in seen:
            continue
        seen.add(cur)
        parts = _split(cur)
        if parts == [cur]:
            leaves.add(cur)
        else:
            todo.extend(parts)
    comps = [c for c in leaves
             if not any(d != c and contains_ideal(c, d) for d in leaves)]
    return sorted(comps, key=corner)


def corner(c: MonomialIdeal) -> ExponentVector:
    """Socle monomial of an ideal generated by pure powers of all variables."""
    return tuple(sum(g) - 1 for g in sorted(c.gens, key=lambda g: [x == 0 for x in g]))


def integral_closure(a: MonomialIdeal, workers: int = 1) -> MonomialIdeal:
    """Monomials whose exponents are lattice points of the Newton polyhedron."""
    _require_m_primary(a)
    np = build_newton_polyhedron(a.gens, a.n, workers=workers)
    return minimalize(minimal_lattice_points(np), a.n)


def closure_of_power(a: MonomialIdeal, k: int, workers: int = 1) -> MonomialIdeal:
    """``integral_closure(power(a, k))`` computed through ``k * NP(a)``."""
    _require_m_primary(a)
    np = dilate(build_newton_polyhedron(a.gens, a.n, workers=workers), k)
    return minimalize(minimal_lattice_points(np), a.n)


def is_complete_intersection(a: MonomialIdeal) -> bool:
    _require_m_primary(a)
    if len(a.gens) != a.n:
        return False
    # n minimal generators of an m-primary monomial ideal are pure powers
    assert all(sum(1 for x in g if x) == 1 for g in a.gens), a.gens
    return True
