"""Rees valuations, essential multi-indices and the verdicts built on them.

Functions that care about the generator *tuple* (essential sets, Theorem C
style checks, strictness witnesses) take either a :class:`MonomialIdeal` or a
plain sequence of exponent vectors; the sequence keeps its order and
multiplicity. Indices are 0-based; ``EssentialSet.labels`` gives the 1-based
labels used in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence, Union

from residua.ideal import (
    MonomialIdeal,
    _require_m_primary,
    closure_of_power,
    contains_ideal,
    contains_monomial,
    is_complete_intersection,
    is_m_primary,
    minimalize,
    socle,
)
from residua.lattice import (
    ZERO,
    DimensionError,
    DomainError,
    ExponentVector,
    IntegerVector,
    Term,
    dot,
    exact_determinant,
    exponent_vector,
)
from residua.polyhedron import build_newton_polyhedron, contains, dilate

Generators = Union[MonomialIdeal, Sequence[Sequence[int]]]


class VerificationError(AssertionError):
    """A statement guaranteed by the theory failed on concrete input."""


@dataclass(frozen=True, order=True)
class ReesValuation:
    """Monomial valuation ``z^q -> rho . q`` of a compact facet with offset ``c``."""

    rho: IntegerVector
    c: int

    def __post_init__(self):
        if any(r < 1 for r in self.rho):
            raise DomainError(f"Rees valuation weights must be positive: {self.rho}")

    def ord(self, q: Sequence[int]) -> int:
        return dot(self.rho, q)

    def ord_ideal(self, a: Generators) -> int:
        return min(self.ord(g) for g in _gens(a)[1])


@dataclass(frozen=True)
class EssentialSet:
    indices: tuple[int, ...]
    valuation: ReesValuation
    determinant: int

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self.indices)


@dataclass(frozen=True)
class HickelVerdict:
    jac: object  # Term or ZERO
    jac_in_ideal: bool
    m_primary: bool
    consistent: bool
    socle_matches: bool | None = None


@dataclass(frozen=True)
class StrictnessWitness:
    monomial: ExponentVector
    failing_valuation: ReesValuation
    coordinate: int
    ord_value: int
    bound: int
    excluded: bool  # monomial is outside closure(a^n)


@dataclass(frozen=True)
class AnnihilatorBounds:
    lower: MonomialIdeal
    upper: MonomialIdeal
    essential_count: int
    is_ci: bool
    essential: tuple[EssentialSet, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not contains_ideal(self.upper, self.lower):
            raise VerificationError(
                f"closure of a^n is not contained in a: {self.lower.gens} vs {self.upper.gens}")


def _gens(a: Generators) -> tuple[int, tuple[ExponentVector, ...]]:
    if isinstance(a, MonomialIdeal):
        return a.n, a.gens
    if not a:
        raise DomainError("empty generator list")
    n = len(a[0])
    return n, tuple(exponent_vector(g, n) for g in a)


def _ideal(a: Generators) -> MonomialIdeal:
    if isinstance(a, MonomialIdeal):
        return a
    n, gens = _gens(a)
    return minimalize(gens, n)


def rees_valuations(a: Generators, workers: int = 1) -> list[ReesValuation]:
    """One valuation per compact facet of the Newton polyhedron, sorted by weight."""
    ideal = _ideal(a)
    _require_m_primary(ideal)
    np = build_newton_polyhedron(ideal.gens, ideal.n, workers=workers)
    return [ReesValuation(f.normal, f.offset) for f in np.compact_facets]


def ord_monomial(v: ReesValuation, q: Sequence[int]) -> int:
    return v.ord(q)


def ord_ideal(v: ReesValuation, a: Generators) -> int:
    return v.ord_ideal(a)


def essential_sets(a: Generators, workers: int = 1) -> list[EssentialSet]:
    """Index n-subsets whose exponents lie on one compact facet and span R^n."""
    n, gens = _gens(a)
    _require_m_primary(minimalize(gens, n))
    valuations = [ReesValuation(f.normal, f.offset)
                  for f in build_newton_polyhedron(gens, n, workers=workers).compact_facets]
    out = []
    for idx in combinations(range(len(gens)), n):
        rows = [gens[i] for i in idx]
        on = [v for v in valuations if all(v.ord(r) == v.c for r in rows)]
        if not on:
            continue
        det = exact_determinant(rows)
        if det == 0:
            continue
        if len(on) > 1:
            raise VerificationError(f"independent exponents {rows} lie on several facets")
        out.append(EssentialSet(idx, on[0], det))
    return out


def jacobian_term(exponents: Sequence[Sequence[int]]) -> Term:
    """Jacobian determinant of the monomials ``z^{a^1}, ..., z^{a^n}``.

    It is ``det(a^i_j) * z^(sum a^i - 1)``, or ``ZERO`` when the exponent
    matrix is singular.
    """
    n = len(exponents)
    rows = [tuple(r) for r in exponents]
    if n == 0 or any(len(r) != n for r in rows):
        raise DomainError(f"need n exponent vectors of length n, got {rows}")
    det = exact_determinant(rows)
    if det == 0:
        return ZERO
    total = [sum(col) - 1 for col in zip(*rows)]
    # a zero column would force det == 0
    assert all(t >= 0 for t in total), rows
    return Term(det, tuple(total))


def hickel_verdict(exponents: Sequence[Sequence[int]]) -> HickelVerdict:
    n = len(exponents)
    jac = jacobian_term(exponents)
    ideal = minimalize(exponents, n)
    in_ideal = jac.is_zero or contains_monomial(ideal, jac.exponent)
    primary = is_m_primary(ideal)
    consistent = in_ideal != primary
    socle_ok = None
    if primary:
        socle_ok = (not jac.is_zero) and socle(ideal) == [jac.exponent]
        consistent = consistent and socle_ok
    return HickelVerdict(jac, in_ideal, primary, consistent, socle_ok)


def briancon_skoda_verify(a: Generators, workers: int = 1) -> bool:
    """True iff the integral closure of ``a^n`` lies in ``a``."""
    ideal = _ideal(a)
    _require_m_primary(ideal)
    return contains_ideal(ideal, closure_of_power(ideal, ideal.n, workers=workers))


def strictness_witness(a: Generators, e: EssentialSet, coordinate: int = 0) -> StrictnessWitness:
    """``z_k * Jac(f_I)`` for an essential ``I``: an element of ``m Jac(f_I)``
    whose valuation is at most ``n c - n + 1``, so it avoids closure(a^n)."""
    n, gens = _gens(a)
    if n < 2:
        raise DomainError("no strictness witness exists when n = 1")
    if not 0 <= coordinate < n:
        raise DimensionError(f"coordinate {coordinate} out of range")
    rows = [gens[i] for i in e.indices]
    jac = jacobian_term(rows)
    if jac.is_zero:
        raise DomainError(f"{e.labels} has a singular exponent matrix")
    q = tuple(x + (1 if i == coordinate else 0) for i, x in enumerate(jac.exponent))
    v = e.valuation
    bound = n * v.c - n + 1
    np = dilate(build_newton_polyhedron(gens, n), n)
    return StrictnessWitness(q, v, coordinate, v.ord(q), bound, not contains(np, q))


def theorem_c_check(a: Generators) -> bool:
    """For a complete intersection: essential n-subsets are exactly the
    n-subsets that generate the ideal."""
    n, gens = _gens(a)
    ideal = minimalize(gens, n)
    if not is_complete_intersection(ideal):
        raise DomainError("ideal is not a complete intersection")
    essential = {e.indices for e in essential_sets(gens)}
    generating = {
        idx for idx in combinations(range(len(gens)), n)
        if all(contains_monomial(minimalize([gens[i] for i in idx], n), g) for g in ideal.gens)
    }
    return essential == generating


def annihilator_bounds(a: Generators, workers: int = 1) -> AnnihilatorBounds:
    """Lower bound closure(a^n) and upper bound a for the annihilator, with
    the essential-set count and complete-intersection verdict."""
    n, gens = _gens(a)
    ideal = minimalize(gens, n)
    _require_m_primary(ideal)
    ess = essential_sets(gens, workers=workers)
    return AnnihilatorBounds(
        lower=closure_of_power(ideal, n, workers=workers),
        upper=ideal,
        essential_count=len(ess),
        is_ci=is_complete_intersection(ideal),
        essential=tuple(ess),
    )
