"""Seeded randomized and exhaustive verification suites.

Each suite returns a :class:`SuiteResult`; the CLI ``check`` command and the
acceptance tests both run them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product as cartesian
from math import comb
from typing import Callable

from residua.ideal import (
    closure_of_power,
    colength,
    contains_monomial,
    integral_closure,
    irreducible_decomposition,
    maximal_ideal,
    minimalize,
    power,
    product,
    socle,
)
from residua.oracle import (
    CaratheodoryOracle,
    hull2d_oracle,
    jacobian_symbolic_oracle,
    socle_oracle,
)
from residua.polyhedron import build_newton_polyhedron, contains
from residua.residue import (
    briancon_skoda_verify,
    essential_sets,
    hickel_verdict,
    jacobian_term,
    rees_valuations,
    strictness_witness,
    theorem_c_check,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.cases > 0 and not self.failures

    def as_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": len(self.failures),
                "first_failures": [repr(f) for f in self.failures[:3]]}


def random_m_primary(rng: random.Random, n: int, max_gens: int = 6, max_exp: int = 8):
    """A generator tuple: one pure power per variable plus random monomials, shuffled."""
    gens = []
    for i in range(n):
        gens.append(tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(n)))
    for _ in range(rng.randint(0, max_gens - n)):
        v = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(v):
            gens.append(v)
    rng.shuffle(gens)
    return gens


def random_pure_power_tuple(rng: random.Random, n: int, max_exp: int = 6, max_extra: int = 3):
    """Pure powers of every variable followed by 0-3 redundant monomials."""
    gens = [tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(n)) for i in range(n)]
    for _ in range(rng.randint(0, max_extra)):
        base = rng.choice(gens[:n])
        gens.append(tuple(x + rng.randint(0, 2) for x in base))
    return gens


def _run(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def _bs_ideals(seed: int, count: int):
    rng = random.Random(seed)
    return [random_m_primary(rng, rng.choice((2, 3))) for _ in range(count)]


def briancon_skoda_suite(seed: int = 0, count: int = 500) -> SuiteResult:
    def body(res):
        for gens in _bs_ideals(seed, count):
            res.cases += 1
            if not briancon_skoda_verify(gens):
                res.failures.append(gens)
    return _run("briancon_skoda", body)


def strictness_suite(seed: int = 0, count: int = 500) -> SuiteResult:
    """Every essential set of every Briançon-Skoda suite ideal has a witness
    outside closure(a^n)."""
    def body(res):
        for gens in _bs_ideals(seed, count):
            n = len(gens[0])
            ideal = minimalize(gens, n)
            lower = closure_of_power(ideal, n)
            for e in essential_sets(gens):
                res.cases += 1
                w = strictness_witness(gens, e)
                if (not w.excluded or w.ord_value > w.bound or w.ord_value >= n * e.valuation.c
                        or contains_monomial(lower, w.monomial)):
                    res.failures.append((gens, e.labels, w))
    return _run("strictness", body)


def hickel_suite(seed: int = 0, count: int = 500, max_exp: int = 5) -> SuiteResult:
    """Exhaustive monomial pairs with exponents <= max_exp, then random triples."""
    def body(res):
        monos = list(cartesian(range(max_exp + 1), repeat=2))
        for a in monos:
            for b in monos:
                res.cases += 1
                v = hickel_verdict([a, b])
                if not v.consistent:
                    res.failures.append((a, b, v))
        rng = random.Random(seed)
        for _ in range(count):
            triple = [tuple(rng.randint(0, 8) for _ in range(3)) for _ in range(3)]
            if rng.random() < 0.25:
                # force an m-primary triple now and then
                triple = [tuple(rng.randint(1, 8) if j == i else 0 for j in range(3))
                          for i in range(3)]
                rng.shuffle(triple)
            res.cases += 1
            v = hickel_verdict(triple)
            if not v.consistent:
                res.failures.append((triple, v))
    return _run("hickel", body)


def product_suite(seed: int = 0, count: int = 100) -> SuiteResult:
    """n = 2: Rees valuations of a product are the union of those of the factors."""
    def body(res):
        rng = random.Random(seed)
        for _ in range(count):
            a = minimalize(random_m_primary(rng, 2), 2)
            b = minimalize(random_m_primary(rng, 2), 2)
            res.cases += 1
            lhs = {v.rho for v in rees_valuations(product(a, b))}
            rhs = {v.rho for v in rees_valuations(a)} | {v.rho for v in rees_valuations(b)}
            if lhs != rhs:
                res.failures.append((a.gens, b.gens, sorted(lhs), sorted(rhs)))
    return _run("product_valuations", body)


def theorem_c_suite(seed: int = 0, count: int = 50) -> SuiteResult:
    def body(res):
        rng = random.Random(seed)
        for _ in range(count):
            gens = random_pure_power_tuple(rng, rng.choice((2, 3)))
            res.cases += 1
            if not theorem_c_check(gens):
                res.failures.append(gens)
    return _run("theorem_c", body)


def hull_oracle_suite(seed: int = 0, count: int = 200) -> SuiteResult:
    def body(res):
        rng = random.Random(seed)
        for _ in range(count):
            gens = random_m_primary(rng, 2)
            res.cases += 1
            main = sorted(f.normal for f in build_newton_polyhedron(gens, 2).compact_facets)
            if main != hull2d_oracle(gens):
                res.failures.append((gens, main, hull2d_oracle(gens)))
    return _run("hull2d_oracle", body)


def membership_oracle_suite(seed: int = 0, count: int = 100) -> SuiteResult:
    """``contains`` against the Carathéodory oracle on every lattice point of the box."""
    def body(res):
        rng = random.Random(seed)
        for i in range(count):
            n = 2 if i % 2 == 0 else 3
            gens = random_m_primary(rng, n, max_exp=8 if n == 2 else 6)
            np = build_newton_polyhedron(gens, n)
            oracle = CaratheodoryOracle(gens)
            box = [max(g[k] for g in gens) for k in range(n)]
            res.cases += 1
            for q in cartesian(*(range(b + 1) for b in box)):
                if contains(np, q) != (q in oracle):
                    res.failures.append((gens, q))
                    break
    return _run("caratheodory_oracle", body)


def jacobian_oracle_suite(max_exp: int = 5) -> SuiteResult:
    def body(res):
        monos = list(cartesian(range(max_exp + 1), repeat=2))
        for a in monos:
            for b in monos:
                res.cases += 1
                if jacobian_term([a, b]) != jacobian_symbolic_oracle([a, b]):
                    res.failures.append((a, b))
    return _run("jacobian_oracle", body)


def decomposition_suite(seed: int = 0, count: int = 200) -> SuiteResult:
    """Component count of the irreducible decomposition equals the socle size."""
    def body(res):
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.choice((2, 3))
            a = minimalize(random_m_primary(rng, n), n)
            res.cases += 1
            comps = irreducible_decomposition(a)
            if len(comps) != len(socle(a)) or socle(a) != socle_oracle(a.gens):
                res.failures.append(a.gens)
    return _run("decomposition_socle", body)


def colength_suite(max_k: int = 6, max_n: int = 4) -> SuiteResult:
    def body(res):
        for n in range(1, max_n + 1):
            m = maximal_ideal(n)
            for k in range(1, max_k + 1):
                res.cases += 1
                if colength(power(m, k)) != comb(k + n - 1, n):
                    res.failures.append((n, k))
    return _run("colength_m_power", body)


def closure_idempotence_suite(seed: int = 0, count: int = 200) -> SuiteResult:
    def body(res):
        rng = random.Random(seed)
        for _ in range(count):
            n = rng.choice((2, 3))
            a = minimalize(random_m_primary(rng, n), n)
            res.cases += 1
            c = integral_closure(a)
            if integral_closure(c) != c or not all(contains_monomial(c, g) for g in a.gens):
                res.failures.append(a.gens)
    return _run("closure_idempotence", body)


def all_suites(seed: int = 0) -> list[SuiteResult]:
    return [
        briancon_skoda_suite(seed),
        hickel_suite(seed),
        product_suite(seed),
        theorem_c_suite(seed),
        strictness_suite(seed),
        hull_oracle_suite(seed),
        membership_oracle_suite(seed),
        jacobian_oracle_suite(),
        decomposition_suite(seed),
        colength_suite(),
        closure_idempotence_suite(seed),
    ]
