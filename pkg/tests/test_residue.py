import pytest
from hypothesis import given
from hypothesis import strategies as st

from residua.ideal import closure_of_power, contains_monomial, maximal_ideal, minimalize, power
from residua.lattice import ZERO, DomainError, Term
from residua.oracle import jacobian_symbolic_oracle
from residua.residue import (
    EssentialSet,
    ReesValuation,
    VerificationError,
    annihilator_bounds,
    briancon_skoda_verify,
    essential_sets,
    hickel_verdict,
    jacobian_term,
    ord_ideal,
    ord_monomial,
    rees_valuations,
    strictness_witness,
    theorem_c_check,
)

from conftest import EXAMPLE, m_primary_gens

M2 = [(2, 0), (1, 1), (0, 2)]


def test_rees_valuations():
    assert rees_valuations(EXAMPLE) == [ReesValuation((1, 2), 8), ReesValuation((3, 2), 12)]
    assert rees_valuations(maximal_ideal(3)) == [ReesValuation((1, 1, 1), 1)]
    prod = [(3, 0), (1, 1), (2, 2), (0, 3)]
    assert [v.rho for v in rees_valuations(prod)] == [(1, 2), (2, 1)]
    with pytest.raises(DomainError):
        rees_valuations([(2, 0), (1, 1)])


def test_ord():
    v1, v2 = rees_valuations(EXAMPLE)
    assert ord_monomial(v1, (2, 3)) == 8
    assert ord_ideal(v2, EXAMPLE) == 12
    assert [v2.ord(g) for g in EXAMPLE] == [24, 22, 12, 13, 12]
    assert ord_monomial(v1, (0, 0)) == 0


def test_essential_sets_examples():
    ess = essential_sets(M2)
    assert [e.labels for e in ess] == [(1, 2), (1, 3), (2, 3)]
    assert [e.determinant for e in ess] == [2, 4, 2]
    assert {e.valuation.rho for e in ess} == {(1, 1)}
    assert [e.labels for e in essential_sets([(3, 0), (0, 2), (4, 0)])] == [(1, 2)]


def test_essential_sets_worked_example():
    # only (8,0),(2,3) sit on the (1,2) facet: (6,2) has weight 10 > 8 there
    ess = essential_sets(EXAMPLE)
    assert [(e.labels, e.valuation.rho) for e in ess] == [((1, 3), (1, 2)), ((3, 5), (3, 2))]
    assert [e.determinant for e in ess] == [24, 12]


def test_essential_sets_follow_tuple_order():
    reordered = [EXAMPLE[i] for i in (4, 3, 2, 1, 0)]
    assert [e.labels for e in essential_sets(reordered)] == [(1, 3), (3, 5)]


@given(m_primary_gens())
def test_essential_set_invariants(gens):
    n = len(gens[0])
    ess = essential_sets(gens)
    for e in ess:
        assert all(e.valuation.ord(gens[i]) == e.valuation.c for i in e.indices)
        assert e.determinant != 0
    # every Rees valuation carries at least one essential set
    assert {e.valuation for e in ess} == set(rees_valuations(gens))


def test_jacobian_term():
    assert jacobian_term([(6, 2), (2, 3)]) == Term(14, (7, 4))
    assert jacobian_term([(1, 0), (0, 1)]) == Term(1, (0, 0))
    assert jacobian_term([(2, 1), (1, 2)]) == Term(3, (2, 2))
    assert jacobian_term([(2, 0), (4, 0)]) is ZERO
    with pytest.raises(DomainError):
        jacobian_term([(1, 0)])


@given(st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 4)] * n), min_size=n, max_size=n)))
def test_jacobian_matches_symbolic(tup):
    assert jacobian_term(tup) == jacobian_symbolic_oracle(tup)


def test_hickel_examples():
    v = hickel_verdict([(2, 0), (1, 1)])
    assert v.jac == Term(2, (2, 0)) and v.jac_in_ideal and not v.m_primary and v.consistent
    v = hickel_verdict([(3, 0), (0, 2)])
    assert v.jac == Term(6, (2, 1)) and not v.jac_in_ideal and v.m_primary
    assert v.consistent and v.socle_matches
    v = hickel_verdict([(6, 2), (2, 3)])
    assert v.jac == Term(14, (7, 4)) and v.jac_in_ideal and not v.m_primary and v.consistent
    assert hickel_verdict([(0, 0), (0, 1)]).consistent


@given(st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 8)] * n), min_size=n, max_size=n)))
def test_hickel_consistent(tup):
    assert hickel_verdict(tup).consistent


def test_briancon_skoda_examples():
    assert briancon_skoda_verify(M2)
    assert closure_of_power(minimalize(M2, 2), 2) == power(maximal_ideal(2), 4)
    assert briancon_skoda_verify([(5,)])
    assert briancon_skoda_verify(EXAMPLE)


@given(m_primary_gens())
def test_briancon_skoda_random(gens):
    assert briancon_skoda_verify(gens)


def test_strictness_examples():
    e13 = essential_sets(EXAMPLE)[0]
    w = strictness_witness(EXAMPLE, e13)
    assert w.monomial == (10, 2) and w.failing_valuation.rho == (1, 2)
    assert w.ord_value == 14 < 16 and w.excluded
    ess = {e.labels: e for e in essential_sets(M2)}
    w = strictness_witness(M2, ess[(1, 3)])
    assert w.monomial == (2, 1) and w.ord_value == 3 and w.excluded
    w = strictness_witness([(2, 0), (0, 2)], essential_sets([(2, 0), (0, 2)])[0])
    assert w.monomial == (2, 1) and w.ord_value == 3 < 4


def test_strictness_needs_two_variables():
    e = essential_sets([(3,)])[0]
    with pytest.raises(DomainError):
        strictness_witness([(3,)], e)


@given(m_primary_gens(), st.data())
def test_strictness_witness_never_in_closure(gens, data):
    n = len(gens[0])
    lower = closure_of_power(minimalize(gens, n), n)
    for e in essential_sets(gens):
        k = data.draw(st.integers(0, n - 1))
        w = strictness_witness(gens, e, coordinate=k)
        assert w.ord_value <= w.bound < n * e.valuation.c
        assert w.excluded and not contains_monomial(lower, w.monomial)


def test_theorem_c_examples():
    assert theorem_c_check([(3, 0), (0, 2), (4, 0)])
    assert theorem_c_check([(2, 0), (0, 2)])
    dup = [(3, 0), (0, 2), (3, 0)]
    assert [e.labels for e in essential_sets(dup)] == [(1, 2), (2, 3)]
    assert theorem_c_check(dup)
    with pytest.raises(DomainError):
        theorem_c_check(M2)


def test_annihilator_bounds():
    b = annihilator_bounds([(2, 0), (0, 3)])
    assert b.lower == closure_of_power(minimalize([(2, 0), (0, 3)], 2), 2)
    assert b.upper.gens == ((0, 3), (2, 0))
    assert b.is_ci and b.essential_count == 1
    m = annihilator_bounds(maximal_ideal(3))
    assert m.lower == power(maximal_ideal(3), 3) and m.upper == maximal_ideal(3)
    ex = annihilator_bounds(EXAMPLE)
    assert ex.essential_count == 2 and not ex.is_ci


def test_annihilator_bounds_guard():
    from residua.residue import AnnihilatorBounds
    with pytest.raises(VerificationError):
        AnnihilatorBounds(minimalize([(1, 0), (0, 1)], 2), minimalize([(2, 0), (0, 2)], 2), 0, True)
