"""Exact combinatorics of monomial ideals: Newton polyhedra, Rees valuations,
essential multi-indices, integral closures and socles."""

from residua.lattice import (
    ZERO,
    DimensionError,
    DomainError,
    Term,
    dot,
    exact_determinant,
    make_primitive,
)
from residua.polyhedron import (
    Facet,
    NewtonPolyhedron,
    build_newton_polyhedron,
    contains,
    dilate,
    minimal_lattice_points,
    minkowski,
)
from residua.ideal import (
    MonomialIdeal,
    colength,
    colon,
    contains_monomial,
    integral_closure,
    intersection,
    irreducible_decomposition,
    is_complete_intersection,
    is_m_primary,
    maximal_ideal,
    minimalize,
    power,
    product,
    socle,
    standard_monomials,
)
from residua.residue import (
    AnnihilatorBounds,
    EssentialSet,
    HickelVerdict,
    ReesValuation,
    StrictnessWitness,
    annihilator_bounds,
    briancon_skoda_verify,
    essential_sets,
    VerificationError,
    hickel_verdict,
    jacobian_term,
    ord_monomial,
    ord_ideal,
    rees_valuations,
    strictness_witness,
    theorem_c_check,
)

__version__ = "0.1.0"
