"""Full pipeline on the ideal (z^8, z^6 w^2, z^2 w^3, z w^5, w^6)."""

from residua import (
    annihilator_bounds,
    build_newton_polyhedron,
    contains,
    dilate,
    essential_sets,
    jacobian_term,
    minimalize,
    rees_valuations,
    strictness_witness,
)
from residua.io import format_monomial

GENS = [(8, 0), (6, 2), (2, 3), (1, 5), (0, 6)]
NAMES = ["z", "w"]


def main():
    np = build_newton_polyhedron(GENS, 2)
    print("facets:")
    for f in np.facets:
        kind = "compact" if f.compact else "unbounded"
        print(f"  normal {f.normal} offset {f.offset} {kind}, touching {[j + 1 for j in f.touching]}")
    for v in rees_valuations(GENS):
        print(f"valuation rho={v.rho} c={v.c}: ", [v.ord(g) for g in GENS])

    print("essential sets:")
    for e in essential_sets(GENS):
        jac = jacobian_term([GENS[i] for i in e.indices])
        w = strictness_witness(GENS, e)
        print(f"  {e.labels} on rho={e.valuation.rho} det={e.determinant} "
              f"Jac={jac.coeff}*{format_monomial(jac.exponent, NAMES)} "
              f"witness {format_monomial(w.monomial, NAMES)} ord {w.ord_value} <= {w.bound}")

    jac = jacobian_term([(6, 2), (2, 3)])
    print("Jac(z^6w^2, z^2w^3) =", jac.coeff, format_monomial(jac.exponent, NAMES),
          "in a:", jac.exponent in minimalize(GENS, 2))
    print("z*Jac in closure(a^2):", contains(dilate(np, 2), (8, 4)))
    b = annihilator_bounds(GENS)
    print("lower bound gens:", [format_monomial(g, NAMES) for g in b.lower.gens])
    print("essential count:", b.essential_count, "complete intersection:", b.is_ci)


if __name__ == "__main__":
    main()
