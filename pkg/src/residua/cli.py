"""Command-line front end. Reads an ideal as JSON (file or stdin), prints JSON.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from residua import checks
from residua.ideal import (
    MonomialIdeal,
    integral_closure,
    irreducible_decomposition,
    is_complete_intersection,
    is_m_primary,
    minimalize,
    power,
    socle,
    standard_monomials,
)
from residua.io import IdealInput, default_variables, loads, parse_monomial
from residua.lattice import DimensionError, DomainError
from residua.plot import render_staircase_svg
from residua.polyhedron import build_newton_polyhedron
from residua.residue import (
    VerificationError,
    annihilator_bounds,
    briancon_skoda_verify,
    essential_sets,
    jacobian_term,
    rees_valuations,
    strictness_witness,
)

SCHEMA = "residua/1"
COMMANDS = ("np", "rees", "essential", "closure", "power", "socle", "decompose", "ci",
            "bs-check", "bounds", "report", "staircase", "check")
NEEDS_M_PRIMARY = {"rees", "essential", "closure", "socle", "decompose", "ci", "bs-check",
                   "bounds", "report", "staircase"}


class InputError(Exception):
    pass


def _gens(ideal: MonomialIdeal) -> list[list[int]]:
    return [list(g) for g in ideal.gens]


def _facets_json(np) -> list[dict]:
    return [{"normal": list(f.normal), "offset": f.offset, "compact": f.compact,
             "touching": [j + 1 for j in f.touching]} for f in np.facets]


def _valuation_json(v) -> dict:
    return {"rho": list(v.rho), "c": v.c}


def _essential_json(inp: IdealInput, ess) -> list[dict]:
    out = []
    for e in ess:
        jac = jacobian_term([inp.generators[i] for i in e.indices])
        out.append({"indices": list(e.labels), "rho": list(e.valuation.rho), "c": e.valuation.c,
                    "determinant": e.determinant,
                    "jacobian": {"coeff": jac.coeff, "exponent": list(jac.exponent)}})
    return out


def _witness_json(inp: IdealInput, ess) -> list[dict]:
    out = []
    for e in ess:
        w = strictness_witness(list(inp.generators), e)
        out.append({"indices": list(e.labels), "monomial": list(w.monomial),
                    "rho": list(w.failing_valuation.rho), "ord": w.ord_value, "bound": w.bound,
                    "excluded": w.excluded})
    return out


def _check_m_primary(inp: IdealInput, ideal: MonomialIdeal) -> None:
    if is_m_primary(ideal):
        return
    if any(not any(g) for g in ideal.gens):
        raise InputError("the generators include the constant 1, so the ideal is the unit ideal")
    covered = {i for g in ideal.gens for i, x in enumerate(g) if x and sum(1 for y in g if y) == 1}
    missing = [inp.variables[i] for i in range(inp.n) if i not in covered]
    raise InputError("ideal is not m-primary: no pure power of " + ", ".join(missing))


def build_report(inp: IdealInput, workers: int = 1) -> tuple[dict, bool]:
    """The full pipeline as one JSON-ready document, plus an all-checks-passed flag."""
    gens = list(inp.generators)
    ideal = minimalize(gens, inp.n)
    np = build_newton_polyhedron(gens, inp.n, workers=workers)
    ess = essential_sets(gens, workers=workers)
    bounds = annihilator_bounds(gens, workers=workers)
    bs = briancon_skoda_verify(ideal, workers=workers)
    witnesses = _witness_json(inp, ess) if inp.n >= 2 else []
    ok = bs and all(w["excluded"] for w in witnesses)
    report = {
        "schema": SCHEMA,
        "input": inp.as_dict(),
        "ideal": {"generators": _gens(ideal), "m_primary": True},
        "newton_polyhedron": {"facets": _facets_json(np)},
        "rees_valuations": [_valuation_json(v) for v in rees_valuations(ideal, workers=workers)],
        "essential_sets": _essential_json(inp, ess),
        "complete_intersection": is_complete_intersection(ideal),
        "briancon_skoda": bs,
        "annihilator_bounds": {
            "lower": _gens(bounds.lower),
            "upper": _gens(bounds.upper),
            "essential_count": bounds.essential_count,
            "complete_intersection": bounds.is_ci,
        },
        "integral_closure": _gens(integral_closure(ideal, workers=workers)),
        "socle": [list(q) for q in socle(ideal)],
        "colength": len(standard_monomials(ideal)),
        "irreducible_decomposition": [_gens(c) for c in irreducible_decomposition(ideal)],
        "strictness_witnesses": witnesses,
    }
    return report, ok


def _svg(inp: IdealInput, ideal: MonomialIdeal) -> str:
    if inp.n != 2:
        raise InputError("staircase plots need n = 2")
    points = {inp.generators[i] for e in essential_sets(list(inp.generators)) for i in e.indices}
    return render_staircase_svg(ideal, highlight=tuple(sorted(points)))


def run(command: str, inp: IdealInput | None, k: int | None = None, workers: int = 1,
        seed: int = 0) -> tuple[object, int]:
    """Execute ``command``; return (JSON-ready payload or SVG text, exit code)."""
    if command == "check":
        results = checks.all_suites(seed)
        payload = {"schema": SCHEMA, "seed": seed, "suites": [r.as_dict() for r in results]}
        return payload, 0 if all(r.ok for r in results) else 1
    assert inp is not None
    gens = list(inp.generators)
    ideal = minimalize(gens, inp.n)
    if command in NEEDS_M_PRIMARY:
        _check_m_primary(inp, ideal)
    if command == "np":
        np = build_newton_polyhedron(gens, inp.n, workers=workers)
        return {"n": inp.n, "points": [list(p) for p in np.points],
                "facets": _facets_json(np)}, 0
    if command == "rees":
        return [_valuation_json(v) for v in rees_valuations(ideal, workers=workers)], 0
    if command == "essential":
        return _essential_json(inp, essential_sets(gens, workers=workers)), 0
    if command == "closure":
        return {"generators": _gens(integral_closure(ideal, workers=workers))}, 0
    if command == "power":
        if k is None or k < 1:
            raise InputError("power needs --k with a positive integer")
        return {"k": k, "generators": _gens(power(ideal, k))}, 0
    if command == "socle":
        return {"socle": [list(q) for q in socle(ideal)]}, 0
    if command == "decompose":
        return {"components": [_gens(c) for c in irreducible_decomposition(ideal)]}, 0
    if command == "ci":
        return {"complete_intersection": is_complete_intersection(ideal)}, 0
    if command == "bs-check":
        ok = briancon_skoda_verify(ideal, workers=workers)
        return {"briancon_skoda": ok}, 0 if ok else 1
    if command == "bounds":
        b = annihilator_bounds(gens, workers=workers)
        return {"lower": _gens(b.lower), "upper": _gens(b.upper),
                "essential_count": b.essential_count, "complete_intersection": b.is_ci}, 0
    if command == "report":
        report, ok = build_report(inp, workers=workers)
        return report, 0 if ok else 1
    if command == "staircase":
        return _svg(inp, ideal), 0
    raise InputError(f"unknown command {command!r}")


def _read_input(args) -> IdealInput:
    if args.gens is not None:
        n = args.n or 2
        names = default_variables(n)
        gens = [parse_monomial(s, names) for s in args.gens.split(",")]
        return IdealInput(n, tuple(names), tuple(gens))
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    return loads(text)


def dumps(payload, indent: int | None = None) -> str:
    if indent is None:
        return json.dumps(payload, separators=(",", ":"))
    return json.dumps(payload, indent=indent)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="residua", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
    parser.add_argument("--gens", help='comma-separated monomials instead of JSON, e.g. "z^3,w^2"')
    parser.add_argument("--n", type=int, help="number of variables for --gens (default 2)")
    parser.add_argument("--k", type=int, help="exponent for the power command")
    parser.add_argument("--svg", metavar="PATH", help="also write the staircase plot (n = 2)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for facet search")
    parser.add_argument("--seed", type=int, default=0, help="seed for the check command")
    parser.add_argument("--indent", type=int, default=None, help="pretty-print JSON output")
    args = parser.parse_args(argv)

    try:
        inp = None if args.command == "check" else _read_input(args)
        payload, code = run(args.command, inp, k=args.k, workers=args.jobs, seed=args.seed)
        if args.svg and inp is not None:
            svg = _svg(inp, minimalize(list(inp.generators), inp.n))
            with open(args.svg, "w") as fh:
                fh.write(svg)
    except VerificationError as exc:
        print(f"residua: verification failed: {exc}", file=sys.stderr)
        return 1
    except (InputError, DomainError, DimensionError, ValueError) as exc:
        print(f"residua: {exc}", file=sys.stderr)
        return 2
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(dumps(payload, args.indent) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
