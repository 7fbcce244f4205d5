"""Ideal input: JSON documents and monomial strings such as ``z^6*w^2``."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Sequence

from residua.lattice import DomainError, ExponentVector, exponent_vector

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def default_variables(n: int) -> list[str]:
    if n == 2:
        return ["z", "w"]
    return [f"z_{i}" for i in range(1, n + 1)]


@dataclass(frozen=True)
class IdealInput:
    n: int
    variables: tuple[str, ...]
    generators: tuple[ExponentVector, ...]  # order and multiplicity preserved

    def as_dict(self) -> dict:
        return {"n": self.n, "variables": list(self.variables),
                "generators": [list(g) for g in self.generators]}


def parse_monomial(text: str, variables: Sequence[str]) -> ExponentVector:
    text = text.strip()
    exps = [0] * len(variables)
    if text == "1":
        return tuple(exps)
    if not text:
        raise DomainError("empty monomial")
    index = {v: i for i, v in enumerate(variables)}
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise DomainError(f"cannot parse factor {factor!r} in {text!r}")
        name, k = m.group(1), m.group(2)
        if name not in index:
            raise DomainError(f"unknown variable {name!r}; expected one of {list(variables)}")
        exps[index[name]] += int(k) if k is not None else 1
    return tuple(exps)


def format_monomial(exponent: Sequence[int], variables: Sequence[str]) -> str:
    parts = []
    for name, k in zip(variables, exponent):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def parse_input(doc: dict) -> IdealInput:
    if not isinstance(doc, dict):
        raise DomainError("input must be a JSON object")
    try:
        n = int(doc["n"])
        raw = doc["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"input needs integer 'n' and a 'generators' list ({exc})") from None
    if n < 1:
        raise DomainError("'n' must be positive")
    variables = doc.get("variables") or default_variables(n)
    if len(variables) != n or len(set(variables)) != n:
        raise DomainError(f"need {n} distinct variable names, got {variables}")
    if not isinstance(raw, list) or not raw:
        raise DomainError("'generators' must be a nonempty list")
    gens = []
    for g in raw:
        if isinstance(g, str):
            gens.append(parse_monomial(g, variables))
        elif isinstance(g, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in g):
            gens.append(exponent_vector(g, n))
        else:
            raise DomainError(f"generator {g!r} is neither an exponent array nor a monomial string")
    return IdealInput(n, tuple(variables), tuple(gens))


def loads(text: str) -> IdealInput:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed JSON: {exc}") from None
    return parse_input(doc)
