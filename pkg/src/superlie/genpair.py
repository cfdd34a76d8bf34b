"""Two-element generating pairs and their closure certificates.

Each recipe returns a :class:`GeneratorCertificate` whose verdict comes
from an actual closure computation, never from the recipe itself.  Where
a recipe needs "some" weight, the lexicographically smallest eligible
weight is used, so every certificate is reproducible.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionFailed, OddSpacesNotOneDim
from .exactlin import ZERO, format_scalar, parse_scalar, scalar
from .rootsys import (RootTable, Weight, balanced, cartan_vector, find_separating, format_weight,
                      odd_spaces_one_dim, space, weight_table)
from .superalgebra import SuperAlgebra, closure, even_center

GENERATED = "generated"
NOT_GENERATED = "not_generated"

RECIPES = ("even_part", "classical_case1", "classical_2_1", "classical_2_1_Q", "classical_2_2",
           "homogeneous", "cartan_generic", "cartan_H6", "cartan_Hodd", "gl_variant", "given")


@dataclass
class GeneratorCertificate:
    algebra: str
    family: str
    params: Tuple[int, ...]
    ambient_dim: int
    generators: List[List[Fraction]]
    trace: List[int]
    final_dim: int
    recipe: str = "given"
    weights: Dict[str, List[Weight]] = field(default_factory=dict)
    phi: List[Weight] = field(default_factory=list)
    separator: Optional[Tuple[Fraction, ...]] = None
    witness: List[Tuple[Weight, Fraction]] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return GENERATED if self.final_dim == self.ambient_dim else NOT_GENERATED

    @property
    def generated(self) -> bool:
        return self.verdict == GENERATED

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "family": self.family,
            "params": list(self.params),
            "dim": self.ambient_dim,
            "recipe": self.recipe,
            "generators": [[format_scalar(c) for c in g] for g in self.generators],
            "weights": {k: [format_weight(w) for w in ws] for k, ws in sorted(self.weights.items())},
            "phi": [format_weight(w) for w in self.phi],
            "separator": None if self.separator is None else [format_scalar(c) for c in self.separator],
            "witness": [{"weight": format_weight(w), "value": format_scalar(v)} for w, v in self.witness],
            "trace": list(self.trace),
            "final_dim": self.final_dim,
            "verdict": self.verdict,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"


def generators_from_dict(d: dict) -> List[List[Fraction]]:
    return [[parse_scalar(c) for c in g] for g in d["generators"]]


def _certificate(L: SuperAlgebra, gens: Sequence[Sequence], recipe: str = "given", **extra) -> GeneratorCertificate:
    gens = [[scalar(c) for c in g] for g in gens]
    sub = closure(L, gens)
    return GeneratorCertificate(L.name, L.family, tuple(L.params), L.dim, gens, list(sub.trace), sub.dim,
                                recipe=recipe, **extra)


def verify_pair(L: SuperAlgebra, x: Sequence, y: Sequence) -> GeneratorCertificate:
    """Closure certificate for an arbitrary pair."""
    return _certificate(L, [x, y])


def _add(*vs: Sequence) -> List[Fraction]:
    out = [ZERO] * len(vs[0])
    for v in vs:
        for i, c in enumerate(v):
            out[i] += c
    return out


def _root_vector(L: SuperAlgebra, table: RootTable, w: Weight, **filters) -> List[Fraction]:
    idx = space(table, L, w, **filters)
    v = [ZERO] * L.dim
    v[idx[0]] = Fraction(1)
    return v


def _pick(candidates, forbidden=(), taken=()) -> Weight:
    """Smallest nonzero weight avoiding ``forbidden`` and the weights already taken."""
    bad = set(forbidden) | set(taken)
    for w in sorted(candidates):
        if any(w) and w not in bad:
            return w
    raise ConstructionFailed("no eligible weight")


def _finish(L: SuperAlgebra, x, h_coeffs, recipe: str, weights, phi, sep) -> GeneratorCertificate:
    y = cartan_vector(L, h_coeffs)
    cert = _certificate(L, [x, y], recipe, weights=weights, phi=sorted(phi),
                        separator=tuple(h_coeffs), witness=sep.witness())
    if not cert.generated:
        raise ConstructionFailed(f"{L.name}: recipe {recipe} closed at dim {cert.final_dim} of {L.dim}")
    return cert


# -- even part ----------------------------------------------------------------

def even_part_pair(L: SuperAlgebra, table: Optional[RootTable] = None):
    """Generators ``(x, h + z)`` of the even part (of L_0 for Z-graded algebras).

    ``x`` is the full-balanced element, ``h`` separates the even roots and
    ``z`` spans the center of the even part (zero if the center is trivial).
    """
    table = table or weight_table(L, verify=False)
    x = balanced(L, "full", table)
    sep = find_separating(L, table.reductive_roots)
    h = cartan_vector(L, sep.h)
    idx = L.degree_indices(0) if L.degree is not None else None
    center = even_center(L, idx)
    z = center.basis[0] if center.dim else [ZERO] * L.dim
    return x, _add(h, z)


def even_part_dim(L: SuperAlgebra) -> int:
    if L.degree is not None:
        return len(L.degree_indices(0))
    return len(L.even_indices())


# -- classical -----------------------------------------------------------------

def _classical_case(L: SuperAlgebra) -> str:
    fam, p = L.family, tuple(L.params)
    if fam == "C" or (fam == "A" and p[0] != p[1]):
        return "classical_case1"
    if fam in ("B", "D"):
        return "classical_2_1"
    if fam == "Q":
        return "classical_2_1_Q"
    if fam in ("A", "P"):
        return "classical_2_2"
    raise ConstructionFailed(f"no classical recipe for family {fam}")


def _q_weight(table: RootTable) -> Weight:
    # the first pair of simple roots whose sum is again a root
    roots = set(table.delta_even)
    pi = table.simple
    for i in range(len(pi)):
        for j in range(i + 1, len(pi)):
            s = tuple(a + b for a, b in zip(pi[i], pi[j]))
            if s in roots:
                return s
    raise ConstructionFailed("no pair of simple roots sums to a root")


def classical_pair(L: SuperAlgebra) -> GeneratorCertificate:
    """Generating pair ``(x, h)`` for a classical superalgebra, by case on the family."""
    table = weight_table(L)
    recipe = _classical_case(L)
    x = balanced(L, "full", table)
    even = set(table.delta_even)
    weights: Dict[str, List[Weight]] = {}
    if recipe == "classical_2_1_Q":
        a = _q_weight(table)
        x = _add(x, _root_vector(L, table, a, parity=1))
        weights["odd"] = [a]
    elif recipe == "classical_2_1":
        a = _pick(table.delta_odd, even)
        x = _add(x, _root_vector(L, table, a, parity=1))
        weights["odd"] = [a]
    else:
        a1 = _pick(table.components[1], even)
        a2 = _pick(table.components[2], even, [a1])
        x = _add(x, _root_vector(L, table, a1, parity=1, component=1),
                 _root_vector(L, table, a2, parity=1, component=2))
        weights["odd"] = [a1, a2]
        if recipe == "classical_case1":
            center = even_center(L)
            x = _add(x, center.basis[0])
    phi = sorted(even | set(weights["odd"]))
    sep = find_separating(L, phi)
    return _finish(L, x, sep.h, recipe, weights, phi, sep)


def homogeneous_pair(L: SuperAlgebra) -> GeneratorCertificate:
    """Odd-balanced ``x`` with an even ``h`` separating the odd weights.

    Classical algebras with an odd weight space of dimension > 1 are
    rejected.  For Z-graded algebras the first basis vector of each odd
    weight space is used.
    """
    table = weight_table(L)
    if L.degree is None and not odd_spaces_one_dim(L, table):
        raise OddSpacesNotOneDim(f"{L.name} has an odd weight space of dimension > 1")
    x = balanced(L, "odd", table)
    phi = list(table.delta_odd)
    sep = find_separating(L, phi)
    return _finish(L, x, sep.h, "homogeneous", {"odd": phi}, phi, sep)


def pair_with_h(L: SuperAlgebra, x: Sequence, h_coeffs: Sequence) -> GeneratorCertificate:
    """Certificate for ``x`` and the Cartan element with the given coefficients."""
    return verify_pair(L, x, cartan_vector(L, h_coeffs))


# -- Cartan type ------------------------------------------------------------------

def _cartan_case(L: SuperAlgebra) -> str:
    if L.family == "H":
        n = L.params[0]
        if n == 6:
            return "cartan_H6"
        if n % 2:
            return "cartan_Hodd"
    return "cartan_generic"


def cartan_pair(L: SuperAlgebra) -> GeneratorCertificate:
    """Generating pair for W, S, S~ and H built from the Z-grading."""
    table = weight_table(L)
    recipe = _cartan_case(L)
    pi = list(table.simple)
    x = balanced(L, "simple", table)
    if L.family == "W":
        # the degree derivation sum x_i d_i is the sum of the Cartan basis
        x = _add(x, [Fraction(1) if i in L.cartan else ZERO for i in range(L.dim)])
    deg = table.by_degree
    weights: Dict[str, List[Weight]] = {}
    if recipe == "cartan_Hodd":
        a1 = _pick(deg[1], pi)
        zero = tuple(ZERO for _ in L.cartan)
        x = _add(x, _root_vector(L, table, zero, degree=-1), _root_vector(L, table, a1, degree=1))
        weights = {"-1": [zero], "1": [a1]}
    elif recipe == "cartan_H6":
        comps = table.components
        am = _pick(deg[-1], pi)
        a1 = _pick(comps[1], pi, [am])
        a2 = _pick(comps[2], pi, [am, a1])
        x = _add(x, _root_vector(L, table, am, degree=-1),
                 _root_vector(L, table, a1, degree=1, component=1),
                 _root_vector(L, table, a2, degree=1, component=2))
        weights = {"-1": [am], "1": [a1, a2]}
    else:
        t = L.height if L.family in ("W", "S") else 1
        am = _pick(deg[-1], pi)
        at = _pick(deg[t], pi, [am])
        x = _add(x, _root_vector(L, table, am, degree=-1), _root_vector(L, table, at, degree=t))
        weights = {"-1": [am], str(t): [at]}
    phi = sorted(set(pi) | {w for ws in weights.values() for w in ws})
    sep = find_separating(L, phi)
    return _finish(L, x, sep.h, recipe, weights, phi, sep)


def construct_pair(L: SuperAlgebra, homogeneous: bool = False) -> GeneratorCertificate:
    """Dispatch to the recipe matching the family of ``L``."""
    if homogeneous:
        return homogeneous_pair(L)
    if L.family in ("W", "S", "Stilde", "H"):
        return cartan_pair(L)
    if L.family == "gl":
        return gl_pair(L)
    return classical_pair(L)


def gl_pair(L: SuperAlgebra) -> GeneratorCertificate:
    """Even-part generators of gl-type algebras: ``x + z`` with a separating ``h``."""
    table = weight_table(L)
    x, y = even_part_pair(L, table)
    cert = _certificate(L, [x, y], "gl_variant")
    cert.ambient_dim = even_part_dim(L)
    return cert
