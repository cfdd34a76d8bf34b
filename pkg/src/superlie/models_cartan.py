"""The Cartan type superalgebras W(n), S(n), S~(2m) and H(n) inside der Lambda(n).

Basis vectors are grouped by Z-degree.  Degree 0 starts with the
standard Cartan basis; the remaining vectors of S and H are the first
linearly independent members of their natural spanning sets, D_ij(x^u)
ordered by (u, i, j) and D_H(x^u) ordered by u.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

from .errors import BadParameters
from .exactlin import Echelon, ZERO
from .grassmann import (GrassmannElement, Superderivation, d_h, d_ij, mask_of,
                        sd_bracket, standard_involution)
from .realize import Realization, assemble
from .superalgebra import SuperAlgebra, degree_part, module_components

CARTAN_FAMILIES = ("W", "S", "Stilde", "H")


@dataclass(frozen=True)
class CartanFamilySpec:
    family: str
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        lower = {"W": 3, "S": 4, "Stilde": 4, "H": 5}
        if self.family not in lower:
            raise BadParameters(f"unknown Cartan family {self.family!r}")
        if self.n < lower[self.family]:
            raise BadParameters(f"{self.family}(n) needs n >= {lower[self.family]}")
        if self.family == "Stilde" and self.n % 2:
            raise BadParameters("S~(2m) needs an even arity")

    @property
    def name(self) -> str:
        return f"{self.family}({self.n})"

    @property
    def height(self) -> int:
        return {"W": self.n - 1, "S": self.n - 2, "Stilde": self.n - 2, "H": self.n - 3}[self.family]


def _spec(spec) -> CartanFamilySpec:
    if isinstance(spec, CartanFamilySpec):
        return spec
    return CartanFamilySpec(*spec)


def _euler(n: int, i: int) -> Superderivation:
    return Superderivation.term(n, [i], i)


def cartan_basis(spec) -> List[Superderivation]:
    """The standard Cartan basis of the null component L_0."""
    spec = _spec(spec)
    n = spec.n
    if spec.family == "W":
        return [_euler(n, i) for i in range(1, n + 1)]
    if spec.family in ("S", "Stilde"):
        return [_euler(n, 1) - _euler(n, j) for j in range(2, n + 1)]
    m = n // 2
    prime = standard_involution(n)
    return [_euler(n, i) - _euler(n, prime(i)) for i in range(1, m + 1)]


def _independent(candidates, seed=()) -> List[Superderivation]:
    ech = Echelon()
    out = []
    for d in list(seed) + list(candidates):
        if d and ech.add(d.terms) is not None:
            out.append(d)
    return out


def _w_degree(n: int, k: int) -> List[Superderivation]:
    return [Superderivation.term(n, u, i) for u in combinations(range(1, n + 1), k + 1)
            for i in range(1, n + 1)]


def _s_degree(n: int, k: int) -> List[Superderivation]:
    out = []
    for u in combinations(range(1, n + 1), k + 2):
        f = GrassmannElement.monomial(n, u)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                out.append(d_ij(i, j, f))
    return out


def _h_degree(n: int, k: int) -> List[Superderivation]:
    prime = standard_involution(n)
    return [d_h(u, n, prime) for u in combinations(range(1, n + 1), k + 2)]


def graded_pieces(spec) -> List[Tuple[int, List[Superderivation]]]:
    """Basis derivations per degree, Cartan vectors leading degree 0."""
    spec = _spec(spec)
    n, f = spec.n, spec.family
    cart = cartan_basis(spec)
    pieces = []
    for k in range(-1, spec.height + 1):
        seed = cart if k == 0 else ()
        if f == "W":
            base = [d for d in _w_degree(n, k) if not (k == 0 and d in cart)]
            items = list(seed) + base
        elif f == "H":
            items = _independent(_h_degree(n, k), seed)
        elif f == "Stilde" and k == -1:
            top = mask_of(range(1, n + 1))
            items = [Superderivation(n, {(0, j): 1, (top, j): 1}) for j in range(1, n + 1)]
        else:
            items = _independent(_s_degree(n, k), seed)
        pieces.append((k, items))
    return pieces


def _assemble(spec: CartanFamilySpec, pieces, component_of=None) -> SuperAlgebra:
    n = spec.n
    elements: List[Superderivation] = []
    degree: List[int] = []
    for k, items in pieces:
        elements.extend(items)
        degree.extend([k] * len(items))
    parity = [d.parity() for d in elements]
    ncart = len(cartan_basis(spec))
    start0 = degree.index(0)
    cartan = list(range(start0, start0 + ncart))
    real = Realization(elements, sd_bracket, lambda d: d.terms, lambda t: Superderivation(n, t))
    labels = [str(d) for d in elements]
    epsilon = [tuple(elements[c].terms.get((1 << (i - 1), i), ZERO) for i in range(1, n + 1))
               for c in cartan]
    component = None
    if component_of is not None:
        component = [component_of.get(d) for d in elements]
    return assemble(spec.name, spec.family, (n,), real, parity, labels, cartan,
                    degree=degree, component=component, epsilon=epsilon)


def _weight_basis(L: SuperAlgebra, sub) -> List[List[Fraction]]:
    # a Cartan-stable subspace is the sum of its weight pieces; project each row onto them
    ech = Echelon()
    out = []
    for row in sub.rows:
        by_weight = {}
        for i, c in row.items():
            by_weight.setdefault(L.weights[i], {})[i] = c
        for w in sorted(by_weight):
            piece = by_weight[w]
            if ech.add(piece) is not None:
                out.append(L.vector(piece))
    return out


def build_cartan(spec) -> SuperAlgebra:
    spec = _spec(spec)
    pieces = graded_pieces(spec)
    L = _assemble(spec, pieces)
    if spec.family == "H" and spec.n == 6:
        # rebase degree 1 on weight vectors of the two irreducible L_0-components
        comps = module_components(L, degree_part(L, 1))
        tag = {}
        new_deg1 = []
        for c, sub in enumerate(comps, start=1):
            for v in _weight_basis(L, sub):
                d = L.model.element(v)
                tag[d] = c
                new_deg1.append(d)
        pieces = [(k, new_deg1 if k == 1 else items) for k, items in pieces]
        L = _assemble(spec, pieces, component_of=tag)
    return L


def spanning_rank(spec, k: int) -> int:
    """Rank of the natural spanning set of degree ``k``, by row reduction."""
    spec = _spec(spec)
    n = spec.n
    gen = {"W": _w_degree, "S": _s_degree, "Stilde": _s_degree, "H": _h_degree}[spec.family]
    ech = Echelon()
    for d in gen(n, k):
        if d:
            ech.add(d.terms)
    return ech.rank


def derivation(L: SuperAlgebra, v) -> Superderivation:
    """The derivation with coordinate vector ``v``."""
    return L.model.element(v)


def element(L: SuperAlgebra, d: Superderivation) -> List[Fraction]:
    return L.model.coords(d)
