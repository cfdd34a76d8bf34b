"""Weights, root sets, simple roots, separating Cartan elements and eigencomponents.

A weight is the tuple of its values on the stored Cartan basis of an
algebra, so an element ``h = sum c_r h_r`` of the Cartan span acts on a
vector of weight ``w`` by the scalar ``sum c_r w[r]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import NotDiagonal, NotRegularizable, NotSemisimpleAction, OddSpacesNotOneDim
from .exactlin import ZERO, format_scalar, scalar, solve_vandermonde, sparse
from .superalgebra import SuperAlgebra, bracket_sparse, check_structure

Weight = Tuple[Fraction, ...]


def zero_weight(L: SuperAlgebra) -> Weight:
    return tuple(ZERO for _ in L.cartan)


def epsilon_weight(L: SuperAlgebra, coeffs: Mapping[int, object]) -> Weight:
    """The weight ``sum c_i eps_i`` (1-based ``i``) restricted to the Cartan basis of ``L``."""
    if L.epsilon is None:
        raise ValueError(f"{L.name} does not record epsilon coordinates")
    return tuple(sum((scalar(c) * e[i - 1] for i, c in coeffs.items()), ZERO) for e in L.epsilon)


def format_weight(w: Weight) -> List[str]:
    return [format_scalar(x) for x in w]


@dataclass
class RootTable:
    algebra: str
    spaces: Dict[Weight, List[int]]
    delta_even: List[Weight]
    delta_odd: List[Weight]
    by_degree: Optional[Dict[int, List[Weight]]] = None
    components: Optional[Dict[int, List[Weight]]] = None
    graded: bool = False
    simple: List[Weight] = field(default_factory=list)

    @property
    def delta(self) -> List[Weight]:
        return sorted(set(self.delta_even) | set(self.delta_odd))

    @property
    def reductive_roots(self) -> List[Weight]:
        """Roots of the reductive Lie algebra whose simple roots matter: Delta_0bar, or Delta_0 when Z-graded."""
        if self.graded:
            return [w for w in self.by_degree.get(0, []) if any(w)]
        return self.delta_even

    def to_dict(self) -> dict:
        d = {
            "algebra": self.algebra,
            "spaces": [{"weight": format_weight(w), "indices": idx} for w, idx in sorted(self.spaces.items())],
            "delta_even": [format_weight(w) for w in self.delta_even],
            "delta_odd": [format_weight(w) for w in self.delta_odd],
            "simple_roots": [format_weight(w) for w in self.simple],
        }
        if self.by_degree is not None:
            d["by_degree"] = {str(k): [format_weight(w) for w in ws] for k, ws in sorted(self.by_degree.items())}
        if self.components is not None:
            d["components"] = {str(k): [format_weight(w) for w in ws] for k, ws in sorted(self.components.items())}
        return d


def weight_table(L: SuperAlgebra, verify: bool = True) -> RootTable:
    """Group the non-Cartan basis by weight and record the marked weight sets."""
    if verify and not check_structure(L, exhaustive_max=-1, samples=0).cartan_ok:
        raise NotDiagonal(f"{L.name}: some basis vector is not a Cartan eigenvector")
    cartan = set(L.cartan)
    spaces: Dict[Weight, List[int]] = {}
    even, odd = set(), set()
    by_degree: Dict[int, set] = {}
    comps: Dict[int, set] = {}
    for i in range(L.dim):
        if i in cartan:
            continue
        w = L.weights[i]
        spaces.setdefault(w, []).append(i)
        (odd if L.parity[i] else even).add(w)
        if L.degree is not None:
            by_degree.setdefault(L.degree[i], set()).add(w)
        if L.component is not None and L.component[i] is not None:
            comps.setdefault(L.component[i], set()).add(w)
    table = RootTable(
        algebra=L.name,
        spaces=spaces,
        delta_even=sorted(w for w in even if any(w)),
        delta_odd=sorted(odd),
        by_degree={k: sorted(v) for k, v in by_degree.items()} if L.degree is not None else None,
        components={k: sorted(v) for k, v in comps.items()} if comps else None,
        graded=L.degree is not None,
    )
    table.simple = simple_roots(table)
    return table


def space(table: RootTable, L: SuperAlgebra, w: Weight, parity: Optional[int] = None,
          degree: Optional[int] = None, component: Optional[int] = None) -> List[int]:
    """Basis indices of the weight space ``L^w``, optionally filtered."""
    out = []
    for i in table.spaces.get(tuple(w), []):
        if parity is not None and L.parity[i] != parity:
            continue
        if degree is not None and L.degree[i] != degree:
            continue
        if component is not None and (L.component is None or L.component[i] != component):
            continue
        out.append(i)
    return out


# -- functionals on the Cartan span ------------------------------------------

def evaluate(w: Sequence[Fraction], h: Sequence) -> Fraction:
    """Value of weight ``w`` on the Cartan element with coefficients ``h``."""
    return sum((a * scalar(c) for a, c in zip(w, h)), ZERO)


def _ordered_values(height: int) -> List[int]:
    vals = [0]
    for k in range(1, height + 1):
        vals += [k, -k]
    return vals


def coefficient_tuples(rank: int, max_height: int = 10_000) -> Iterator[Tuple[int, ...]]:
    """Integer tuples by increasing max-abs height; within a height, lexicographic in 0, 1, -1, 2, -2, ..."""
    for height in range(1, max_height + 1):
        vals = _ordered_values(height)
        for t in product(vals, repeat=rank):
            if max(abs(x) for x in t) == height:
                yield t


def simple_roots(table_or_roots) -> List[Weight]:
    """Simple roots for the positive system cut out by a regular functional.

    The functional tried first is ``(r, r-1, ..., 1)`` on the Cartan basis;
    if some root vanishes on it the search continues through
    :func:`coefficient_tuples`.  Simple roots are positive roots that are
    not a sum of two positive roots.
    """
    roots = table_or_roots.reductive_roots if isinstance(table_or_roots, RootTable) else list(table_or_roots)
    roots = sorted(set(tuple(r) for r in roots if any(r)))
    if not roots:
        return []
    rank = len(roots[0])

    def regular(c) -> bool:
        return all(evaluate(r, c) != 0 for r in roots)

    first = tuple(range(rank, 0, -1))
    c = first if regular(first) else next((t for t in coefficient_tuples(rank, 50) if regular(t)), None)
    if c is None:
        raise NotRegularizable("no regular functional found")
    positive = [r for r in roots if evaluate(r, c) > 0]
    pos_set = set(positive)
    simple = []
    for r in positive:
        decomposable = any(tuple(a - b for a, b in zip(r, s)) in pos_set for s in positive)
        if not decomposable:
            simple.append(r)
    return sorted(simple, key=lambda r: tuple(-x for x in r))


@dataclass
class SeparatingElement:
    h: Tuple[Fraction, ...]
    values: Dict[Weight, Fraction]

    def witness(self) -> List[Tuple[Weight, Fraction]]:
        return sorted(self.values.items())


def separates(h: Sequence, weights: Iterable[Sequence]) -> bool:
    """True when the values on ``weights`` are pairwise distinct and differ from 0 (except on the zero weight)."""
    seen = {}
    for w in weights:
        w = tuple(w)
        v = evaluate(w, h)
        if any(w) and v == 0:
            return False
        if v in seen and seen[v] != w:
            return False
        seen[v] = w
    return True


def find_separating(L: SuperAlgebra, phi: Iterable[Sequence], start=None) -> SeparatingElement:
    """First Cartan element (by :func:`coefficient_tuples`) separating ``phi`` and 0."""
    phi = sorted(set(tuple(w) for w in phi))
    rank = L.rank
    candidates = coefficient_tuples(rank)
    for c in candidates:
        if separates(c, phi):
            h = tuple(Fraction(x) for x in c)
            return SeparatingElement(h, {w: evaluate(w, h) for w in phi})
    raise NotRegularizable("separator search exhausted")  # pragma: no cover


def cartan_vector(L: SuperAlgebra, h: Sequence) -> List[Fraction]:
    """Coordinate vector of the Cartan element with coefficients ``h``."""
    v = [ZERO] * L.dim
    for c, x in zip(L.cartan, h):
        v[c] += scalar(x)
    return v


def cartan_coefficients(L: SuperAlgebra, v: Sequence) -> Optional[Tuple[Fraction, ...]]:
    cart = set(L.cartan)
    if any(x and i not in cart for i, x in enumerate(v)):
        return None
    return tuple(scalar(v[c]) for c in L.cartan)


# -- eigencomponents ------------------------------------------------------------

def split_by_ad(a: Sequence, x: Sequence, L: SuperAlgebra,
                eigenvalues: Optional[Sequence] = None) -> List[Tuple[Fraction, List[Fraction]]]:
    """Eigencomponents of ``x`` under ``ad a`` from the iterates ``(ad a)^k x``.

    For ``a`` in the Cartan span the eigenvalues are read off the weights
    of the support of ``x``; otherwise they must be supplied.  Components
    are returned in increasing eigenvalue order.
    """
    xs = sparse(x)
    if eigenvalues is None:
        h = cartan_coefficients(L, a)
        if h is None:
            raise NotSemisimpleAction("eigenvalues must be given when a is not in the Cartan span")
        eigenvalues = sorted({evaluate(L.weights[i], h) for i in xs})
    nodes = sorted({scalar(e) for e in eigenvalues})
    if not xs:
        return []
    asp = sparse(a)
    iterates = [xs]
    for _ in range(len(nodes)):
        iterates.append(bracket_sparse(L, asp, iterates[-1]))
    rhs = [[v.get(i, ZERO) for i in range(L.dim)] for v in iterates[:len(nodes)]]
    comps = solve_vandermonde(nodes, rhs)
    # the next iterate must be reproduced, otherwise x is not a sum of these eigenvectors
    top = [ZERO] * L.dim
    for lam, comp in zip(nodes, comps):
        f = lam ** len(nodes)
        for i, c in enumerate(comp):
            if c:
                top[i] += f * c
    if sparse(top) != iterates[-1]:
        raise NotSemisimpleAction("iterates do not close on the given eigenvalues")
    return [(lam, comp) for lam, comp in zip(nodes, comps) if any(comp)]


def weight_projection(L: SuperAlgebra, x: Sequence) -> Dict[Weight, List[Fraction]]:
    """Direct projection of ``x`` onto weight spaces (Cartan span included as weight 0)."""
    out: Dict[Weight, List[Fraction]] = {}
    for i, c in enumerate(x):
        if c:
            out.setdefault(L.weights[i], [ZERO] * L.dim)[i] = scalar(c)
    return out


# -- balanced elements ----------------------------------------------------------

def odd_spaces_one_dim(L: SuperAlgebra, table: Optional[RootTable] = None) -> bool:
    table = table or weight_table(L, verify=False)
    return all(len(space(table, L, w, parity=1)) == 1 for w in table.delta_odd)


def balanced(L: SuperAlgebra, mode: str = "full", table: Optional[RootTable] = None) -> List[Fraction]:
    """Coefficient-1 sum of one root vector per weight.

    ``full``: every even root (degree-0 roots for Z-graded algebras);
    ``simple``: the simple roots; ``odd``: every odd weight.  The first
    basis vector of each weight space is used.
    """
    table = table or weight_table(L, verify=False)
    v = [ZERO] * L.dim
    if mode == "odd":
        if L.degree is None and not odd_spaces_one_dim(L, table):
            raise OddSpacesNotOneDim(f"{L.name} has an odd weight space of dimension > 1")
        for w in table.delta_odd:
            v[space(table, L, w, parity=1)[0]] += 1
        return v
    if mode == "full":
        roots = table.reductive_roots
    elif mode == "simple":
        roots = table.simple
    else:
        raise ValueError(f"unknown mode {mode!r}")
    deg = 0 if table.graded else None
    for w in roots:
        v[space(table, L, w, parity=0, degree=deg)[0]] += 1
    return v
