"""Structure-constant superalgebras and the closure machinery built on them.

Coordinates are taken with respect to a parity-homogeneous basis
``b_0 .. b_{d-1}``.  Public functions accept coordinate vectors as dense
sequences of scalars (the ``SuperVector`` of the docs); the kernels work
on sparse ``dict`` vectors internally.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch, NotAModule, SuperLieError
from .exactlin import ZERO, Echelon, axpy, dense, format_scalar, kernel, parse_scalar, scalar, sparse

Weight = Tuple[Fraction, ...]
Structure = Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]]

JACOBI_EXHAUSTIVE_MAX_DIM = 60
JACOBI_SAMPLES = 10_000
JACOBI_SEED = 20100301


@dataclass(eq=False)
class SuperAlgebra:
    name: str
    family: str
    params: Tuple[int, ...]
    parity: List[int]
    labels: List[str]
    structure: Structure
    cartan: List[int]
    weights: List[Weight]
    degree: Optional[List[int]] = None
    component: Optional[List[Optional[int]]] = None
    # epsilon[r] = coordinates of the r-th Cartan basis element in the
    # ambient diagonal (matrix diagonal, or coefficients of xi_i d_i)
    epsilon: Optional[List[Tuple[Fraction, ...]]] = None
    model: object = field(default=None, repr=False)

    def __post_init__(self):
        rows: List[Dict[int, Tuple[Tuple[int, Fraction], ...]]] = [dict() for _ in self.parity]
        for (i, j), t in self.structure.items():
            rows[i][j] = t
        self._rows = rows

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def even_indices(self) -> List[int]:
        return [i for i, p in enumerate(self.parity) if p == 0]

    def odd_indices(self) -> List[int]:
        return [i for i, p in enumerate(self.parity) if p == 1]

    def degree_indices(self, k: int) -> List[int]:
        if self.degree is None:
            raise ValueError(f"{self.name} carries no Z-grading")
        return [i for i, d in enumerate(self.degree) if d == k]

    @property
    def height(self) -> Optional[int]:
        return max(self.degree) if self.degree else None

    def unit(self, i: int) -> List[Fraction]:
        v = [ZERO] * self.dim
        v[i] = Fraction(1)
        return v

    def vector(self, coeffs: Dict[int, object]) -> List[Fraction]:
        v = [ZERO] * self.dim
        for i, c in coeffs.items():
            v[i] += scalar(c)
        return v

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"SuperAlgebra({self.name}, dim={self.dim})"


# -- brackets ---------------------------------------------------------------

def bracket_sparse(L: SuperAlgebra, x: Dict[int, Fraction], y: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    rows = L._rows
    for i, a in x.items():
        row = rows[i]
        if not row:
            continue
        for j, b in y.items():
            t = row.get(j)
            if t is None:
                continue
            ab = a * b
            for k, c in t:
                nv = out.get(k, ZERO) + ab * c
                if nv:
                    out[k] = nv
                else:
                    del out[k]
    return out


def _check_len(L: SuperAlgebra, v) -> None:
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in {L.name} of dimension {L.dim}")


def bracket(L: SuperAlgebra, x: Sequence, y: Sequence) -> List[Fraction]:
    """Bilinear extension of the structure constants to coordinate vectors."""
    _check_len(L, x)
    _check_len(L, y)
    return dense(bracket_sparse(L, sparse(x), sparse(y)), L.dim)


def parity_parts(L: SuperAlgebra, x: Sequence) -> Tuple[List[Fraction], List[Fraction]]:
    _check_len(L, x)
    even = [scalar(c) if p == 0 else ZERO for c, p in zip(x, L.parity)]
    odd = [scalar(c) if p == 1 else ZERO for c, p in zip(x, L.parity)]
    return even, odd


# -- subspaces ----------------------------------------------------------------

class Subspace:
    """A subspace of coordinate space, stored as sparse reduced echelon rows."""

    def __init__(self, ambient: int, rows: Sequence[Dict[int, Fraction]] = (), trace: Optional[List[int]] = None):
        ech = Echelon()
        for r in rows:
            ech.add(r)
        self.ambient = ambient
        self._ech = ech
        self.trace = trace

    @classmethod
    def _from_echelon(cls, ambient: int, ech: Echelon, trace=None) -> "Subspace":
        s = cls.__new__(cls)
        s.ambient = ambient
        s._ech = ech
        s.trace = trace
        return s

    @classmethod
    def span(cls, ambient: int, vectors: Sequence[Sequence]) -> "Subspace":
        return cls(ambient, [sparse(v) for v in vectors])

    @classmethod
    def coordinate(cls, ambient: int, indices) -> "Subspace":
        return cls(ambient, [{i: Fraction(1)} for i in indices])

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def rows(self) -> List[Dict[int, Fraction]]:
        return self._ech.sorted_rows()

    @property
    def basis(self) -> List[List[Fraction]]:
        return [dense(r, self.ambient) for r in self.rows]

    @property
    def pivots(self) -> List[int]:
        return sorted(self._ech.rows)

    def contains(self, v) -> bool:
        if isinstance(v, dict):
            return self._ech.contains(v)
        return self._ech.contains(sparse(v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.dim == other.dim and self.issubset(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, self.rows + other.rows)

    def intersects_trivially(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim + other.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def even_part(L: SuperAlgebra) -> Subspace:
    return Subspace.coordinate(L.dim, L.even_indices())


def odd_part(L: SuperAlgebra) -> Subspace:
    return Subspace.coordinate(L.dim, L.odd_indices())


def degree_part(L: SuperAlgebra, k: int) -> Subspace:
    return Subspace.coordinate(L.dim, L.degree_indices(k))


def whole(L: SuperAlgebra) -> Subspace:
    return Subspace.coordinate(L.dim, range(L.dim))


def closure(L: SuperAlgebra, gens: Sequence[Sequence]) -> Subspace:
    """Subalgebra generated by ``gens`` (as an ungraded subspace).

    Breadth-first: every vector that enlarges the span is bracketed with
    all earlier ones.  ``trace`` on the result lists the dimension after
    the seeding and after each round.
    """
    for g in gens:
        _check_len(L, g)
    return _closure_sparse(L, [sparse(g) for g in gens])


def _closure_sparse(L: SuperAlgebra, gens: Sequence[Dict[int, Fraction]]) -> Subspace:
    dim = L.dim
    ech = Echelon()
    found: List[Dict[int, Fraction]] = []
    for g in gens:
        r = ech.add(g)
        if r is not None:
            found.append(dict(r))
    trace = [ech.rank]
    done = 0
    while done < len(found) and ech.rank < dim:
        end = len(found)
        for i in range(done, end):
            vi = found[i]
            for j in range(i + 1):
                b = bracket_sparse(L, found[j], vi)
                if b:
                    r = ech.add(b)
                    if r is not None:
                        found.append(dict(r))
                        if ech.rank == dim:
                            break
            if ech.rank == dim:
                break
        done = end
        trace.append(ech.rank)
    return Subspace._from_echelon(dim, ech, trace)


def module_closure(L: SuperAlgebra, acting: Subspace, seed) -> Subspace:
    """Least subspace containing ``seed`` and stable under ``ad`` of ``acting``.

    ``seed`` may be one coordinate vector or a list of them.
    """
    seeds = seed if seed and isinstance(seed[0], (list, tuple)) else [seed]
    ops = acting.rows
    ech = Echelon()
    queue = []
    for s in seeds:
        _check_len(L, s)
        r = ech.add(sparse(s))
        if r is not None:
            queue.append(dict(r))
    k = 0
    while k < len(queue):
        v = queue[k]
        k += 1
        for a in ops:
            b = bracket_sparse(L, a, v)
            if b:
                r = ech.add(b)
                if r is not None:
                    queue.append(dict(r))
    return Subspace._from_echelon(L.dim, ech)


def ideal_closure(L: SuperAlgebra, seed) -> Subspace:
    return module_closure(L, whole(L), seed)


def default_acting(L: SuperAlgebra) -> Subspace:
    """The null component L_0 for graded (Cartan type) algebras, else the even part."""
    if L.degree is not None:
        return degree_part(L, 0)
    return even_part(L)


def is_stable(L: SuperAlgebra, acting: Subspace, sub: Subspace) -> bool:
    for a in acting.rows:
        for s in sub.rows:
            b = bracket_sparse(L, a, s)
            if b and not sub.contains(b):
                return False
    return True


def module_components(L: SuperAlgebra, subspace: Subspace, acting: Optional[Subspace] = None) -> List[Subspace]:
    """Split a module into irreducible pieces generated by weight vectors.

    Candidate seeds are the basis vectors lying in ``subspace`` (falling
    back to its echelon rows).  Their module closures are taken smallest
    first and kept whenever they meet the pieces found so far trivially.
    """
    acting = acting if acting is not None else default_acting(L)
    if not is_stable(L, acting, subspace):
        raise NotAModule("subspace is not stable under the acting subalgebra")
    seeds = [L.unit(i) for i in range(L.dim) if subspace.contains({i: Fraction(1)})]
    if not seeds:
        seeds = subspace.basis
    closures = []
    seen = []
    for s in seeds:
        c = module_closure(L, acting, s)
        if any(c == t for t in seen):
            continue
        seen.append(c)
        closures.append(c)
    closures.sort(key=lambda c: (c.dim, c.pivots))
    parts: List[Subspace] = []
    total = Subspace(L.dim)
    for c in closures:
        if total.dim == subspace.dim:
            break
        if total.intersects_trivially(c):
            parts.append(c)
            total = total + c
    if total.dim != subspace.dim:
        raise SuperLieError("could not split the module into weight-vector generated pieces")
    return parts


def even_center(L: SuperAlgebra, indices: Optional[Sequence[int]] = None) -> Subspace:
    """Center of the subalgebra spanned by the given even basis vectors (default: all even ones)."""
    idx = list(indices) if indices is not None else L.even_indices()
    eqs: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for c, i in enumerate(idx):
        row = L._rows[i]
        for j in idx:
            for k, v in row.get(j, ()):
                eqs.setdefault((j, k), {})[c] = v
    mat = [[e.get(c, ZERO) for c in range(len(idx))] for e in eqs.values()]
    ker = kernel(mat, len(idx))
    vecs = []
    for v in ker:
        full = [ZERO] * L.dim
        for c, x in enumerate(v):
            full[idx[c]] = x
        vecs.append(full)
    return Subspace.span(L.dim, vecs)


# -- structural validation --------------------------------------------------

@dataclass
class StructureReport:
    ok: bool
    skew_ok: bool
    parity_ok: bool
    jacobi_ok: bool
    cartan_ok: bool
    graded: Optional[bool]
    jacobi_mode: str
    triples_checked: int
    counterexample: Optional[dict] = None

    def summary(self) -> str:
        flags = [f"skew={'ok' if self.skew_ok else 'FAIL'}",
                 f"parity={'ok' if self.parity_ok else 'FAIL'}",
                 f"jacobi={'ok' if self.jacobi_ok else 'FAIL'} ({self.jacobi_mode}, {self.triples_checked} triples)",
                 f"cartan={'ok' if self.cartan_ok else 'FAIL'}"]
        if self.graded is not None:
            flags.append(f"z-graded={'yes' if self.graded else 'no'}")
        return ("PASS " if self.ok else "FAIL ") + " ".join(flags)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok, "skew_ok": self.skew_ok, "parity_ok": self.parity_ok,
            "jacobi_ok": self.jacobi_ok, "cartan_ok": self.cartan_ok, "graded": self.graded,
            "jacobi_mode": self.jacobi_mode, "triples_checked": self.triples_checked,
            "counterexample": self.counterexample,
        }


def _unit(i: int) -> Dict[int, Fraction]:
    return {i: Fraction(1)}


def jacobi_defect(L: SuperAlgebra, i: int, j: int, k: int) -> Dict[int, Fraction]:
    """[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]] on basis vectors a, b, c."""
    a, b, c = _unit(i), _unit(j), _unit(k)
    out = bracket_sparse(L, a, bracket_sparse(L, b, c))
    axpy(out, Fraction(-1), bracket_sparse(L, bracket_sparse(L, a, b), c))
    sign = -1 if L.parity[i] & L.parity[j] else 1
    axpy(out, Fraction(-sign), bracket_sparse(L, b, bracket_sparse(L, a, c)))
    return out


def check_structure(L: SuperAlgebra, exhaustive_max: int = JACOBI_EXHAUSTIVE_MAX_DIM,
                    samples: int = JACOBI_SAMPLES, seed: int = JACOBI_SEED) -> StructureReport:
    """Validate super skew-symmetry, parity, super Jacobi and the Cartan weights.

    Jacobi is checked on every multiset of three basis indices when
    ``dim <= exhaustive_max``; once skew-symmetry holds this covers all
    ordered triples, since the identity is permutation-invariant up to
    sign.  Larger algebras get ``samples`` ordered triples drawn with a
    fixed seed.
    """
    d = L.dim
    counter = None
    skew_ok = parity_ok = True
    for i in range(d):
        for j in range(d):
            t_ij = dict(L._rows[i].get(j, ()))
            t_ji = dict(L._rows[j].get(i, ()))
            sign = 1 if L.parity[i] & L.parity[j] else -1
            if t_ij != {k: sign * c for k, c in t_ji.items()}:
                if skew_ok:
                    counter = counter or {"kind": "skew", "pair": [i, j]}
                skew_ok = False
            for k in t_ij:
                if L.parity[k] != L.parity[i] ^ L.parity[j]:
                    if parity_ok:
                        counter = counter or {"kind": "parity", "pair": [i, j], "output": k}
                    parity_ok = False

    jacobi_ok = True
    if d <= exhaustive_max:
        mode = "exhaustive"
        triples = combinations_with_replacement(range(d), 3)
    else:
        mode = "sampled"
        rng = random.Random(seed)
        triples = ((rng.randrange(d), rng.randrange(d), rng.randrange(d)) for _ in range(samples))
    n = 0
    for i, j, k in triples:
        n += 1
        if jacobi_defect(L, i, j, k):
            jacobi_ok = False
            counter = counter or {"kind": "jacobi", "triple": [i, j, k]}
            break

    cartan_ok = True
    for r, c in enumerate(L.cartan):
        if L.parity[c] != 0:
            cartan_ok = False
            counter = counter or {"kind": "cartan_parity", "index": c}
        for i in range(d):
            got = dict(L._rows[c].get(i, ()))
            lam = L.weights[i][r]
            want = {i: lam} if lam else {}
            if got != want:
                cartan_ok = False
                counter = counter or {"kind": "cartan_eigen", "cartan": c, "index": i}
                break

    graded = None
    if L.degree is not None:
        graded = True
        for (i, j), t in L.structure.items():
            if any(L.degree[k] != L.degree[i] + L.degree[j] for k, _ in t):
                graded = False
                break

    ok = skew_ok and parity_ok and jacobi_ok and cartan_ok
    return StructureReport(ok, skew_ok, parity_ok, jacobi_ok, cartan_ok, graded, mode, n, counter)


# -- serialization ----------------------------------------------------------

def to_dict(L: SuperAlgebra) -> dict:
    d = {
        "name": L.name,
        "family": L.family,
        "params": list(L.params),
        "dim": L.dim,
        "parity": list(L.parity),
        "labels": list(L.labels),
        "cartan": list(L.cartan),
        "weights": [[format_scalar(x) for x in w] for w in L.weights],
        "structure": [[i, j, k, format_scalar(c)]
                      for (i, j) in sorted(L.structure) for k, c in L.structure[(i, j)]],
    }
    if L.degree is not None:
        d["degree"] = list(L.degree)
    if L.component is not None:
        d["component"] = list(L.component)
    if L.epsilon is not None:
        d["epsilon"] = [[format_scalar(x) for x in e] for e in L.epsilon]
    return d


def from_dict(d: dict) -> SuperAlgebra:
    structure: Dict[Tuple[int, int], List[Tuple[int, Fraction]]] = {}
    for i, j, k, c in d["structure"]:
        structure.setdefault((i, j), []).append((k, parse_scalar(c)))
    L = SuperAlgebra(
        name=d["name"],
        family=d["family"],
        params=tuple(d["params"]),
        parity=list(d["parity"]),
        labels=list(d["labels"]),
        structure={key: tuple(v) for key, v in structure.items()},
        cartan=list(d["cartan"]),
        weights=[tuple(parse_scalar(x) for x in w) for w in d["weights"]],
        degree=list(d["degree"]) if "degree" in d else None,
        component=list(d["component"]) if "component" in d else None,
        epsilon=[tuple(parse_scalar(x) for x in e) for e in d["epsilon"]] if "epsilon" in d else None,
    )
    if L.dim != d["dim"]:
        raise DimensionMismatch("dim field disagrees with the parity list")
    return L


def dumps(L: SuperAlgebra) -> str:
    return json.dumps(to_dict(L), sort_keys=True) + "\n"


def loads(s: str) -> SuperAlgebra:
    return from_dict(json.loads(s))
