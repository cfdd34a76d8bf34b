"""Turn a concrete realization (matrices, derivations) into structure constants."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Optional, Sequence

from .errors import NotDiagonal, NotInSpan
from .exactlin import ZERO, Echelon, axpy
from .superalgebra import SuperAlgebra


class Realization:
    """A basis of concrete elements plus the bracket they obey.

    ``flatten`` maps an element to a sparse dict over sortable keys and
    ``unflatten`` inverts it.  Elements of ``modulo`` span an ideal that is
    quotiented out: their coordinates are dropped.
    """

    def __init__(self, elements: Sequence, bracket: Callable, flatten: Callable,
                 unflatten: Callable, modulo: Sequence = ()):
        self.elements = list(elements)
        self.bracket = bracket
        self.flatten = flatten
        self.unflatten = unflatten
        self.modulo = list(modulo)
        ech = Echelon(track=True)
        for i, e in enumerate(self.elements):
            if ech.add(flatten(e), tag=i) is None:
                raise ValueError(f"basis element {i} is linearly dependent on the previous ones")
        for k, e in enumerate(self.modulo):
            if ech.add(flatten(e), tag=("mod", k)) is None:
                raise ValueError("quotient vectors overlap the basis span")
        self._ech = ech

    @property
    def dim(self) -> int:
        return len(self.elements)

    def coords_sparse(self, obj) -> Dict[int, Fraction]:
        c = self._ech.express(self.flatten(obj))
        return {k: v for k, v in c.items() if isinstance(k, int)}

    def coords(self, obj) -> List[Fraction]:
        v = [ZERO] * self.dim
        for k, c in self.coords_sparse(obj).items():
            v[k] = c
        return v

    def element(self, vec: Sequence):
        acc: Dict[Hashable, Fraction] = {}
        for e, c in zip(self.elements, vec):
            if c:
                axpy(acc, Fraction(c), self.flatten(e))
        return self.unflatten(acc)

    def contains(self, obj) -> bool:
        try:
            self.coords_sparse(obj)
        except NotInSpan:
            return False
        return True


def assemble(name: str, family: str, params, real: Realization, parity: List[int], labels: List[str],
             cartan: List[int], degree: Optional[List[int]] = None,
             component: Optional[List[Optional[int]]] = None,
             epsilon=None) -> SuperAlgebra:
    d = real.dim
    structure = {}
    els = real.elements
    for i in range(d):
        for j in range(i, d):
            c = real.coords_sparse(real.bracket(els[i], els[j]))
            if not c:
                continue
            t = tuple(sorted(c.items()))
            structure[(i, j)] = t
            if i != j:
                sign = 1 if parity[i] & parity[j] else -1
                structure[(j, i)] = tuple((k, sign * v) for k, v in t)
    weights = []
    for i in range(d):
        w = []
        for c in cartan:
            key = (c, i)
            t = structure.get(key, ())
            if not t:
                w.append(ZERO)
            elif len(t) == 1 and t[0][0] == i:
                w.append(t[0][1])
            else:
                raise NotDiagonal(f"{labels[i]} is not an eigenvector of {labels[c]}")
        weights.append(tuple(w))
    L = SuperAlgebra(name=name, family=family, params=tuple(params), parity=list(parity),
                     labels=list(labels), structure=structure, cartan=list(cartan), weights=weights,
                     degree=degree, component=component, epsilon=epsilon, model=real)
    return L
