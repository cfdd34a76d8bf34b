"""Matrix realizations of the classical families gl, A, B, C, D, P, Q.

Every model is a space of ``(p|q)`` supermatrices whose basis consists of
parity-homogeneous eigenvectors of a diagonal Cartan subalgebra.  Basis
order: Cartan elements, then even root vectors, then odd vectors, each
group row-major by the leading matrix unit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadParameters, ShapeMismatch
from .exactlin import ONE, ZERO, axpy, kernel, scalar
from .realize import Realization, assemble
from .superalgebra import SuperAlgebra, even_center  # noqa: F401  (re-exported)

FAMILIES = ("gl", "A", "B", "C", "D", "P", "Q")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        validate(self)

    @property
    def name(self) -> str:
        if self.family == "gl":
            return "gl({}|{})".format(*self.params)
        return f"{self.family}({','.join(str(x) for x in self.params)})"


def validate(spec: FamilySpec) -> None:
    f, p = spec.family, spec.params
    arity = {"gl": 2, "A": 2, "B": 2, "D": 2, "C": 1, "P": 1, "Q": 1}
    if f not in arity:
        raise BadParameters(f"unknown classical family {f!r}")
    if len(p) != arity[f]:
        raise BadParameters(f"{f} takes {arity[f]} integer parameter(s), got {len(p)}")
    if f == "gl":
        if p[0] < 1 or p[1] < 1:
            raise BadParameters("gl(p|q) needs p >= 1 and q >= 1")
    elif f == "A":
        m, n = p
        if m < 0 or n < 0:
            raise BadParameters("A(m,n) needs m,n >= 0")
        if m == n and n <= 0:
            raise BadParameters("A(n,n) needs n > 0")
    elif f == "B":
        m, n = p
        if m < 0 or n <= 0:
            raise BadParameters("B(m,n) needs m >= 0, n > 0")
    elif f == "D":
        m, n = p
        if m < 2 or n <= 0:
            raise BadParameters("D(m,n) needs m >= 2, n > 0")
    elif f == "C" and p[0] < 2:
        raise BadParameters("C(n) needs n >= 2")
    elif f == "P" and p[0] < 2:
        raise BadParameters("P(n) needs n >= 2")
    elif f == "Q" and p[0] < 2:
        raise BadParameters("Q(n) needs n >= 2")


# -- supermatrices ----------------------------------------------------------

@dataclass
class SuperMatrix:
    """A ``(p|q)`` block matrix ``[[A, B], [C, D]]`` stored sparsely, 0-based."""

    p: int
    q: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def unit(cls, p: int, q: int, r: int, c: int, coef=1) -> "SuperMatrix":
        return cls(p, q, {(r, c): scalar(coef)})

    @classmethod
    def from_dense(cls, p: int, q: int, rows) -> "SuperMatrix":
        n = p + q
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ShapeMismatch(f"expected a {n}x{n} matrix")
        return cls(p, q, {(i, j): scalar(x) for i, r in enumerate(rows) for j, x in enumerate(r) if x})

    @property
    def size(self) -> int:
        return self.p + self.q

    def to_dense(self) -> List[List[Fraction]]:
        out = [[ZERO] * self.size for _ in range(self.size)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def is_odd_entry(self, r: int, c: int) -> bool:
        return (r < self.p) != (c < self.p)

    def parity(self) -> int:
        ps = {1 if self.is_odd_entry(r, c) else 0 for r, c in self.entries}
        if len(ps) > 1:
            raise ValueError("supermatrix is not parity-homogeneous")
        return ps.pop() if ps else 0

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        out = dict(self.entries)
        axpy(out, ONE, other.entries)
        return SuperMatrix(self.p, self.q, out)

    def scale(self, a) -> "SuperMatrix":
        a = scalar(a)
        return SuperMatrix(self.p, self.q, {k: a * x for k, x in self.entries.items() if a * x})

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (r, c), x in other.entries.items():
            by_row.setdefault(r, []).append((c, x))
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                v = out.get((i, j), ZERO) + x * y
                if v:
                    out[(i, j)] = v
                else:
                    out.pop((i, j), None)
        return SuperMatrix(self.p, self.q, out)

    def __eq__(self, other):
        return isinstance(other, SuperMatrix) and (self.p, self.q) == (other.p, other.q) \
            and {k: v for k, v in self.entries.items() if v} == {k: v for k, v in other.entries.items() if v}


def supertrace(x) -> Fraction:
    """``tr A - tr D`` of a supermatrix."""
    if not isinstance(x, SuperMatrix):
        raise ShapeMismatch("supertrace needs a SuperMatrix with declared block sizes")
    s = ZERO
    for (r, c), v in x.entries.items():
        if r == c:
            s += v if r < x.p else -v
    return s


def super_bracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """``xy - (-1)^{|x||y|} yx``, extended bilinearly over parity components."""
    total = SuperMatrix(x.p, x.q)
    for px, a in _parts(x):
        for py, b in _parts(y):
            ab, ba = a @ b, b @ a
            total = total + (ab + ba if px & py else ab - ba)
    return total


def _parts(x: SuperMatrix):
    even = {k: v for k, v in x.entries.items() if not x.is_odd_entry(*k)}
    odd = {k: v for k, v in x.entries.items() if x.is_odd_entry(*k)}
    if even:
        yield 0, SuperMatrix(x.p, x.q, even)
    if odd:
        yield 1, SuperMatrix(x.p, x.q, odd)


def matrix_label(m: SuperMatrix) -> str:
    parts = []
    for k, ((r, c), v) in enumerate(sorted(m.entries.items())):
        sign = "-" if v < 0 else ("" if k == 0 else "+")
        a = abs(v)
        coef = "" if a == 1 else f"{a}*"
        parts.append(f"{sign}{coef}e{r + 1}{c + 1}" if m.size < 10 else f"{sign}{coef}e{r + 1},{c + 1}")
    return "".join(parts) or "0"


# -- model builders ---------------------------------------------------------

class _Model:
    def __init__(self, p: int, q: int):
        self.p, self.q = p, q
        self.cartan: List[SuperMatrix] = []
        self.even: List[SuperMatrix] = []
        self.odd: List[SuperMatrix] = []
        self.odd_component: List[Optional[int]] = []
        self.modulo: List[SuperMatrix] = []

    def E(self, r: int, c: int, coef=1) -> SuperMatrix:
        return SuperMatrix.unit(self.p, self.q, r, c, coef)


def _gl_like(p: int, q: int, full_cartan: bool, with_center: bool) -> _Model:
    mod = _Model(p, q)
    n = p + q
    if full_cartan:
        mod.cartan = [mod.E(i, i) for i in range(n)]
    else:
        for lo, hi in ((0, p), (p, n)):
            for i in range(lo, hi - 1):
                mod.cartan.append(mod.E(i, i) - mod.E(i + 1, i + 1))
        if with_center:
            # ((q)I_p | (p)I_q) is supertraceless and central in the even part
            z = SuperMatrix(p, q, {(i, i): Fraction(q if i < p else p) for i in range(n)})
            mod.cartan.append(z)
    for r in range(n):
        for c in range(n):
            if r == c:
                continue
            if (r < p) == (c < p):
                mod.even.append(mod.E(r, c))
            else:
                mod.odd.append(mod.E(r, c))
                mod.odd_component.append(1 if r < p else 2)
    return mod


def _osp(M: int, N: int) -> _Model:
    """osp(M|2N) preserving the antidiagonal even-symmetric / odd-skew form."""
    p, q = M, 2 * N
    n = p + q
    mod = _Model(p, q)

    def bar(a: int) -> int:
        return M - 1 - a if a < M else M + (2 * N - 1 - (a - M))

    J: Dict[Tuple[int, int], Fraction] = {}
    for a in range(M):
        J[(a, bar(a))] = ONE
    for i in range(2 * N):
        J[(M + i, bar(M + i))] = ONE if i < N else -ONE
    Jm = SuperMatrix(p, q, J)

    def st(x: SuperMatrix) -> SuperMatrix:
        out = {}
        for (r, c), v in x.entries.items():
            out[(c, r)] = -v if (r < p and c >= p) else v
        return SuperMatrix(p, q, out)

    def cond(x: SuperMatrix) -> Dict[Tuple[int, int], Fraction]:
        return (st(x) @ Jm + Jm @ x).entries

    seen = set()
    for r in range(n):
        for c in range(n):
            group = sorted({(r, c), (bar(c), bar(r))})
            key = tuple(group)
            if key in seen:
                continue
            seen.add(key)
            conds = [cond(mod.E(*g)) for g in group]
            keys = sorted(set().union(*conds))
            mat = [[cd.get(k, ZERO) for cd in conds] for k in keys]
            sols = kernel(mat, len(group)) if keys else [[ONE if i == j else ZERO for i in range(len(group))]
                                                          for j in range(len(group))]
            for s in sols:
                lead = next(x for x in s if x)
                x = SuperMatrix(p, q)
                for g, coef in zip(group, s):
                    if coef:
                        x = x + mod.E(*g, coef / lead)
                if r == c:
                    mod.cartan.append(x)
                elif (r < p) == (c < p):
                    mod.even.append(x)
                else:
                    mod.odd.append(x)
                    mod.odd_component.append(None)
    return mod


def _periplectic(n: int) -> _Model:
    N = n + 1
    mod = _Model(N, N)
    E = mod.E
    for a in range(N - 1):
        mod.cartan.append(E(a, a) - E(a + 1, a + 1) - E(N + a, N + a) + E(N + a + 1, N + a + 1))
    for a in range(N):
        for b in range(N):
            if a != b:
                mod.even.append(E(a, b) - E(N + b, N + a))
    for a in range(N):
        for b in range(a, N):
            mod.odd.append(E(a, N + b) if a == b else E(a, N + b) + E(b, N + a))
            mod.odd_component.append(1)
    for a in range(N):
        for b in range(a + 1, N):
            mod.odd.append(E(N + a, b) - E(N + b, a))
            mod.odd_component.append(2)
    return mod


def _queer(n: int) -> _Model:
    N = n + 1
    mod = _Model(N, N)
    E = mod.E
    for a in range(N - 1):
        mod.cartan.append(E(a, a) - E(a + 1, a + 1) + E(N + a, N + a) - E(N + a + 1, N + a + 1))
    for a in range(N):
        for b in range(N):
            if a != b:
                mod.even.append(E(a, b) + E(N + a, N + b))
    for a in range(N - 1):
        mod.odd.append(E(a, N + a) + E(N + a, a) - E(a + 1, N + a + 1) - E(N + a + 1, a + 1))
        mod.odd_component.append(None)
    for a in range(N):
        for b in range(N):
            if a != b:
                mod.odd.append(E(a, N + b) + E(N + a, b))
                mod.odd_component.append(None)
    mod.modulo = [SuperMatrix(N, N, {(i, i): ONE for i in range(2 * N)})]
    return mod


def _model_for(spec: FamilySpec) -> _Model:
    f, prm = spec.family, spec.params
    if f == "gl":
        return _gl_like(prm[0], prm[1], full_cartan=True, with_center=False)
    if f == "A":
        m, n = prm
        mod = _gl_like(m + 1, n + 1, full_cartan=False, with_center=(m != n))
        if m == n:
            mod.modulo = [SuperMatrix(m + 1, n + 1, {(i, i): ONE for i in range(2 * n + 2)})]
        return mod
    if f == "B":
        return _osp(2 * prm[0] + 1, prm[1])
    if f == "D":
        return _osp(2 * prm[0], prm[1])
    if f == "C":
        mod = _osp(2, prm[0] - 1)
        mod.odd_component = None  # filled from the center's eigenvalues
        return mod
    if f == "P":
        return _periplectic(prm[0])
    return _queer(prm[0])


def build_classical(spec) -> SuperAlgebra:
    """Structure constants of a classical family member (or gl(p|q))."""
    if not isinstance(spec, FamilySpec):
        spec = FamilySpec(*spec)
    mod = _model_for(spec)
    elements = mod.cartan + mod.even + mod.odd
    parity = [0] * (len(mod.cartan) + len(mod.even)) + [1] * len(mod.odd)
    cartan = list(range(len(mod.cartan)))
    p, q = mod.p, mod.q
    real = Realization(elements, super_bracket, lambda x: x.entries,
                       lambda d: SuperMatrix(p, q, dict(d)), modulo=mod.modulo)
    labels = [matrix_label(e) for e in elements]
    epsilon = [tuple(h.entries.get((i, i), ZERO) for i in range(p + q)) for h in mod.cartan]
    component = None
    if mod.odd_component is not None and any(c is not None for c in mod.odd_component):
        component = [None] * (len(mod.cartan) + len(mod.even)) + list(mod.odd_component)
    L = assemble(spec.name, spec.family, spec.params, real, parity, labels, cartan,
                 component=component, epsilon=epsilon)
    if spec.family == "C":
        # the so(2) Cartan element E11 - E22 spans the even center; its sign splits L_1
        z = 0
        L.component = [None if L.parity[i] == 0 else (1 if L.weights[i][z] > 0 else 2)
                       for i in range(L.dim)]
    return L


def element(L: SuperAlgebra, x) -> List[Fraction]:
    """Coordinates of a supermatrix (or dense matrix) of the model in the basis of ``L``."""
    real = L.model
    if real is None:
        raise ValueError("algebra carries no matrix model (it was loaded from JSON)")
    if not isinstance(x, SuperMatrix):
        p = real.elements[0].p
        q = real.elements[0].q
        x = SuperMatrix.from_dense(p, q, x)
    return real.coords(x)


def matrix(L: SuperAlgebra, v: Sequence) -> SuperMatrix:
    """The supermatrix with coordinate vector ``v`` (a representative, for quotients)."""
    return L.model.element(v)
