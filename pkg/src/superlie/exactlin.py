"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  Dense matrices are lists of rows;
sparse vectors are ``dict`` objects mapping a sortable key to a nonzero
scalar.  Nothing in here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import DuplicateNodes, NotInSpan

Scalar = Fraction
SparseVec = Dict[Hashable, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and fractions to a Scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted as exact scalars")
    return Fraction(x)


def format_scalar(q: Fraction) -> str:
    # Fraction.__str__ already gives "p/q", or "p" when q == 1
    return str(q)


def parse_scalar(s: str) -> Fraction:
    return Fraction(s)


# -- dense matrices ---------------------------------------------------------

def as_matrix(m: Iterable[Iterable]) -> List[List[Fraction]]:
    rows = [[scalar(x) for x in row] for row in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def row_reduce(m) -> Tuple[List[List[Fraction]], int, List[int]]:
    """Gauss-Jordan elimination.

    Returns ``(rref, rank, pivot_cols)``; ``rref`` has the same shape as
    ``m`` with the zero rows at the bottom.
    """
    a = as_matrix(m)
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(m) -> int:
    return row_reduce(m)[1]


def kernel(m, n_cols: Optional[int] = None) -> List[List[Fraction]]:
    """Basis of the right null space ``{v : m v = 0}``."""
    a = as_matrix(m)
    if n_cols is None:
        if not a:
            raise ValueError("n_cols is required for an empty matrix")
        n_cols = len(a[0])
    if not a:
        return [[ONE if i == j else ZERO for i in range(n_cols)] for j in range(n_cols)]
    rref, rk, pivots = row_reduce(a)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n_cols
        v[f] = ONE
        for row, pc in zip(rref, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def determinant(m) -> Fraction:
    """Determinant by cofactor expansion along the first row.

    Exponential time; meant as an independent check for small matrices.
    """
    a = as_matrix(m)
    n = len(a)
    if n == 0:
        return ONE
    if n == 1:
        return a[0][0]
    total = ZERO
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * determinant(minor)
        total += term if j % 2 == 0 else -term
    return total


# -- Vandermonde ------------------------------------------------------------

def _poly_mul_linear(p: List[Fraction], root: Fraction) -> List[Fraction]:
    # p(t) * (t - root), coefficients in increasing degree
    out = [ZERO] * (len(p) + 1)
    for k, c in enumerate(p):
        out[k + 1] += c
        out[k] -= c * root
    return out


def lagrange_coefficients(nodes: Sequence[Fraction]) -> List[List[Fraction]]:
    """Row ``i`` holds the monomial coefficients of the i-th Lagrange basis polynomial.

    This matrix is the inverse of the Vandermonde matrix ``V[k][i] = nodes[i]**k``.
    """
    nodes = [scalar(x) for x in nodes]
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodes(f"nodes must be pairwise distinct: {[str(x) for x in nodes]}")
    coeffs = []
    for i, li in enumerate(nodes):
        p = [ONE]
        denom = ONE
        for j, lj in enumerate(nodes):
            if j != i:
                p = _poly_mul_linear(p, lj)
                denom *= li - lj
        coeffs.append([c / denom for c in p])
    return coeffs


def solve_vandermonde(nodes: Sequence, rhs: Sequence[Sequence]) -> List[List[Fraction]]:
    """Solve ``sum_i nodes[i]**k * x[i] == rhs[k]`` for ``k = 0..n-1``.

    The unknowns ``x[i]`` and the right-hand sides are vectors of equal
    length; the system is solved componentwise through the Lagrange basis.
    """
    nodes = [scalar(x) for x in nodes]
    if len(rhs) != len(nodes):
        raise ValueError("need exactly one right-hand side per node")
    inv = lagrange_coefficients(nodes)
    width = len(rhs[0]) if rhs else 0
    rhs = [[scalar(x) for x in r] for r in rhs]
    out = []
    for row in inv:
        v = [ZERO] * width
        for c, r in zip(row, rhs):
            if c:
                for t in range(width):
                    if r[t]:
                        v[t] += c * r[t]
        out.append(v)
    return out


# -- sparse vectors ---------------------------------------------------------

def sparse(v: Sequence) -> Dict[int, Fraction]:
    return {i: scalar(x) for i, x in enumerate(v) if x}


def dense(v: SparseVec, dim: int) -> List[Fraction]:
    out = [ZERO] * dim
    for i, x in v.items():
        out[i] = x
    return out


def axpy(y: SparseVec, a: Fraction, x: SparseVec) -> None:
    """In place ``y += a*x``, dropping cancelled entries."""
    for k, c in x.items():
        nv = y.get(k, ZERO) + a * c
        if nv:
            y[k] = nv
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row-echelon basis of sparse vectors.

    Rows are normalised (pivot entry 1) and fully reduced, so a vector is
    reduced in a single pass over its pivot columns.  With ``track=True``
    each row also remembers which combination of the inserted vectors
    (identified by their ``tag``) produced it, which is what coordinate
    extraction in a realized basis needs.
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[Hashable, SparseVec] = {}
        self.track = track
        self.combos: Dict[Hashable, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec, combo: Optional[SparseVec] = None):
        r = dict(v)
        cmb = dict(combo) if combo is not None else {}
        rows = self.rows
        for p in [k for k in r if k in rows]:
            c = r.pop(p)
            for k, a in rows[p].items():
                if k != p:
                    nv = r.get(k, ZERO) - c * a
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
            if self.track:
                axpy(cmb, -c, self.combos[p])
        return r, cmb

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)[0]

    def add(self, v: SparseVec, tag: Hashable = None) -> Optional[SparseVec]:
        """Insert ``v``; return its normalised residue, or None if already in the span."""
        combo = {tag: ONE} if self.track else None
        r, cmb = self.reduce(v, combo)
        if not r:
            return None
        p = min(r)
        inv = 1 / r[p]
        if inv != 1:
            r = {k: a * inv for k, a in r.items()}
            if self.track:
                cmb = {k: a * inv for k, a in cmb.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
                if self.track:
                    axpy(self.combos[q], -c, cmb)
        self.rows[p] = r
        if self.track:
            self.combos[p] = cmb
        return r

    def express(self, v: SparseVec) -> SparseVec:
        """Combination of tags equal to ``v`` (tracking mode only)."""
        if not self.track:
            raise RuntimeError("express() needs an Echelon built with track=True")
        r, cmb = self.reduce(v, {})
        if r:
            raise NotInSpan("vector is not in the span")
        return {k: -a for k, a in cmb.items() if a}

    def sorted_rows(self) -> List[SparseVec]:
        return [self.rows[p] for p in sorted(self.rows)]
