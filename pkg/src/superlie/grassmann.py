"""Grassmann superalgebra Lambda(n) and its superderivations.

A monomial xi_{i1}...xi_{ik} (i1 < ... < ik) is stored as the bitmask with
bit ``i-1`` set for each factor.  Derivations are sums of terms
``c * x^u d_i`` keyed by ``(mask, i)`` with ``i`` 1-based.  Partial
derivatives act from the left.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Tuple

from .errors import IndexOutOfRange, MixedArity
from .exactlin import ZERO, scalar


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> Tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mono_mul(u: int, v: int) -> int:
    """Sign of ``x^u * x^v`` rewritten as ``x^(u|v)``; 0 if a generator repeats."""
    if u & v:
        return 0
    # every generator of v must move left past the generators of u above it
    swaps = 0
    w = v
    while w:
        low = w & -w
        swaps += popcount(u & ~((low << 1) - 1))
        w ^= low
    return -1 if swaps & 1 else 1


def render_mono(mask: int) -> str:
    if not mask:
        return "1"
    return "*".join(f"x{i}" for i in indices_of(mask))


def _coef_prefix(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    body = "" if a == 1 else f"{a}*"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


class GrassmannElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[int, object] = ()):
        self.n = n
        clean = {}
        for m, c in dict(terms).items():
            if m >> n:
                raise IndexOutOfRange(f"monomial {render_mono(m)} outside Lambda({n})")
            c = scalar(c)
            if c:
                clean[m] = c
        self.terms: Dict[int, Fraction] = clean

    @classmethod
    def generator(cls, n: int, i: int) -> "GrassmannElement":
        _check_index(n, i)
        return cls(n, {1 << (i - 1): 1})

    @classmethod
    def monomial(cls, n: int, indices, coef=1) -> "GrassmannElement":
        for i in indices:
            _check_index(n, i)
        m = mask_of(indices)
        if popcount(m) != len(tuple(indices)):
            return cls(n)
        return cls(n, {m: coef})

    def __eq__(self, other):
        return isinstance(other, GrassmannElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        _same_arity(self, other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, ZERO) + c
        return GrassmannElement(self.n, t)

    def __neg__(self):
        return GrassmannElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "GrassmannElement":
        a = scalar(a)
        return GrassmannElement(self.n, {m: a * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GrassmannElement):
            return self.scale(other)
        return g_mul(self, other)

    __rmul__ = scale

    def is_homogeneous(self) -> bool:
        return len({popcount(m) & 1 for m in self.terms}) <= 1

    def parity(self) -> int:
        ps = {popcount(m) & 1 for m in self.terms}
        if len(ps) > 1:
            raise ValueError("element is not parity-homogeneous")
        return ps.pop() if ps else 0

    def __repr__(self):
        return f"GrassmannElement({self.n}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(sorted(self.terms.items(), key=lambda t: (popcount(t[0]), indices_of(t[0])))):
            mono = render_mono(m)
            pre = _coef_prefix(c, k == 0)
            if mono == "1":
                parts.append(pre + str(abs(c)) if abs(c) != 1 else pre + "1")
            else:
                parts.append(pre + mono)
        return "".join(parts)


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 1..{n}")


def _same_arity(a, b) -> None:
    if a.n != b.n:
        raise MixedArity(f"arity {a.n} vs {b.n}")


def g_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _same_arity(a, b)
    out: Dict[int, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            s = mono_mul(u, v)
            if s:
                w = u | v
                nv = out.get(w, ZERO) + (cu * cv if s > 0 else -cu * cv)
                if nv:
                    out[w] = nv
                else:
                    out.pop(w, None)
    return GrassmannElement(a.n, out)


def _partial_mono(i: int, u: int) -> Tuple[int, int]:
    """Left derivative d/dxi_i of x^u as (sign, mask)."""
    bit = 1 << (i - 1)
    if not u & bit:
        return 0, 0
    before = popcount(u & (bit - 1))
    return (-1 if before & 1 else 1), u ^ bit


def partial(i: int, f: GrassmannElement) -> GrassmannElement:
    _check_index(f.n, i)
    out = {}
    for u, c in f.terms.items():
        s, w = _partial_mono(i, u)
        if s:
            out[w] = c if s > 0 else -c
    return GrassmannElement(f.n, out)


class Superderivation:
    """A finite sum ``sum c * x^u d_i`` of superderivations of Lambda(n)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Tuple[int, int], object] = ()):
        self.n = n
        clean = {}
        for (m, i), c in dict(terms).items():
            if m >> n:
                raise IndexOutOfRange(f"monomial {render_mono(m)} outside Lambda({n})")
            _check_index(n, i)
            c = scalar(c)
            if c:
                clean[(m, i)] = c
        self.terms: Dict[Tuple[int, int], Fraction] = clean

    @classmethod
    def term(cls, n: int, indices, i: int, coef=1) -> "Superderivation":
        return cls(n, {(mask_of(indices), i): coef})

    @classmethod
    def from_values(cls, n: int, values: Mapping[int, GrassmannElement]) -> "Superderivation":
        """The derivation sending ``xi_k`` to ``values[k]``."""
        t = {}
        for k, g in values.items():
            for m, c in g.terms.items():
                t[(m, k)] = c
        return cls(n, t)

    def __eq__(self, other):
        return isinstance(other, Superderivation) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        _same_arity(self, other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, ZERO) + c
        return Superderivation(self.n, t)

    def __neg__(self):
        return Superderivation(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a) -> "Superderivation":
        a = scalar(a)
        return Superderivation(self.n, {k: a * c for k, c in self.terms.items()})

    __rmul__ = scale
    __mul__ = scale

    def parity(self) -> int:
        ps = {(popcount(m) + 1) & 1 for m, _ in self.terms}
        if len(ps) > 1:
            raise ValueError("derivation is not parity-homogeneous")
        return ps.pop() if ps else 0

    def degree(self) -> int:
        ds = {popcount(m) - 1 for m, _ in self.terms}
        if len(ds) > 1:
            raise ValueError("derivation is not Z-homogeneous")
        return ds.pop() if ds else 0

    def homogeneous_parts(self) -> Dict[int, "Superderivation"]:
        parts: Dict[int, Dict] = {}
        for (m, i), c in self.terms.items():
            parts.setdefault((popcount(m) + 1) & 1, {})[(m, i)] = c
        return {p: Superderivation(self.n, t) for p, t in parts.items()}

    def value(self, k: int) -> GrassmannElement:
        """Image of the generator ``xi_k``."""
        return GrassmannElement(self.n, {m: c for (m, i), c in self.terms.items() if i == k})

    def apply(self, f: GrassmannElement) -> GrassmannElement:
        _same_arity(self, f)
        out: Dict[int, Fraction] = {}
        for (m, i), c in self.terms.items():
            for u, cu in f.terms.items():
                s, w = _partial_mono(i, u)
                if not s:
                    continue
                s2 = mono_mul(m, w)
                if not s2:
                    continue
                key = m | w
                nv = out.get(key, ZERO) + (c * cu if s * s2 > 0 else -c * cu)
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return GrassmannElement(self.n, out)

    __call__ = apply

    def __repr__(self):
        return f"Superderivation({self.n}, {self})"

    def __str__(self):
        return render_derivation(self.terms)


def render_derivation(terms: Mapping[Tuple[int, int], Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    order = sorted(terms.items(), key=lambda t: (popcount(t[0][0]), indices_of(t[0][0]), t[0][1]))
    for k, ((m, i), c) in enumerate(order):
        mono = "" if not m else render_mono(m) + " "
        parts.append(_coef_prefix(c, k == 0) + f"{mono}d{i}")
    return "".join(parts)


def _compose_on_generators(d1: Superderivation, d2: Superderivation) -> Dict[int, GrassmannElement]:
    return {k: d1.apply(d2.value(k)) for k in range(1, d1.n + 1)}


def sd_bracket(d1: Superderivation, d2: Superderivation) -> Superderivation:
    """Supercommutator, extended bilinearly over the parity components."""
    _same_arity(d1, d2)
    n = d1.n
    total = Superderivation(n)
    for p1, a in d1.homogeneous_parts().items():
        for p2, b in d2.homogeneous_parts().items():
            sign = -1 if (p1 & p2) else 1
            ab = _compose_on_generators(a, b)
            ba = _compose_on_generators(b, a)
            vals = {k: ab[k] + ba[k].scale(-sign) for k in range(1, n + 1)}
            total = total + Superderivation.from_values(n, vals)
    return total


def d_ij(i: int, j: int, f: GrassmannElement) -> Superderivation:
    n = f.n
    _check_index(n, i)
    _check_index(n, j)
    return (Superderivation.from_values(n, {j: partial(i, f)})
            + Superderivation.from_values(n, {i: partial(j, f)}))


def standard_involution(n: int) -> Callable[[int], int]:
    """i -> i+m for i <= m, i -> i-m for m < i <= 2m, fixed point 2m+1 for odd n."""
    m = n // 2

    def prime(i: int) -> int:
        _check_index(n, i)
        if i <= m:
            return i + m
        if i <= 2 * m:
            return i - m
        return i

    return prime


def d_h(u, n: int, involution: Callable[[int], int] = None) -> Superderivation:
    """Hamiltonian derivation of the monomial ``x^u``.

    ``u`` is a bitmask or an iterable of 1-based indices.
    """
    mask = u if isinstance(u, int) else mask_of(u)
    if mask >> n:
        raise IndexOutOfRange(f"monomial {render_mono(mask)} outside Lambda({n})")
    prime = involution or standard_involution(n)
    sign = -1 if popcount(mask) & 1 else 1
    t: Dict[Tuple[int, int], Fraction] = {}
    for i in range(1, n + 1):
        s, w = _partial_mono(i, mask)
        if s:
            key = (w, prime(i))
            t[key] = t.get(key, ZERO) + s * sign
    return Superderivation(n, t)


def all_monomials(n: int, degree: int) -> Iterator[int]:
    """Masks of the given degree ordered lexicographically by index tuple."""
    from itertools import combinations
    for c in combinations(range(1, n + 1), degree):
        yield mask_of(c)
