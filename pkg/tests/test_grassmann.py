import random

import pytest
from hypothesis import given, settings, strategies as st

from superlie.errors import IndexOutOfRange, MixedArity
from superlie.grassmann import (GrassmannElement, Superderivation, d_h, d_ij, g_mul, mono_mul, partial, sd_bracket,
                                standard_involution)


def xi(n, *idx, c=1):
    return GrassmannElement.monomial(n, idx, c)


def der(n, idx, i, c=1):
    return Superderivation.term(n, idx, i, c)


def random_element(rng, n, terms=3):
    out = GrassmannElement(n)
    for _ in range(terms):
        idx = [i for i in range(1, n + 1) if rng.random() < 0.4]
        out = out + xi(n, *idx, c=rng.randint(-3, 3))
    return out


def random_homogeneous_derivation(rng, n, parity):
    out = Superderivation(n)
    while not out:
        for _ in range(3):
            idx = [i for i in range(1, n + 1) if rng.random() < 0.5]
            if (len(idx) + 1) % 2 == parity:
                out = out + der(n, idx, rng.randint(1, n), rng.randint(-2, 2))
    return out


def test_products():
    n = 3
    assert g_mul(xi(n, 1), xi(n, 2)) == xi(n, 1, 2)
    assert g_mul(xi(n, 2), xi(n, 1)) == xi(n, 1, 2, c=-1)
    assert g_mul(xi(n, 1, 2), xi(n, 1, 3)) == GrassmannElement(n)


def test_sign_by_transpositions():
    assert mono_mul(0b100, 0b011) == 1
    assert mono_mul(0b010, 0b101) == -1


def test_mixed_arity():
    with pytest.raises(MixedArity):
        g_mul(xi(2, 1), xi(3, 1))


def test_partials():
    n = 3
    assert partial(1, xi(n, 1, 2)) == xi(n, 2)
    assert partial(2, xi(n, 1, 2)) == xi(n, 1, c=-1)
    assert partial(3, xi(n, 1, 2)) == GrassmannElement(n)
    with pytest.raises(IndexOutOfRange):
        partial(4, xi(n, 1))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_associative_and_supercommutative(n):
    rng = random.Random(n)
    for _ in range(1000):
        a, b, c = (xi(n, *[i for i in range(1, n + 1) if rng.random() < 0.4]) for _ in range(3))
        assert g_mul(g_mul(a, b), c) == g_mul(a, g_mul(b, c))
        sign = -1 if a.parity() and b.parity() else 1
        assert g_mul(a, b) == g_mul(b, a).scale(sign)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 5 - 1), st.integers(0, 2 ** 5 - 1), st.integers(1, 5))
def test_leibniz_rule(u, v, i):
    n = 5
    a = GrassmannElement(n, {u: 1})
    b = GrassmannElement(n, {v: 1})
    sign = -1 if a.parity() else 1
    assert partial(i, g_mul(a, b)) == g_mul(partial(i, a), b) + g_mul(a, partial(i, b)).scale(sign)


def test_bracket_examples():
    n = 2
    assert sd_bracket(der(n, [1], 2), der(n, [2], 1)) == der(n, [1], 1) - der(n, [2], 2)
    assert sd_bracket(der(n, [], 1), der(n, [1], 1)) == der(n, [], 1)
    assert sd_bracket(der(n, [], 1), der(n, [1, 2], 2)) == der(n, [2], 2)


def test_bracket_is_the_supercommutator_on_operators():
    rng = random.Random(3)
    n = 4
    for _ in range(40):
        p, q = rng.randint(0, 1), rng.randint(0, 1)
        d1, d2 = random_homogeneous_derivation(rng, n, p), random_homogeneous_derivation(rng, n, q)
        br = sd_bracket(d1, d2)
        f = random_element(rng, n)
        sign = -1 if p and q else 1
        assert br(f) == d1(d2(f)) - d2(d1(f)).scale(sign)


def test_bracket_skew_jacobi_and_degree():
    rng = random.Random(5)
    n = 4
    for _ in range(30):
        ps = [rng.randint(0, 1) for _ in range(3)]
        a, b, c = (random_homogeneous_derivation(rng, n, p) for p in ps)
        s_ab = -1 if ps[0] and ps[1] else 1
        assert sd_bracket(a, b) == sd_bracket(b, a).scale(-s_ab)
        lhs = sd_bracket(a, sd_bracket(b, c))
        rhs = sd_bracket(sd_bracket(a, b), c) + sd_bracket(b, sd_bracket(a, c)).scale(s_ab)
        assert lhs == rhs
    for u, v in [((1, 2), (3,)), ((), (1, 2, 3))]:
        d1, d2 = der(n, u, 4), der(n, v, 1)
        br = sd_bracket(d1, d2)
        if br:
            assert set(br.homogeneous_parts()) == {d1.degree() + d2.degree()}


def test_d_ij_examples():
    n = 3
    assert d_ij(1, 2, xi(n, 1, 2)) == der(n, [2], 2) - der(n, [1], 1)
    assert not d_ij(1, 2, xi(n, 3))
    assert d_ij(1, 2, xi(n, 1, 2, 3)) == der(n, [2, 3], 2) - der(n, [1, 3], 1)


def test_d_h_examples():
    assert d_h((1, 3), 4) == der(4, [3], 3) - der(4, [1], 1)
    assert not d_h((), 4)
    assert d_h((5,), 5) == der(5, [], 5, -1)


def test_involution():
    p = standard_involution(5)
    assert [p(i) for i in range(1, 6)] == [3, 4, 1, 2, 5]
    q = standard_involution(6)
    assert all(q(q(i)) == i for i in range(1, 7))


def test_text_rendering():
    assert str(der(3, [1, 3], 3)) == "x1*x3 d3"
    assert str(der(2, [1], 1) - der(2, [2], 2)) == "x1 d1 - x2 d2"
    assert der(3, [1, 3], 3).parity() == 1 and der(3, [1, 3], 3).degree() == 1
