from fractions import Fraction

import pytest

from superlie.catalog import SWEEP
from superlie.errors import NotSemisimpleAction, OddSpacesNotOneDim
from superlie.exactlin import Echelon
from superlie.rootsys import (balanced, cartan_vector, coefficient_tuples, epsilon_weight, evaluate,
                              find_separating, separates, simple_roots, split_by_ad, weight_projection,
                              weight_table)


def vec(L, **coeffs):
    v = [Fraction(0)] * L.dim
    for label, c in coeffs.items():
        v[L.index(label)] += c
    return v


def test_a10_roots_from_the_matrix_model(alg):
    L = alg("A", 1, 0)
    t = weight_table(L)
    got = {L.labels[i]: w for w, ids in t.spaces.items() for i in ids}
    eps = lambda **c: epsilon_weight(L, {int(k[1:]): v for k, v in c.items()})  # noqa: E731
    assert got == {"e12": eps(e1=1, e2=-1), "e21": eps(e1=-1, e2=1),
                   "e13": eps(e1=1, e3=-1), "e23": eps(e2=1, e3=-1),
                   "e31": eps(e1=-1, e3=1), "e32": eps(e2=-1, e3=1)}
    assert len(t.delta_even) == 2 and len(t.delta_odd) == 4
    assert sorted(t.components) == [1, 2]


def test_queer_odd_weights(alg):
    L = alg("Q", 2)
    t = weight_table(L)
    zero = tuple(Fraction(0) for _ in L.cartan)
    assert set(t.delta_odd) == set(t.delta_even) | {zero}


def test_w3_minus_one_roots(alg):
    L = alg("W", 3)
    assert weight_table(L).by_degree[-1] == sorted(epsilon_weight(L, {j: -1}) for j in (1, 2, 3))


@pytest.mark.parametrize("family,params", SWEEP)
def test_weight_spaces_partition_the_basis(alg, family, params):
    L = alg(family, *params)
    t = weight_table(L, verify=False)
    assert sum(len(ids) for ids in t.spaces.values()) + L.rank == L.dim


def test_simple_roots_examples(alg):
    L = alg("W", 3)
    assert simple_roots(weight_table(L)) == sorted([epsilon_weight(L, {1: 1, 2: -1}),
                                                    epsilon_weight(L, {2: 1, 3: -1})], reverse=True)
    L = alg("H", 6)
    want = {epsilon_weight(L, {1: 1, 2: -1}), epsilon_weight(L, {2: 1, 3: -1}), epsilon_weight(L, {2: 1, 3: 1})}
    assert set(simple_roots(weight_table(L))) == want
    assert len(simple_roots(weight_table(alg("A", 2, 1)))) == 3


@pytest.mark.parametrize("family,params", SWEEP)
def test_positive_roots_are_nonnegative_integer_combinations(alg, family, params):
    L = alg(family, *params)
    t = weight_table(L, verify=False)
    pi = t.simple
    ech = Echelon(track=True)
    for k, r in enumerate(pi):
        assert ech.add({i: x for i, x in enumerate(r) if x}, k) is not None  # simple roots are independent
    for r in t.reductive_roots:
        c = ech.express({i: x for i, x in enumerate(r) if x})
        coeffs = [c.get(k, 0) for k in range(len(pi))]
        assert all(Fraction(x).denominator == 1 for x in coeffs)
        assert all(x >= 0 for x in coeffs) or all(x <= 0 for x in coeffs)


def test_coefficient_tuple_order():
    first = list(coefficient_tuples(2, 1))
    assert first[:3] == [(0, 1), (0, -1), (1, 0)]
    assert len(first) == 8


def test_separator_on_a10(alg):
    L = alg("A", 1, 0)
    t = weight_table(L)
    assert separates((1, 2), t.delta)
    sep = find_separating(L, t.delta)
    values = list(sep.values.values())
    assert len(set(values)) == len(values) and 0 not in values
    single = find_separating(L, [t.delta_even[0]])
    assert list(single.values.values())[0] != 0


def test_separator_keeps_zero_weight_apart(alg):
    L = alg("H", 5)
    t = weight_table(L)
    zero = tuple(Fraction(0) for _ in L.cartan)
    assert zero in t.by_degree[-1]
    sep = find_separating(L, t.by_degree[-1])
    assert sep.values[zero] == 0
    assert all(v != 0 for w, v in sep.values.items() if w != zero)


def test_split_single_root_vector(alg):
    L = alg("A", 1, 0)
    a = cartan_vector(L, (1, 2))
    x = vec(L, e13=1)
    assert split_by_ad(a, x, L) == [(Fraction(-1), x)]


def test_split_a10_example(alg):
    L = alg("A", 1, 0)
    a = cartan_vector(L, (1, 2))
    parts = split_by_ad(a, vec(L, e12=1, e21=1, e13=1, e31=1), L)
    assert [lam for lam, _ in parts] == [-2, -1, 1, 2]
    assert [comp for _, comp in parts] == [vec(L, e21=1), vec(L, e13=1), vec(L, e31=1), vec(L, e12=1)]


def test_split_sums_back_and_gives_eigenvectors(alg):
    L = alg("B", 1, 1)
    sep = find_separating(L, set(L.weights))
    a = cartan_vector(L, sep.h)
    x = [Fraction(i % 5 - 2, 1 + i % 3) for i in range(L.dim)]
    parts = split_by_ad(a, x, L)
    assert [sum(c[i] for _, c in parts) for i in range(L.dim)] == x
    from superlie.superalgebra import bracket
    for lam, comp in parts:
        assert bracket(L, a, comp) == [lam * c for c in comp]
    assert {lam: c for lam, c in parts} == {sep.values[w]: v for w, v in weight_projection(L, x).items()}


def test_split_detects_wrong_eigenvalues(alg):
    L = alg("A", 1, 0)
    a = cartan_vector(L, (1, 2))
    with pytest.raises(NotSemisimpleAction):
        split_by_ad(a, vec(L, e12=1, e13=1), L, eigenvalues=[2, 7])
    with pytest.raises(NotSemisimpleAction):
        split_by_ad(vec(L, e12=1), vec(L, e21=1), L)


def test_balanced_modes(alg):
    L = alg("A", 1, 0)
    assert balanced(L, "simple") == vec(L, e12=1)
    assert balanced(L, "full") == vec(L, e12=1, e21=1)
    assert balanced(L, "odd") == vec(L, e13=1, e23=1, e31=1, e32=1)
    with pytest.raises(OddSpacesNotOneDim):
        balanced(alg("Q", 2), "odd")
    with pytest.raises(ValueError):
        balanced(L, "nonsense")


def test_evaluate():
    assert evaluate((Fraction(1), Fraction(-2)), (3, 4)) == -5
