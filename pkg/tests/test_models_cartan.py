import pytest

from superlie.catalog import build
from superlie.errors import BadParameters
from superlie.grassmann import Superderivation, d_h, sd_bracket, standard_involution
from superlie.models_cartan import CartanFamilySpec, cartan_basis, derivation, element, spanning_rank
from superlie.rootsys import epsilon_weight, weight_table
from superlie.superalgebra import (bracket, check_structure, default_acting, degree_part, even_center,
                                   module_closure, module_components)


def der(n, idx, i, c=1):
    return Superderivation.term(n, idx, i, c)


DIMS = {("W", 3): (24, [3, 9, 9, 3]), ("W", 4): (64, [4, 16, 24, 16, 4]),
        ("S", 4): (49, [4, 15, 20, 10]), ("Stilde", 4): (49, [4, 15, 20, 10]),
        ("H", 5): (30, [5, 10, 10, 5]), ("H", 6): (62, [6, 15, 20, 15, 6]),
        ("H", 7): (126, [7, 21, 35, 35, 21, 7])}


@pytest.mark.parametrize("key", sorted(DIMS))
def test_graded_dimensions(alg, key):
    L = alg(*key)
    dim, per_degree = DIMS[key]
    assert L.dim == dim
    assert [degree_part(L, k).dim for k in range(-1, L.height + 1)] == per_degree


@pytest.mark.parametrize("key", [("S", 4), ("H", 5), ("H", 6)])
def test_spanning_rank_oracle(alg, key):
    L = alg(*key)
    spec = CartanFamilySpec(*key)
    for k in range(-1, spec.height + 1):
        assert spanning_rank(spec, k) == degree_part(L, k).dim


def test_cartan_bases():
    assert cartan_basis(("W", 3)) == [der(3, [i], i) for i in (1, 2, 3)]
    assert cartan_basis(("S", 4)) == [der(4, [1], 1) - der(4, [j], j) for j in (2, 3, 4)]
    prime = standard_involution(5)
    for i, h in enumerate(cartan_basis(("H", 5)), start=1):
        assert h in (d_h((i, prime(i)), 5, prime), d_h((i, prime(i)), 5, prime).scale(-1))


@pytest.mark.parametrize("key", sorted(DIMS))
def test_axioms(alg, key):
    report = check_structure(alg(*key))
    assert report.ok
    assert report.graded == (key[0] != "Stilde")


def test_stilde_degree_minus_one_brackets_leave_the_grading(alg):
    L = alg("Stilde", 4)
    minus = L.degree_indices(-1)
    top = set(L.degree_indices(L.height))
    out = bracket(L, L.unit(minus[0]), L.unit(minus[1]))
    assert any(out[i] for i in top)


def test_null_component_type(alg):
    for key, dim0, center in [(("W", 3), 9, 1), (("S", 4), 15, 0), (("Stilde", 4), 15, 0), (("H", 6), 15, 0)]:
        L = alg(*key)
        idx = L.degree_indices(0)
        assert len(idx) == dim0
        assert even_center(L, idx).dim == center


def test_w_null_center_is_degree_derivation(alg):
    L = alg("W", 3)
    z = even_center(L, L.degree_indices(0)).basis[0]
    assert derivation(L, z) == der(3, [1], 1) + der(3, [2], 2) + der(3, [3], 3)


def test_bracket_matches_derivation_bracket(alg):
    L = alg("H", 5)
    for i in range(0, L.dim, 3):
        for j in range(0, L.dim, 2):
            want = element(L, sd_bracket(derivation(L, L.unit(i)), derivation(L, L.unit(j))))
            assert bracket(L, L.unit(i), L.unit(j)) == want


@pytest.mark.parametrize("key,degree", [(("W", 3), -1), (("W", 3), 2), (("S", 4), -1), (("S", 4), 1),
                                        (("S", 4), 2), (("Stilde", 4), -1), (("Stilde", 4), 1),
                                        (("H", 5), -1), (("H", 5), 1), (("H", 5), 2)])
def test_single_seed_module_closure(alg, key, degree):
    L = alg(*key)
    acting = default_acting(L)
    sub = degree_part(L, degree)
    for v in sub.basis:
        assert module_closure(L, acting, v).dim == sub.dim


def test_h6_degree_one_splits(alg):
    L = alg("H", 6)
    comps = module_components(L, degree_part(L, 1))
    assert [c.dim for c in comps] == [10, 10]
    tags = {L.component[i] for i in L.degree_indices(1)}
    assert tags == {1, 2}


def test_w_root_sets(alg):
    L = alg("W", 3)
    t = weight_table(L)
    assert t.by_degree[-1] == sorted(epsilon_weight(L, {j: -1}) for j in (1, 2, 3))
    total = {1: 1, 2: 1, 3: 1}
    top = sorted(epsilon_weight(L, {**total, j: 0}) for j in (1, 2, 3))
    assert t.by_degree[2] == top


@pytest.mark.parametrize("family,n", [("W", 2), ("S", 3), ("Stilde", 5), ("Stilde", 2), ("H", 4), ("V", 5)])
def test_parameter_ranges(family, n):
    with pytest.raises(BadParameters):
        build(family, n)
