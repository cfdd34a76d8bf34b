import json
import random
from fractions import Fraction

import pytest

from superlie.errors import DimensionMismatch, NotAModule
from superlie.rootsys import cartan_vector
from superlie.superalgebra import (Subspace, bracket, check_structure, closure, dumps, even_center, even_part,
                                   from_dict, loads, module_closure, module_components, odd_part, to_dict)


def vec(L, **coeffs):
    v = [Fraction(0)] * L.dim
    for label, c in coeffs.items():
        v[L.index(label)] += c
    return v


def brute_closure_dim(L, gens):
    """Span everything reachable by repeated brackets, with no early exit or ordering tricks."""
    span = Subspace.span(L.dim, gens)
    while True:
        basis = span.basis
        bigger = Subspace.span(L.dim, basis + [bracket(L, a, b) for a in basis for b in basis])
        if bigger.dim == span.dim:
            return span.dim
        span = bigger


def test_cartan_acts_by_weight(alg):
    L = alg("A", 1, 0)
    h = cartan_vector(L, (1, 2))
    assert bracket(L, h, vec(L, e12=1)) == vec(L, e12=2)


def test_even_self_bracket_vanishes(alg):
    L = alg("B", 1, 1)
    rng = random.Random(0)
    x = [Fraction(rng.randint(-3, 3)) if p == 0 else Fraction(0) for p in L.parity]
    assert not any(bracket(L, x, x))


def test_dimension_mismatch(alg):
    L = alg("A", 1, 0)
    with pytest.raises(DimensionMismatch):
        bracket(L, [1, 0], L.unit(0))


def test_closure_examples(alg):
    L = alg("A", 1, 0)
    assert closure(L, [cartan_vector(L, (3, -1))]).dim == 1
    assert closure(L, [vec(L, e12=1), vec(L, e21=1)]).dim == 3
    x = vec(L, e12=1, e21=1, e13=1, e31=1, **{"e11+e22+2*e33": 1})
    assert closure(L, [x, cartan_vector(L, (1, 2))]).dim == 8


def test_closure_against_brute_force(alg):
    rng = random.Random(11)
    for key in [("A", 1, 0), ("B", 0, 1), ("C", 2)]:
        L = alg(*key)
        for _ in range(10):
            gens = [[Fraction(rng.choice([0, 0, 0, 1, -1])) for _ in range(L.dim)] for _ in range(2)]
            assert closure(L, gens).dim == brute_closure_dim(L, gens)


def test_closure_monotone_and_idempotent(alg):
    L = alg("B", 1, 1)
    a, b = L.unit(3), L.unit(7)
    small = closure(L, [a])
    big = closure(L, [a, b])
    assert small.issubset(big)
    assert closure(L, big.basis) == big
    assert closure(L, [L.unit(i) for i in range(L.dim)]).dim == L.dim


def test_closure_trace_increases(alg):
    L = alg("W", 3)
    sub = closure(L, [L.unit(0), L.unit(L.dim - 1)])
    assert all(a < b for a, b in zip(sub.trace[:-2], sub.trace[1:-1]))


def test_module_closure_examples(alg):
    L = alg("A", 1, 0)
    sub = module_closure(L, even_part(L), vec(L, e13=1))
    assert sub == Subspace.span(L.dim, [vec(L, e13=1), vec(L, e23=1)])
    z = even_center(L).basis[0]
    assert module_closure(L, even_part(L), z).dim == 1


def test_module_components(alg):
    L = alg("A", 1, 0)
    comps = module_components(L, odd_part(L))
    assert [c.dim for c in comps] == [2, 2]
    assert comps[0].intersects_trivially(comps[1])
    L = alg("B", 1, 1)
    assert len(module_components(L, odd_part(L))) == 1


def test_module_components_rejects_non_modules(alg):
    L = alg("A", 1, 0)
    with pytest.raises(NotAModule):
        module_components(L, Subspace.span(L.dim, [vec(L, e13=1)]))


def test_even_center(alg):
    assert even_center(alg("A", 1, 0)) == Subspace.span(8, [vec(alg("A", 1, 0), **{"e11+e22+2*e33": 1})])
    assert even_center(alg("B", 1, 1)).dim == 0


def test_corrupted_table_is_caught(alg):
    d = to_dict(alg("A", 1, 0))
    i, j = d["labels"].index("e12"), d["labels"].index("e21")
    for entry in d["structure"]:
        if entry[:2] in ([i, j], [j, i]):
            entry[3] = str(2 * Fraction(entry[3]))
    report = check_structure(from_dict(d))
    assert report.skew_ok and not report.jacobi_ok
    assert report.counterexample["kind"] == "jacobi"
    assert len(report.counterexample["triple"]) == 3


def test_skew_violation_is_caught(alg):
    d = to_dict(alg("B", 0, 1))
    d["structure"][0][3] = str(Fraction(d["structure"][0][3]) + 1)
    report = check_structure(from_dict(d))
    assert not report.ok and not report.skew_ok


def test_sampled_jacobi_above_threshold(alg):
    report = check_structure(alg("W", 4))
    assert report.jacobi_mode == "sampled" and report.triples_checked == 10_000 and report.ok


@pytest.mark.parametrize("key", [("A", 1, 0), ("Q", 2), ("H", 6), ("Stilde", 4)])
def test_round_trip_is_byte_identical(alg, key):
    text = dumps(alg(*key))
    again = loads(text)
    assert dumps(again) == text
    assert check_structure(again, exhaustive_max=0, samples=200).ok


def test_json_layout(alg):
    d = json.loads(dumps(alg("A", 1, 0)))
    assert d["dim"] == 8 and d["parity"] == [0, 0, 0, 0, 1, 1, 1, 1]
    assert d["cartan"] == [0, 1]
    assert all(isinstance(c, str) for *_, c in d["structure"])
    assert d["component"] == [None] * 4 + [1, 1, 2, 2]
