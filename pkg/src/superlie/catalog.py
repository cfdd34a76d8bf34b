"""Uniform construction by family name, and the standard verification list."""
from __future__ import annotations

from typing import List, Sequence, Tuple

from .errors import BadParameters
from .models_cartan import CARTAN_FAMILIES, CartanFamilySpec, build_cartan
from .models_classical import FAMILIES, FamilySpec, build_classical
from .superalgebra import SuperAlgebra

ALIASES = {"S~": "Stilde", "St": "Stilde", "Ŝ": "Stilde", "S̃": "Stilde"}

SWEEP: List[Tuple[str, Tuple[int, ...]]] = [
    ("A", (1, 0)), ("A", (2, 1)), ("A", (1, 1)), ("A", (2, 2)),
    ("B", (0, 1)), ("B", (1, 1)), ("B", (2, 1)),
    ("C", (2,)), ("C", (3,)), ("D", (2, 1)),
    ("P", (2,)), ("P", (3,)), ("Q", (2,)), ("Q", (3,)),
    ("W", (3,)), ("W", (4,)), ("S", (4,)), ("Stilde", (4,)),
    ("H", (5,)), ("H", (6,)), ("H", (7,)),
]


def canonical_family(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in FAMILIES and name not in CARTAN_FAMILIES:
        raise BadParameters(f"unknown family {name!r}")
    return name


def is_cartan_type(family: str) -> bool:
    return canonical_family(family) in CARTAN_FAMILIES


def spec_for(family: str, params: Sequence[int]):
    family = canonical_family(family)
    params = tuple(int(p) for p in params)
    if family in CARTAN_FAMILIES:
        if len(params) != 1:
            raise BadParameters(f"{family} takes one parameter n")
        return CartanFamilySpec(family, params[0])
    return FamilySpec(family, params)


def build(family: str, *params: int) -> SuperAlgebra:
    """Build any supported algebra, e.g. ``build("A", 1, 0)`` or ``build("H", 6)``."""
    spec = spec_for(family, params)
    if isinstance(spec, CartanFamilySpec):
        return build_cartan(spec)
    return build_classical(spec)
