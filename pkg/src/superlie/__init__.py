"""Exact structure constants for Lie superalgebras and verified two-element generating pairs."""
from .catalog import SWEEP, build
from .errors import SuperLieError
from .genpair import (GeneratorCertificate, cartan_pair, classical_pair, construct_pair, even_part_pair,
                      homogeneous_pair, verify_pair)
from .rootsys import balanced, find_separating, simple_roots, split_by_ad, weight_table
from .superalgebra import SuperAlgebra, Subspace, bracket, check_structure, closure, dumps, loads

__all__ = [
    "SWEEP", "build", "SuperLieError", "GeneratorCertificate", "cartan_pair", "classical_pair",
    "construct_pair", "even_part_pair", "homogeneous_pair", "verify_pair", "balanced",
    "find_separating", "simple_roots", "split_by_ad", "weight_table", "SuperAlgebra", "Subspace",
    "bracket", "check_structure", "closure", "dumps", "loads",
]
