"""Resonance varieties of matroids over finite fields.

Brute-force resonance, neighborly constituents, line-complex carriers and
Schubert-calculus degree checks, all in exact finite-field arithmetic.
"""
from __future__ import annotations

from .field import Field, make_field, parse_field
from .graphs import NeighborlyStructure
from .matroid import Matroid, catalog, from_lines, from_realization, load
from .neighborly import constituents, enumerate_neighborly, is_neighborly, k_space, v_stratum, verify_decomposition
from .resonance import CapExceeded, enumerate_resonance, gamma_lambda, z_of

__all__ = [
    "CapExceeded", "Field", "Matroid", "NeighborlyStructure", "catalog", "constituents",
    "enumerate_neighborly", "enumerate_resonance", "from_lines", "from_realization", "gamma_lambda",
    "is_neighborly", "k_space", "load", "make_field", "parse_field", "v_stratum",
    "verify_decomposition", "z_of",
]
__version__ = "0.1.0"
