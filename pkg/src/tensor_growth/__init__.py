"""Exact counts of indecomposable summands in tensor powers, and their growth.

The main entry points are re-exported here; see the submodules for the rest.
"""

__version__ = "0.1.0"

from .algebra import LaurentPolynomial, bracket, binomial_power
from .combinatorics import INF, MixedCharacteristic, Partition, mixed_digits
from .decomposer import (
    CHAR0,
    GrowthSeries,
    TiltingDecomposition,
    b_charzero_glm,
    b_charzero_super,
    b_sequence_sl2,
    decompose_tensor_power,
)
from .errors import DomainError, InvariantViolation, ResourceError, TensorGrowthError
from .sl2_tilting import tilting_character, tilting_dimension, weyl_factors
from .specht import b_modular_glm, dim_simple_symmetric

__all__ = [
    "CHAR0", "INF", "DomainError", "GrowthSeries", "InvariantViolation", "LaurentPolynomial",
    "MixedCharacteristic", "Partition", "ResourceError", "TensorGrowthError", "TiltingDecomposition",
    "b_charzero_glm", "b_charzero_super", "b_modular_glm", "b_sequence_sl2", "binomial_power",
    "bracket", "decompose_tensor_power", "dim_simple_symmetric", "mixed_digits",
    "tilting_character", "tilting_dimension", "weyl_factors",
]
