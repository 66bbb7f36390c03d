"""Tensor products of simple SL2-modules in positive characteristic.

Decompositions into twisted tensor products of fundamental tilting modules,
their classification, the structure of L(r) ⊗ L(1) and L(r) ⊗ L(2), and a
formal-character oracle that checks all of it.
"""
from .chars import (
    FormalCharacter,
    NotAModuleCharacter,
    dimension,
    frobenius_twist,
    fundamental_tilting_character,
    multiply,
    peel_into_simples,
    peel_into_weyls,
    simple_character,
    tilting_character,
    weyl_character,
)
from .classify import (
    SummandClass,
    classify_summand,
    construct_tensor_containing,
    enumerate_tilting_factorizations,
    indecomposable_tilting_product,
    is_indecomposable_product,
)
from .decompose import (
    Decomposition,
    SummandProfile,
    decompose,
    socle_weight,
    summand_character,
    summand_factors,
)
from .diagram import Diagram
from .fundamental import FundamentalTilting, fundamental_structure, small_tensor_W
from .padic import ResidueData, admissible_expansion, padic_digits, residue_data, tilde
from .structure import (
    StructureReport,
    is_simple_weyl_weight,
    shift_decomposition,
    summand_diagram,
    tensor_with_L2,
    tensor_with_natural,
    weyl_series_in_family,
)

__version__ = "0.1.0"
