"""Exact decomposition of symmetric powers of C2 (x) C2 (x) C2 into
irreducible modules of sl2(C) + sl2(C) + sl2(C).

Weight-space dimensions come from closed-form quartic polynomials and an
independent convolution identity, multiplicities from an eight-corner
inclusion-exclusion on those dimensions, and every formula is
cross-checked against brute-force monomial enumeration.  All arithmetic
is exact (Python ints throughout).
"""

from .characters import (
    NotAModuleCharacterError,
    character_irrep,
    character_sl2,
    character_symmetric_power,
    greedy_decompose,
    maximal_weights,
)
from .core import (
    Character,
    CharacterFormatError,
    Decomposition,
    IrrepLabel,
    MonomialExponents,
    NotASubcharacterError,
    Weight,
    character_add,
    character_sub,
    character_total,
    decomposition_total,
    format_character,
    irrep_dimension,
    parse_character,
    weight_leq,
    weight_of_monomial,
)
from .dims import (
    c2,
    dim_by_convolution,
    dim_closed_form,
    dim_weight,
    polynomial_case,
)
from .multiplicity import (
    decompose_symmetric_power,
    multiplicity_general,
    multiplicity_sym,
)
from .oracle import (
    OracleCapError,
    c2_bruteforce,
    convolution_bruteforce,
    enumerate_character,
)

__all__ = [
    "Character",
    "CharacterFormatError",
    "Decomposition",
    "IrrepLabel",
    "MonomialExponents",
    "NotAModuleCharacterError",
    "NotASubcharacterError",
    "OracleCapError",
    "Weight",
    "c2",
    "c2_bruteforce",
    "character_add",
    "character_irrep",
    "character_sl2",
    "character_sub",
    "character_symmetric_power",
    "character_total",
    "convolution_bruteforce",
    "decompose_symmetric_power",
    "decomposition_total",
    "dim_by_convolution",
    "dim_closed_form",
    "dim_weight",
    "enumerate_character",
    "format_character",
    "greedy_decompose",
    "irrep_dimension",
    "maximal_weights",
    "multiplicity_general",
    "multiplicity_sym",
    "parse_character",
    "polynomial_case",
    "weight_leq",
    "weight_of_monomial",
]
