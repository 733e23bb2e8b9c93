"""Multiplicities by inclusion-exclusion on weight-space dimensions.

The weight space of a module M at a dominant weight w collects one
dimension from every irreducible summand whose label dominates w in the
even-componentwise order.  Alternating the dimensions over the eight
corners w + (d1, d2, d3), di in {0, 2}, cancels everything except the
multiplicity at w itself, turning a character into a multiplicity
without any recursion.
"""

from itertools import product

from .core import Character, Decomposition, IrrepLabel
from .dims import dim_weight

_CORNERS = [
    (offs, -1 if (sum(offs) // 2) % 2 else 1)
    for offs in product((0, 2), repeat=3)
]


def multiplicity_general(c: Character, label: IrrepLabel) -> int:
    """Multiplicity of the labeled irreducible in the module with
    character c, as the alternating eight-corner sum of dimensions.

    Returns the raw signed value: it is non-negative whenever c really is
    a module character, so a negative result flags an invalid input.
    """
    n1, n2, n3 = label
    return sum(
        sign * c.get((n1 + d1, n2 + d2, n3 + d3), 0)
        for (d1, d2, d3), sign in _CORNERS
    )


def multiplicity_sym(m: int, label: IrrepLabel) -> int:
    """Multiplicity of the labeled irreducible in the m-th symmetric
    power of C2 (x) C2 (x) C2.

    Labels with a component exceeding m or of parity different from m
    cannot occur and return 0 without touching the dimension formulas.
    """
    n1, n2, n3 = label
    if any(v > m or (v - m) % 2 != 0 for v in label):
        return 0
    return sum(
        sign * dim_weight(m, (n1 + d1, n2 + d2, n3 + d3))
        for (d1, d2, d3), sign in _CORNERS
    )


def decompose_symmetric_power(m: int) -> Decomposition:
    """Complete decomposition of the m-th symmetric power.

    Enumerates every candidate label with components in
    {m mod 2, m mod 2 + 2, ..., m} (weights of the power lie in [-m, m]^3,
    so nothing outside can occur) and keeps the positive multiplicities.
    Entries are inserted in descending lexicographic label order.
    """
    if m < 0:
        raise ValueError(f"power must be non-negative, got {m}")
    out: Decomposition = {}
    values = range(m, -1, -2)
    for n1 in values:
        for n2 in values:
            for n3 in values:
                x = multiplicity_sym(m, (n1, n2, n3))
                if x:
                    out[(n1, n2, n3)] = x
    return out
