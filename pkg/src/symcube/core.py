"""Shared objects for the weight combinatorics of sl2(C) + sl2(C) + sl2(C).

A weight is a plain integer triple (l1, l2, l3): the simultaneous
eigenvalues of the three Cartan generators H1, H2, H3.  An irreducible
module V(n1) (x) V(n2) (x) V(n3) is named by its highest weight
(n1, n2, n3), a triple of non-negative integers; its dimension is
(n1+1)(n2+1)(n3+1).

A character is a sparse dict from weight to weight-space dimension, a
decomposition is a sparse dict from irreducible label to multiplicity.
Both store strictly positive counts only, so dict equality is equality
of the objects described and "is zero" is plain emptiness.

Counts are Python ints and therefore exact at any size.  Every function
here is pure and all values are immutable once built, so concurrent use
needs no locking.
"""

Weight = tuple[int, int, int]
IrrepLabel = tuple[int, int, int]
Character = dict[Weight, int]
Decomposition = dict[IrrepLabel, int]

# Exponents (a000, a001, a010, a011, a100, a101, a110, a111) of a monomial
# in the eight basis vectors x[i,j,l] of C2 (x) C2 (x) C2; the exponent of
# x[i,j,l] sits at index 4i + 2j + l.  The degree is the sum of all eight.
MonomialExponents = tuple[int, int, int, int, int, int, int, int]


class NotASubcharacterError(ValueError):
    """Subtraction would take some weight-space dimension below zero."""


class CharacterFormatError(ValueError):
    """A character file violates the line format."""


def weight_leq(w1: Weight, w2: Weight) -> bool:
    """Partial order on weights: w1 precedes w2 iff every component grows
    by a non-negative even amount.

    For dominant w2 this says exactly that w1 occurs as a weight of the
    irreducible module with highest weight w2.
    """
    return all(a <= b and (b - a) % 2 == 0 for a, b in zip(w1, w2))


def weight_of_monomial(e: MonomialExponents) -> Weight:
    """Weight of the monomial with exponent tuple e.

    Each factor x[i,j,l] contributes (1-2i, 1-2j, 1-2l), so a degree-m
    monomial has weight (m-2k, m-2r, m-2n) where k, r, n count the factors
    with i = 1, j = 1, l = 1 respectively (with multiplicity).
    """
    a000, a001, a010, a011, a100, a101, a110, a111 = e
    m = a000 + a001 + a010 + a011 + a100 + a101 + a110 + a111
    k = a100 + a101 + a110 + a111
    r = a010 + a011 + a110 + a111
    n = a001 + a011 + a101 + a111
    return (m - 2 * k, m - 2 * r, m - 2 * n)


def character_add(c1: Character, c2: Character) -> Character:
    """Pointwise sum of two characters (character of the direct sum)."""
    out = dict(c1)
    for w, d in c2.items():
        out[w] = out.get(w, 0) + d
    return out


def character_sub(c1: Character, c2: Character) -> Character:
    """Pointwise difference c1 - c2, requiring c2 <= c1 everywhere.

    Raises NotASubcharacterError if any weight space of c2 is larger than
    the corresponding space of c1; entries that reach zero are dropped.
    """
    out = dict(c1)
    for w, d in c2.items():
        have = out.get(w, 0)
        if have < d:
            raise NotASubcharacterError(
                f"not a subcharacter: weight {w} has dimension {have} < {d}"
            )
        if have == d:
            del out[w]
        else:
            out[w] = have - d
    return out


def character_total(c: Character) -> int:
    """Sum of all weight-space dimensions: the dimension of the module."""
    return sum(c.values())


def irrep_dimension(label: IrrepLabel) -> int:
    """(n1+1)(n2+1)(n3+1), the dimension of the labeled irreducible."""
    n1, n2, n3 = label
    if n1 < 0 or n2 < 0 or n3 < 0:
        raise ValueError(f"highest weights must be non-negative, got {label}")
    return (n1 + 1) * (n2 + 1) * (n3 + 1)


def decomposition_total(dec: Decomposition) -> int:
    """Total dimension of a decomposition: sum of mult * irrep dimension."""
    return sum(mult * irrep_dimension(label) for label, mult in dec.items())


def parse_character(text: str) -> Character:
    """Parse the line-oriented character format.

    One entry per line: four whitespace-separated decimal integers
    ``l1 l2 l3 dim`` with dim > 0.  Lines starting with ``#`` are comments;
    blank lines are ignored; entry order is irrelevant; a repeated weight
    is an error.
    """
    entries: Character = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 4:
            raise CharacterFormatError(
                f"line {lineno}: expected 'l1 l2 l3 dim', got {raw!r}"
            )
        try:
            l1, l2, l3, dim = (int(f) for f in fields)
        except ValueError:
            raise CharacterFormatError(
                f"line {lineno}: non-integer field in {raw!r}"
            ) from None
        if dim <= 0:
            raise CharacterFormatError(
                f"line {lineno}: dimension must be positive, got {dim}"
            )
        w = (l1, l2, l3)
        if w in entries:
            raise CharacterFormatError(f"line {lineno}: duplicate weight {w}")
        entries[w] = dim
    return entries


def format_character(c: Character) -> str:
    """Render a character in the line format, weights in descending
    lexicographic order, so output can be fed back to parse_character."""
    return "".join(f"{w[0]} {w[1]} {w[2]} {c[w]}\n" for w in sorted(c, reverse=True))
