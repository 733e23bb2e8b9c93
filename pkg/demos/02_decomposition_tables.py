"""
Decomposing symmetric powers into irreducibles
==============================================

S^m(C2 (x) C2 (x) C2) is a completely reducible module over
sl2(C) + sl2(C) + sl2(C), so it splits into irreducibles
V(n1) (x) V(n2) (x) V(n3).  The multiplicity of each label is an
alternating sum of eight weight-space dimensions, and the whole table
follows by scanning all candidate labels.
"""

from math import comb

from symcube import decompose_symmetric_power, decomposition_total, multiplicity_sym

# The first few decomposition tables.  Each row is
# (n1, n2, n3) x multiplicity, and the dimensions always total C(m+7, 7).
for m in range(5):
    dec = decompose_symmetric_power(m)
    rows = ", ".join(
        f"{label}x{dec[label]}" for label in sorted(dec, reverse=True)
    )
    print(f"S^{m} = {rows}")
    assert decomposition_total(dec) == comb(m + 7, 7)

# A single multiplicity without building the table: V(4) (x) V(8) (x) V(8)
# appears three times in S^40.
print("\nmultiplicity of (4,8,8) in S^40:", multiplicity_sym(40, (4, 8, 8)))

# Invariants (copies of the trivial module) appear exactly in degrees
# divisible by four: the invariant ring of a 2x2x2 array is generated by
# Cayley's hyperdeterminant, which has degree 4.
print("\ntrivial-module multiplicities for m = 0..24:")
print([multiplicity_sym(m, (0, 0, 0)) for m in range(25)])

# How the number of distinct irreducible constituents grows with m.
print("\n  m   labels   copies   dim")
for m in range(0, 13, 2):
    dec = decompose_symmetric_power(m)
    print(f"{m:3} {len(dec):8} {sum(dec.values()):8} {comb(m + 7, 7):8}")
