"""
Brute-force oracles behind every formula
========================================

Each closed-form count in the library is backed by a deliberately naive
enumeration.  The oracles are slow and obviously correct; the formulas
are fast.  This script replays the cross-checks the test suite pins.
"""

from symcube import (
    c2,
    c2_bruteforce,
    character_symmetric_power,
    convolution_bruteforce,
    dim_by_convolution,
    dim_closed_form,
    enumerate_character,
)

# 2x2 contingency matrices: count matrices with a given total, second-row
# sum and second-column sum.  The closed form is min(r2, r3, r1-r2, r1-r3)+1.
print("2x2 counts (closed vs enumerated):")
for args in [(5, 2, 3), (2, 1, 1), (4, 2, 2), (9, 4, 7)]:
    print(f"  c2{args} = {c2(*args)} / {c2_bruteforce(*args)}")

# A plausible-looking variant of that formula, with r2 - r3 as the last
# argument of the min, is refuted by a single enumeration:
r1, r2, r3 = 5, 2, 3
variant = min(r2, r3, r1 - r2, r2 - r3) + 1
print(f"  variant min(r2, r3, r1-r2, r2-r3)+1 at (5,2,3) gives {variant}, "
      f"enumeration gives {c2_bruteforce(r1, r2, r3)}")

# Weight dimensions three ways: quartic polynomial, convolution of 2x2
# counts, and raw enumeration of exponent-block pairs.
print("\nweight dimensions, three routes:")
for idx in [(8, 3, 2, 2), (11, 5, 4, 1), (40, 18, 16, 16)]:
    print(f"  C{idx}: {dim_closed_form(*idx)} / {dim_by_convolution(*idx)}"
          f" / {convolution_bruteforce(*idx)}")

# Whole characters: enumerating all C(m+7, 7) degree-m monomials and
# tallying weights reproduces the closed-form character exactly.
for m in range(9):
    assert enumerate_character(m) == character_symmetric_power(m)
print("\nmonomial enumeration == closed-form characters for m <= 8")

counts = enumerate_character(6)
print("a few S^6 weight spaces by raw count:",
      {w: counts[w] for w in [(6, 6, 6), (4, 4, 2), (0, 0, 0)]})
