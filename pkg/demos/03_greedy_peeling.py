"""
The greedy character peeling algorithm, step by step
====================================================

A finite-dimensional module is pinned down by its character, the map
from weights to weight-space dimensions.  To decompose the module, pick
any maximal weight of the character: it must be the highest weight of
some irreducible summand, so subtract that irreducible's character and
repeat until nothing is left.
"""

from symcube import (
    character_irrep,
    character_sub,
    character_symmetric_power,
    character_total,
    decompose_symmetric_power,
    greedy_decompose,
    maximal_weights,
)

# Watch the remainder shrink while decomposing S^3 by hand.
remainder = character_symmetric_power(3)
step = 0
print("peeling S^3 (dimension", character_total(remainder), "):")
while remainder:
    step += 1
    tops = maximal_weights(remainder)
    chosen = tops[0]  # descending lexicographic tie-break
    remainder = character_sub(remainder, character_irrep(chosen))
    print(f"  step {step}: maximal weights {tops}, peel {chosen}, "
          f"{character_total(remainder)} dims left")

# The library loop does the same thing in one call.
print("\ngreedy_decompose(ch S^3):", greedy_decompose(character_symmetric_power(3)))

# Both decomposition routes agree on every symmetric power.
for m in range(9):
    assert greedy_decompose(character_symmetric_power(m)) == \
        decompose_symmetric_power(m)
print("greedy == inclusion-exclusion for m <= 8")

# The greedy loop also detects inputs that are not module characters:
# any module character has sign-symmetric weights, so a lone negative
# weight cannot be peeled.
try:
    greedy_decompose({(-2, 0, 0): 1})
except ValueError as exc:
    print("\nrejected invalid input:", exc)
