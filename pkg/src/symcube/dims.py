"""Exact weight-space dimensions of symmetric powers of C2 (x) C2 (x) C2.

Write C(m; k, r, n) for the dimension of the weight space of the m-th
symmetric power at weight (m-2k, m-2r, m-2n).  It counts exponent tuples
of degree-m monomials in the eight basis vectors x[i,j,l] whose factors
use i = 1 exactly k times, j = 1 exactly r times and l = 1 exactly n
times.  Permuting (k, r, n) or replacing a weight component by its
absolute value does not change the dimension, so everything below works
in the normalized position

    m/2 >= k >= r >= n >= 0,

which dim_weight produces from an arbitrary weight.

Two independent computations are provided:

* dim_by_convolution splits the eight exponents into the i = 0 and i = 1
  halves and sums products of 2x2 contingency-matrix counts (c2);
* dim_closed_form evaluates one of six quartic polynomials in
  (m, k, r, n), selected by the size of r + n relative to k and m - k
  and by parities.

The polynomial coefficients are rationals whose denominators divide 48.
Each evaluator therefore computes the polynomial scaled by 48 in integer
arithmetic and divides once at the end; an inexact division can only
mean the coefficient tables are mistranscribed, never bad input, and
raises immediately.
"""

from functools import lru_cache

from .core import Weight


def c2(r1: int, r2: int, r3: int) -> int:
    """Number of 2x2 non-negative integer matrices with total r1,
    second-row sum r2 and second-column sum r3.

    Zero whenever r2 > r1 or r3 > r1; otherwise
    min(r2, r3, r1 - r2, r1 - r3) + 1.
    """
    if r2 > r1 or r3 > r1:
        return 0
    return min(r2, r3, r1 - r2, r1 - r3) + 1


def _check_normalized(m: int, k: int, r: int, n: int) -> None:
    if not (0 <= n <= r <= k and 2 * k <= m):
        raise ValueError(
            f"index not normalized: need m/2 >= k >= r >= n >= 0, "
            f"got m={m}, k={k}, r={r}, n={n}"
        )


def dim_by_convolution(m: int, k: int, r: int, n: int) -> int:
    """C(m; k, r, n) as a convolution of 2x2 matrix counts.

    The i = 0 exponents form a 2x2 matrix with total m - k, second-row
    sum a and second-column sum b; the i = 1 exponents one with total k,
    second-row sum r - a and second-column sum n - b.  Summing the counts
    over all splits (a, b) counts every admissible exponent tuple once.
    """
    _check_normalized(m, k, r, n)
    total = 0
    mk = m - k
    for a in range(r + 1):
        for b in range(n + 1):
            left = c2(mk, a, b)
            if left:
                total += left * c2(k, r - a, n - b)
    return total


# Closed-form evaluators.  Each returns the applicable quartic polynomial
# multiplied by 48; _poly_mid/_poly_high omit the constant term, which is
# the only coefficient that differs between the parity variants.


def _poly_low_x48(k: int, r: int, n: int) -> int:
    # regime r + n <= k (constant term included: 48 = 48 * 1)
    return (
        48 + 64 * n + 4 * n**2 - 16 * n**3 - 4 * n**4
        + 48 * r + 88 * n * r + 48 * n**2 * r + 8 * n**3 * r
    )


def _poly_mid_x48(k: int, r: int, n: int) -> int:
    # regime k < r + n < m - k, shared terms
    return (
        16 * k - 20 * k**2 + 8 * k**3 - k**4
        + 48 * n + 40 * k * n - 24 * k**2 * n + 4 * k**3 * n
        - 16 * n**2 + 24 * k * n**2 - 6 * k**2 * n**2
        - 24 * n**3 + 4 * k * n**3 - 5 * n**4
        + 32 * r + 40 * k * r - 24 * k**2 * r + 4 * k**3 * r
        + 48 * n * r + 48 * k * n * r - 12 * k**2 * n * r
        + 24 * n**2 * r + 12 * k * n**2 * r + 4 * n**3 * r
        - 20 * r**2 + 24 * k * r**2 - 6 * k**2 * r**2
        - 24 * n * r**2 + 12 * k * n * r**2 - 6 * n**2 * r**2
        - 8 * r**3 + 4 * k * r**3 - 4 * n * r**3 - r**4
    )


def _poly_high_x48(m: int, k: int, r: int, n: int) -> int:
    # regime r + n >= m - k, shared terms
    return (
        -40 * k**2 - 2 * k**4
        + 16 * m + 40 * k * m + 24 * k**2 * m + 4 * k**3 * m
        - 20 * m**2 - 24 * k * m**2 - 6 * k**2 * m**2
        + 8 * m**3 + 4 * k * m**3 - m**4
        + 32 * n - 48 * k**2 * n + 40 * m * n + 48 * k * m * n
        + 12 * k**2 * m * n - 24 * m**2 * n - 12 * k * m**2 * n + 4 * m**3 * n
        - 36 * n**2 - 12 * k**2 * n**2 + 24 * m * n**2 + 12 * k * m * n**2
        - 6 * m**2 * n**2
        - 32 * n**3 + 4 * m * n**3 - 6 * n**4
        + 16 * r - 48 * k**2 * r + 40 * m * r + 48 * k * m * r
        + 12 * k**2 * m * r - 24 * m**2 * r - 12 * k * m**2 * r + 4 * m**3 * r
        + 8 * n * r - 24 * k**2 * n * r + 48 * m * n * r + 24 * k * m * n * r
        - 12 * m**2 * n * r + 12 * m * n**2 * r
        - 40 * r**2 - 12 * k**2 * r**2 + 24 * m * r**2 + 12 * k * m * r**2
        - 6 * m**2 * r**2
        - 48 * n * r**2 + 12 * m * n * r**2 - 12 * n**2 * r**2
        - 16 * r**3 + 4 * m * r**3 - 8 * n * r**3 - 2 * r**4
    )


def polynomial_case(m: int, k: int, r: int, n: int) -> str:
    """Label of the closed-form branch that applies to a normalized index.

    'I'     : r + n <= k
    'II.1'  : k < r + n < m - k and r + n - k even
    'II.2'  : k < r + n < m - k and r + n - k odd
    'III.1' : r + n >= m - k, m even, r + n - k even
    'III.2' : r + n >= m - k, m even, r + n - k odd
    'III.3' : r + n >= m - k, m odd
    """
    _check_normalized(m, k, r, n)
    if r + n <= k:
        return "I"
    if r + n < m - k:
        return "II.1" if (r + n - k) % 2 == 0 else "II.2"
    if m % 2 == 1:
        return "III.3"
    return "III.1" if (r + n - k) % 2 == 0 else "III.2"


@lru_cache(maxsize=None)
def dim_closed_form(m: int, k: int, r: int, n: int) -> int:
    """C(m; k, r, n) by the closed-form polynomial of the applicable case.

    Requires the normalized position m/2 >= k >= r >= n >= 0.
    """
    case = polynomial_case(m, k, r, n)
    if case == "I":
        val48 = _poly_low_x48(k, r, n)
    elif case == "II.1":
        val48 = 48 + _poly_mid_x48(k, r, n)  # constant 1
    elif case == "II.2":
        val48 = 45 + _poly_mid_x48(k, r, n)  # constant 15/16
    elif case == "III.1":
        val48 = 48 + _poly_high_x48(m, k, r, n)  # constant 1
    elif case == "III.2":
        val48 = 42 + _poly_high_x48(m, k, r, n)  # constant 7/8
    else:  # III.3
        val48 = 45 + _poly_high_x48(m, k, r, n)  # constant 15/16
    value, rem = divmod(val48, 48)
    if rem:
        raise ArithmeticError(
            f"scaled polynomial not divisible by 48 at m={m}, k={k}, r={r}, "
            f"n={n} (case {case}): coefficient table transcription defect"
        )
    return value


def dim_weight(m: int, w: Weight) -> int:
    """Dimension of the weight-w space of the m-th symmetric power.

    Zero for weights outside [-m, m]^3 or with a component of parity
    different from m.  Invariant under permuting components and flipping
    their signs; the implementation uses both symmetries to reach the
    normalized index and dispatch to dim_closed_form.
    """
    if m < 0:
        raise ValueError(f"power must be non-negative, got {m}")
    for comp in w:
        if abs(comp) > m or (comp - m) % 2 != 0:
            return 0
    # abs() forces each co-index (m - |comp|) / 2 into [0, m/2], so the
    # descending sort alone lands in the normalized position.
    k, r, n = sorted(((m - abs(comp)) // 2 for comp in w), reverse=True)
    return dim_closed_form(m, k, r, n)
