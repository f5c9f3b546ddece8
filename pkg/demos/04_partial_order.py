#!/usr/bin/env python3
"""A Loewner-style order for partial matrices.

A(G) >= B(G) when the entrywise difference is partial positive
semidefinite (strict when partial PD).  The order is genuinely partial:
rescaling one operand easily makes a comparable pair incomparable.
"""

from pgm import (
    Comparison,
    Pattern,
    PartialMatrix,
    is_partial_pd,
    max_det_completion,
    partial_order,
    scale,
    sub,
)

g = Pattern.from_pairs(4, [(1, 3), (1, 4), (2, 3), (3, 4)])
a = PartialMatrix(
    pattern=g,
    values={
        (1, 1): 3.0, (2, 2): 6.0, (3, 3): 4.0, (4, 4): 5.0,
        (1, 3): 2.0, (1, 4): 1.0, (2, 3): 1.0, (3, 4): 1.0,
    },
)
b = PartialMatrix(
    pattern=g,
    values={
        (1, 1): 1.0, (2, 2): 5.0, (3, 3): 3.0, (4, 4): 2.0,
        (1, 3): 1.0, (1, 4): 1.0, (2, 3): 1.0, (3, 4): 1.0,
    },
)

diff = sub(a, b)
print("difference entries:", {pos: v for pos, v in sorted(diff.values.items())})
print("difference partial PD:", is_partial_pd(diff))
print("verdict A vs B:", partial_order(a, b).value)
print("verdict A vs A:", partial_order(a, a).value)
print("verdict A vs 3B:", partial_order(a, scale(3.0, b)).value)

# Comparability is preserved by completion determinants: A > B > 0
# forces det(Ahat) >= det(Bhat).
da = max_det_completion(a).determinant
db = max_det_completion(b).determinant
print(f"\ndet(Ahat) = {da:.6g} >= det(Bhat) = {db:.6g}:", da >= db)

# Both operands complete, yet the difference of completions need not be
# PD even when A > B; the order lives on the partial data.
assert partial_order(a, b) is Comparison.GT
