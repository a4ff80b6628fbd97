"""
Invariant metrics on the anti-diagonal
======================================

Shows the canonical metric, verifies its invariance exactly, and sweeps
the single-diagonal solver across the family: a metric supported on
i + j = n exists precisely when 3 divides n.
"""

from liealg import (
    IDENTITY_HAT,
    QQ,
    canonical_metric,
    single_diagonal_metric_solve,
    truncated_algebra,
)

# the canonical metric pairs Ti with T_{n-i} and adds a free b at (0,0)
metric = canonical_metric(6, b=QQ(-7, 3))
print("canonical metric for n = 6, b = -7/3:")
print(metric.matrix)

a6 = truncated_algebra(6)
print("invariant:", metric.invariance_witness(a6) is None)
print("non-degenerate:", metric.is_nondegenerate())

# sweep the solver: for each n it looks for weights w_i making
# B(Ti, Tj) = w_i delta_{i+j,n} invariant, and solves exactly
print("\nn : single-diagonal metric?")
for n in range(0, 16):
    result = single_diagonal_metric_solve(n)
    mark = "yes, weights " + str(list(result.weights)) if result.exists else "no"
    print(f"{n:2d} : {mark}")

# the obstruction is w(n) = 0; the plain integer hat never satisfies it
print("\ninteger hat at n = 6:",
      single_diagonal_metric_solve(6, IDENTITY_HAT).exists)
print("integer hat at n = 9:",
      single_diagonal_metric_solve(9, IDENTITY_HAT).exists)
