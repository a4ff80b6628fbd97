"""
A tour of the graded solvable family
====================================

Builds the first few members, prints their bracket tables, and walks
through the standard structure theory: series, center, Killing form.
"""

from liealg import truncated_algebra

# the member of dimension n+1 lives on basis T0..Tn with
# [Ti, Tj] = w(i - j) T_{i+j}, truncated past Tn, where w is the
# balanced mod-3 reduction taking values in {-1, 0, 1}
a6 = truncated_algebra(6)
print("dim:", a6.dim)
print("labels:", a6.labels)
print("grading:", a6.grading)

print("\nnonzero brackets:")
for (i, j), terms in sorted(a6.sc.items()):
    rhs = " + ".join(f"{c} {a6.labels[k]}" for k, c in terms)
    print(f"  [{a6.labels[i]}, {a6.labels[j]}] = {rhs}")

# the Jacobi identity holds exactly, checked on every basis triple
print("\njacobi witness:", a6.check_jacobi())

# charges add: deg[Ti, Tj] = i + j whenever the bracket survives
print("graded by charge:", a6.check_grading(a6.grading))

# the family is solvable but never nilpotent: T0 acts semisimply
print("\nderived series dims:", [s.dim for s in a6.derived_series()])
print("lower central dims:  ", [s.dim for s in a6.lower_central_series()])
print("center:", a6.center().basis)

# the Killing form degenerates to a single entry at (0,0)
print("\nKilling form:")
print(a6.killing_form().matrix)
