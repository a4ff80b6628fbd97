"""
Coordinate ideals and the shift automorphism
============================================

Enumerates every ideal spanned by basis vectors, compares against the
closed-form classification (suffixes plus sporadic skip ideals), and
shows the automorphism that folds each skip ideal onto a suffix.
"""

from liealg import (
    QQ,
    Subspace,
    classify_ideals,
    enumerate_coordinate_ideals,
    hat_shift_automorphism,
    skip_subspace,
    suffix_subspace,
    truncated_algebra,
)

a6 = truncated_algebra(6)

# brute force over all 2^7 coordinate subspaces
ideals = enumerate_coordinate_ideals(a6)
print("coordinate ideals of the dim-7 member:")
for s in ideals:
    print("  span{T%s}" % ", T".join(str(i) for i in s.pivot_columns())
          if s.dim else "  0")

# the closed form: suffixes span{Tm..Tn} for every m, plus skip ideals
# span{T_{m-2}} + span{Tm..Tn} exactly where the hat of m vanishes
c = classify_ideals(6)
print("\nsuffix starts:", c.suffix_ideals)
print("skip starts:  ", c.skip_ideals)
print("matches brute force:", set(c.subspaces()) == set(ideals))

# T_i -> -T_{i+1} extends to an automorphism whenever w(n) != 1;
# it identifies each skip ideal with the suffix one step earlier
phi = hat_shift_automorphism(6)
print("\nshift map is an automorphism:", a6.is_automorphism(phi))
for m in c.skip_ideals:
    image = Subspace(QQ, 7, [phi * v for v in skip_subspace(6, m).basis])
    print(f"skip ideal (m={m}) maps onto suffix span{{T{m - 1}..T6}}:",
          image == suffix_subspace(6, m - 1))

print("\nno shift automorphism when w(n) = 1:", hat_shift_automorphism(7))
