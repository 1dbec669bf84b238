#!/usr/bin/env python3
"""Double cosets in S3: sizes, partitions, canonical representatives.

One-line notation throughout: a permutation is the tuple of images of
0..n-1, and p * q applies q first.
"""

from composita import (ElementSet, Permutation, Subgroup, canonical_rep,
                       conjugate, decompose_into_double_cosets, double_coset,
                       intersect, subgroup_closure)
from composita.perm import canonical_rep  # noqa: F811  (explicit home)

s3 = Subgroup.symmetric(3)
print(f"S3 has {s3.order} elements:")
for p in s3:
    print("   ", list(p.images), "cycles:", p.cycles() or "identity")

h = subgroup_closure([Permutation.from_cycles([(1, 2)], 3)])
print(f"\nH = <(1 2)> has order {h.order}")

e = Permutation.identity(3)
c = Permutation((1, 2, 0))
print("\nDouble cosets H g H:")
for g in (e, c):
    coset = double_coset(h, g, h)
    cap = intersect(h, conjugate(h, g))
    print(f"  g = {list(g.images)}: size {len(coset)} "
          f"(= |H| |H| / |H cap gHg^-1| = {h.order * h.order // cap.order})")

print("\nThe two cosets partition S3:")
reps = decompose_into_double_cosets(ElementSet.from_iterable(s3.elements), h, h)
for r in reps:
    members = [list(p.images) for p in double_coset(h, r, h)]
    print(f"  representative {list(r.images)} -> {members}")

print("\nCanonical representatives are stable across the coset:")
for g in double_coset(h, c, h):
    print(f"  canonical_rep of {list(g.images)} =",
          list(canonical_rep(h, g, h).images))
