"""
Partitions, singular maps and idempotents
=========================================

The objects everything else is built from, on a three-point set.
"""

from partcat.core import (
    SetPartition, Transformation, canonical_idempotent, cross_sections, enumerate_partitions,
    enumerate_singular, green_L, green_R, idempotents, image_set, kernel,
)

# the four partitions of {0, 1, 2} other than the discrete one
for p in enumerate_partitions(3, non_identity_only=True):
    print(p, "cross-sections:", cross_sections(p))

# maps compose left to right: x(ab) = (xa)b
a, b = Transformation((0, 0, 2)), Transformation((1, 1, 1))
print("a*b =", a * b, " b*a =", b * a)
print("kernel of a:", kernel(a), " image of a:", sorted(image_set(a)))

# 21 non-invertible maps, 9 of them idempotent
print(len(enumerate_singular(3)), "singular maps,", len(idempotents(3)), "idempotents")

# each partition has a preferred idempotent, fixing the least element of each block
p = SetPartition(3, [(0, 2), (1,)])
print("canonical idempotent of", p, "is", canonical_idempotent(p))

# R-related maps share a kernel, L-related maps share an image
c = Transformation((1, 1, 2))
print("a R c:", green_R(a, c), " a L c:", green_L(a, c))
