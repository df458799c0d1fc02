"""
H-functors and the normal dual
==============================

An idempotent e gives a set-valued functor on subsets: H(e, A) collects the maps in eS
whose image lies inside A. Only the kernel of e matters.
"""

from partcat.core import Transformation
from partcat.powerset import DualCategory, HFunctor, PowersetCategory, h_equal, h_object

C = PowersetCategory(3)
e, f = Transformation((0, 0, 2)), Transformation((1, 1, 2))
for A in C.objects:
    print(A, sorted(str(a) for a in h_object(HFunctor.of(e), A)))

# e and f have the same kernel, so they give the same functor
print("same functor:", h_equal(HFunctor.of(e), HFunctor.of(f)))

# the normal dual has one object per such functor, ordered by refinement of kernels
D = DualCategory(3)
for h in D.objects:
    print("object", h.kernel, "represented by", h.representative)
print(sum(1 for _ in D.morphisms()), "natural transformations between them")
