"""
The category of partitions
==========================

Morphisms between partitions are maps between their block sets, running backwards.
"""

from partcat.category import check_normal_category, epimorphic_part
from partcat.core import SetPartition
from partcat.partition import PartitionCategory, PartitionMorphism, inclusion, normal_factorize, retraction

C = PartitionCategory(3)
ONE = SetPartition(3, [(0, 1, 2)])
A = SetPartition(3, [(0, 1), (2,)])

# the single block of ONE is refined by A, so ONE sits below A
print("ONE <= A:", C.leq(ONE, A), " hom(A, ONE) has", len(C.hom(A, ONE)), "morphisms")

# the inclusion and its retraction compose to the identity
j, r = inclusion(ONE, A), retraction(ONE, A)
print("inclusion eta", j.eta, " retraction eta", r.eta, " j then r:", C.compose(j, r).eta)

# a constant endomorphism of A factors through ONE
f = PartitionMorphism(A, A, (0, 0))
nf = normal_factorize(f)
print("retraction", nf.retraction.eta, "iso", nf.isomorphism.eta, "inclusion", nf.inclusion.eta)
print("epimorphic part:", epimorphic_part(C, f))

# every law of a normal category, checked exhaustively
report = check_normal_category(C, policies=("min", "max"))
for check in report.checks:
    print(f"  {check.name:40s} {'ok' if check.passed else 'FAILED'} ({check.count})")
