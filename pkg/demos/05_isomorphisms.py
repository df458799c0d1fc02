"""
Three presentations of one category
===================================

Right ideals generated by idempotents, the normal dual of the subset category and
the partition category are all isomorphic. The functors below are checked exhaustively.
"""

from partcat.core import Transformation
from partcat.iso import composite_is_identity, eta_from_carrier, functor_G, functor_P, functor_Q, verify_functor

# a translation between right ideals becomes a map between block sets
e, f, v = Transformation((0, 0, 2)), Transformation((0, 1, 1)), Transformation((0, 2, 2))
print("block map of the translation:", eta_from_carrier(e, v, f))

for witness in (functor_G(3), functor_P(3)):
    report = verify_functor(witness)
    print(witness.name, "passes:", report.passed)
    for check in report.checks:
        print(f"  {check.name:24s} {check.count}")

P = functor_P(3)
Q = functor_Q(3, source=P.target, target=P.source)
print("Q after P is the identity:", composite_is_identity(P, Q).passed)
print("P after Q is the identity:", composite_is_identity(Q, P).passed)
