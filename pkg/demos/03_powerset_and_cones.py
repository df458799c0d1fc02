"""
Subsets, principal cones and the cone semigroup
===============================================

A map a of X gives a cone from every subset to the image of a. Products of such
cones reproduce products of maps.
"""

from itertools import product

from partcat.category import check_regular, cone_product, enumerate_all_normal_cones, generate_semigroup, is_associative
from partcat.core import Transformation, enumerate_singular
from partcat.powerset import PowersetCategory, principal_cone, transformation_of_cone

C = PowersetCategory(3)
a = Transformation((0, 0, 2))
rho = principal_cone(C, a)
print("vertex of rho^a:", rho.vertex)
for c in C.objects:
    print(f"  component at {c}: {rho[c].values}")
print("subsets where the component is a bijection:", sorted(rho.m_set, key=C.objects.index))
print("map recovered from the cone:", transformation_of_cone(rho))

# products of principal cones follow products of maps
singular = enumerate_singular(3)
cones = {s: principal_cone(C, s) for s in singular}
agree = sum(cone_product(C, cones[s], cones[t]) == cones[s * t] for s, t in product(singular, repeat=2))
print(agree, "of", len(singular) ** 2, "products agree")

# closure of the principal cones: 21 elements, associative and regular
sg = generate_semigroup(C, list(cones.values()))
print(len(sg.elements), "cones, associative:", is_associative(sg.table), "regular:", check_regular(sg.table).regular)

# and there are no other normal cones
print("all normal cones:", len(enumerate_all_normal_cones(C)))
