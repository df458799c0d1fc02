"""Finite normal categories built from partitions, subsets and transformations of {0, ..., n-1}."""

from .category import check_normal_category, cone_product, enumerate_all_normal_cones, generate_semigroup
from .core import SetPartition, Subset, Transformation, enumerate_partitions, enumerate_singular, idempotents
from .iso import functor_G, functor_P, functor_Q, verify_functor
from .partition import PartitionCategory
from .powerset import DualCategory, PowersetCategory, principal_cone
from .report import run_suites
from .right_ideal import RightIdealCategory

__version__ = "0.1.0"

__all__ = [
    "DualCategory",
    "PartitionCategory",
    "PowersetCategory",
    "RightIdealCategory",
    "SetPartition",
    "Subset",
    "Transformation",
    "check_normal_category",
    "cone_product",
    "enumerate_all_normal_cones",
    "enumerate_partitions",
    "enumerate_singular",
    "functor_G",
    "functor_P",
    "functor_Q",
    "generate_semigroup",
    "idempotents",
    "principal_cone",
    "run_suites",
    "verify_functor",
]
