"""Brute-force finite-field and matrix-group oracle."""

from src.fforacle.field import FiniteField, FqElement, get_field
from src.fforacle.matrices import (
    ClassCensus,
    ConjugacyClass,
    GroupEnumeration,
    MatrixGroupElement,
    UnipotentSplit,
    class_count,
    conjugacy_classes,
    conjugacy_orbit,
    determinant,
    enumerate_group,
    jordan_nilpotent,
    jordan_type,
    jordan_unipotent,
    sl_order,
    unipotent_centralizer_order,
    unipotent_class_split,
)
from src.fforacle.twist import TwistSolution, dual_nilpotent, solve_twist_c0

__all__ = [
    # Fields
    "FiniteField",
    "FqElement",
    "get_field",
    # Matrix groups
    "MatrixGroupElement",
    "GroupEnumeration",
    "ConjugacyClass",
    "ClassCensus",
    "UnipotentSplit",
    "enumerate_group",
    "conjugacy_classes",
    "conjugacy_orbit",
    "class_count",
    "sl_order",
    "determinant",
    "jordan_nilpotent",
    "jordan_unipotent",
    "jordan_type",
    "unipotent_centralizer_order",
    "unipotent_class_split",
    # Twisting class
    "TwistSolution",
    "dual_nilpotent",
    "solve_twist_c0",
]
