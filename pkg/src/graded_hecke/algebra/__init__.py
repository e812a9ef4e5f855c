"""Group algebras, root data and the algebra built from a form family."""
from .group_algebra import GroupAlgebraElement, commutator
from .lusztig import closed_form, lusztig_forms, verify_theorem_3_5
from .roots import RootSystemData, root_system
from .straighten import AlgebraA, VCoeffElement, associativity_probe, straightened_product

__all__ = [
    "AlgebraA",
    "GroupAlgebraElement",
    "RootSystemData",
    "VCoeffElement",
    "associativity_probe",
    "closed_form",
    "commutator",
    "lusztig_forms",
    "root_system",
    "straightened_product",
    "verify_theorem_3_5",
]
