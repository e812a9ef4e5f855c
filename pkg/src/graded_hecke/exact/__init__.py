"""Exact scalars: cyclotomic numbers and parameter polynomials."""
from .cyclotomic import (
    Cyclotomic,
    CyclotomicZeroDivisionError,
    cyclo_arith,
    cyclo_make,
    cyclotomic_polynomial,
    zeta,
)
from .parampoly import ParamPoly

__all__ = [
    "Cyclotomic",
    "CyclotomicZeroDivisionError",
    "ParamPoly",
    "cyclo_arith",
    "cyclo_make",
    "cyclotomic_polynomial",
    "zeta",
]
