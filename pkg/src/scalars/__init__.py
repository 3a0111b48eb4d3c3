"""Exact scalar domains: Q and cyclotomic fields Q(zeta_M)"""

from src.scalars.cyclo import (
    CycloScalar,
    as_scalar,
    cyclotomic_polynomial,
    is_primitive_root,
    to_rational,
    zeta_power,
)

__all__ = [
    "CycloScalar",
    "as_scalar",
    "cyclotomic_polynomial",
    "is_primitive_root",
    "to_rational",
    "zeta_power",
]
