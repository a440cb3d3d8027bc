from .character import (
    LaumonParams,
    X_value,
    laumon_f,
    laumon_f_stable,
    laurent_coefficients,
    specialization,
    specialization_from_roots,
    weight,
)
from .checks import (
    ALL_PAIRS,
    conjecture_check,
    eigen_relation_check,
    eigen_residuals,
    laumon_report,
    psi_structure_checks,
)
from .nekrasov import NekArgs, delta, nek_factor, nek_factor_stable
from .partitions import EMPTY, Partition, partition_tuples, partitions_of, partitions_up_to
from .psi import psi_closed, psi_prefactor

__all__ = [
    "LaumonParams",
    "X_value",
    "laumon_f",
    "laumon_f_stable",
    "laurent_coefficients",
    "specialization",
    "specialization_from_roots",
    "weight",
    "ALL_PAIRS",
    "conjecture_check",
    "eigen_relation_check",
    "eigen_residuals",
    "laumon_report",
    "psi_structure_checks",
    "NekArgs",
    "delta",
    "nek_factor",
    "nek_factor_stable",
    "EMPTY",
    "Partition",
    "partition_tuples",
    "partitions_of",
    "partitions_up_to",
    "psi_closed",
    "psi_prefactor",
]
