from .auxiliary import AuxConstant, aux_c, aux_c_tilde, aux_constant
from .checks import (
    BASE_RELATIONS,
    check_a_shift,
    check_b_identity,
    check_conjugation_flips_ab,
    check_equivariance,
    check_idempotent_image,
    check_recursion_consistency,
    equivariance_report,
    exhaustive_relator_cases,
    random_relator_cases,
    relations_report,
    relator_record,
    shifts_report,
    verify_base_relations,
    verify_equivariance,
    verify_relator_instance,
    verify_shift_properties,
)
from .matrices import GeneratorMatrixCache, O_matrix, default_cache, peel_block, psi
from .psi0 import Psi0Data, defining_relations, psi0_checks, psi0_data, span_rank

__all__ = [
    "AuxConstant",
    "aux_c",
    "aux_c_tilde",
    "aux_constant",
    "BASE_RELATIONS",
    "check_a_shift",
    "check_b_identity",
    "check_conjugation_flips_ab",
    "check_equivariance",
    "check_idempotent_image",
    "check_recursion_consistency",
    "equivariance_report",
    "exhaustive_relator_cases",
    "random_relator_cases",
    "relations_report",
    "relator_record",
    "shifts_report",
    "verify_base_relations",
    "verify_equivariance",
    "verify_relator_instance",
    "verify_shift_properties",
    "GeneratorMatrixCache",
    "O_matrix",
    "default_cache",
    "peel_block",
    "psi",
    "Psi0Data",
    "defining_relations",
    "psi0_checks",
    "psi0_data",
    "span_rank",
]
