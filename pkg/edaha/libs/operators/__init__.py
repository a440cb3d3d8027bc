from .catalog import (
    ALPHA,
    BETA,
    GAMMA,
    DA_inverse_matrix,
    S_matrix,
    build_DA,
    build_DB,
    build_OA1,
    build_OB1,
    build_S,
    x_pexp,
    x_times,
)
from .checks import (
    CONJUGATION_IDENTITIES,
    BraidCheck,
    check_braid,
    check_S_fourth,
    check_S_squared,
    conjugation_identity_check,
    describe_entry,
    sl2z_report,
)
from .matrix import Mat3R, mat_equal, scalar_matrix
from .twisted import TwistedOperator, twisted_mul

__all__ = [
    "ALPHA",
    "BETA",
    "GAMMA",
    "DA_inverse_matrix",
    "S_matrix",
    "build_DA",
    "build_DB",
    "build_OA1",
    "build_OB1",
    "build_S",
    "x_pexp",
    "x_times",
    "CONJUGATION_IDENTITIES",
    "BraidCheck",
    "check_braid",
    "check_S_fourth",
    "check_S_squared",
    "conjugation_identity_check",
    "describe_entry",
    "sl2z_report",
    "Mat3R",
    "mat_equal",
    "scalar_matrix",
    "TwistedOperator",
    "twisted_mul",
]
