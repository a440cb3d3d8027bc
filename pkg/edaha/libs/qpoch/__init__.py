from .evaluate import fraction_log, pexp_eval, ring_eval, ring_eval_many, ring_eval_with_scale
from .identities import qpoch_identity_checks
from .poch import poch_eval, poch_log, poch_product
from .policy import NumericPolicy
from .sampling import SamplePoint, Sampler

__all__ = [
    "NumericPolicy",
    "SamplePoint",
    "Sampler",
    "fraction_log",
    "pexp_eval",
    "poch_eval",
    "poch_log",
    "poch_product",
    "qpoch_identity_checks",
    "ring_eval",
    "ring_eval_many",
    "ring_eval_with_scale",
]
