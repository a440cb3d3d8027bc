from .automorphisms import (
    AUTOMORPHISMS,
    UnknownAutomorphism,
    apply_auto,
    casimir,
    idempotent_A,
    idempotent_B,
    named_element,
    parse_composition,
)
from .certificates import (
    APPENDIX_FAMILIES,
    Certificate,
    CertificateExpr,
    NonZeroResidual,
    appendix_certificates,
    casimir_certificates,
    certificate_check,
    certificate_record,
    load_certificate_file,
    load_certificates,
    pslz_theorem_certificates,
    require_certificate,
)
from .ncpoly import (
    GeneratorSymbol,
    Monomial,
    NCPoly,
    format_monomial,
    format_ncpoly,
    gen_A,
    gen_B,
    nc_mul,
    parse_monomial,
)
from .reduction import reduce_modulo_ideal, reduce_monomial
from .relators import (
    RELATORS,
    RelatorInstance,
    UnknownRelator,
    relator,
    relator_arity,
    relator_instance,
)

__all__ = [
    "AUTOMORPHISMS",
    "UnknownAutomorphism",
    "apply_auto",
    "casimir",
    "idempotent_A",
    "idempotent_B",
    "named_element",
    "parse_composition",
    "APPENDIX_FAMILIES",
    "Certificate",
    "CertificateExpr",
    "NonZeroResidual",
    "appendix_certificates",
    "casimir_certificates",
    "certificate_check",
    "certificate_record",
    "load_certificate_file",
    "load_certificates",
    "pslz_theorem_certificates",
    "require_certificate",
    "GeneratorSymbol",
    "Monomial",
    "NCPoly",
    "format_monomial",
    "format_ncpoly",
    "gen_A",
    "gen_B",
    "nc_mul",
    "parse_monomial",
    "reduce_modulo_ideal",
    "reduce_monomial",
    "RELATORS",
    "RelatorInstance",
    "UnknownRelator",
    "relator",
    "relator_arity",
    "relator_instance",
]
