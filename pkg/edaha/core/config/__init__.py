from .model import (
    AppConfig,
    GeneralConfig,
    LaumonConfig,
    NumericConfig,
    PrefixedConfig,
    VerifyConfig,
)

__all__ = [
    "AppConfig",
    "GeneralConfig",
    "LaumonConfig",
    "NumericConfig",
    "PrefixedConfig",
    "VerifyConfig",
]
