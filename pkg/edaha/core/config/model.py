from typing import Literal

from pydantic import BaseModel, Field

from . import defaults
from . import descriptions as desc


class PrefixedConfig(BaseModel):
    """Sections whose CLI options are prefixed with the section name."""

    pass


class GeneralConfig(BaseModel):
    """Configuration for console output."""

    icons: bool = Field(default=defaults.GENERAL_ICONS, description=desc.GENERAL_ICONS)
    pygment_style: Literal[
        "default",
        "dracula",
        "github-dark",
        "gruvbox-dark",
        "monokai",
        "nord",
        "one-dark",
        "solarized-dark",
        "solarized-light",
        "vim",
    ] = Field(
        default=defaults.GENERAL_PYGMENT_STYLE, description=desc.GENERAL_PYGMENT_STYLE
    )


class NumericConfig(BaseModel):
    """Arbitrary precision settings shared by every numeric zero test."""

    precision: int = Field(
        default=defaults.NUMERIC_PRECISION,
        ge=15,
        le=1000,
        description=desc.NUMERIC_PRECISION,
    )
    max_product_index: int = Field(
        default=defaults.NUMERIC_MAX_PRODUCT_INDEX,
        ge=10,
        description=desc.NUMERIC_MAX_PRODUCT_INDEX,
    )
    tol: float = Field(default=defaults.NUMERIC_TOL, gt=0, description=desc.NUMERIC_TOL)
    samples: int = Field(
        default=defaults.NUMERIC_SAMPLES, ge=1, le=50, description=desc.NUMERIC_SAMPLES
    )
    seed: int = Field(default=defaults.NUMERIC_SEED, description=desc.NUMERIC_SEED)
    epsilon: float = Field(
        default=defaults.NUMERIC_EPSILON,
        gt=0,
        lt=1,
        description=desc.NUMERIC_EPSILON,
    )


class VerifyConfig(BaseModel):
    """Sizes of the verification suites."""

    max_word_len: int = Field(
        default=defaults.VERIFY_MAX_WORD_LEN,
        ge=0,
        le=8,
        description=desc.VERIFY_MAX_WORD_LEN,
    )
    max_total_len: int = Field(
        default=defaults.VERIFY_MAX_TOTAL_LEN,
        ge=0,
        le=6,
        description=desc.VERIFY_MAX_TOTAL_LEN,
    )
    random_tuples: int = Field(
        default=defaults.VERIFY_RANDOM_TUPLES,
        ge=0,
        description=desc.VERIFY_RANDOM_TUPLES,
    )
    random_max_total_len: int = Field(
        default=defaults.VERIFY_RANDOM_MAX_TOTAL_LEN,
        ge=0,
        le=8,
        description=desc.VERIFY_RANDOM_MAX_TOTAL_LEN,
    )
    residual_tol: float = Field(
        default=defaults.VERIFY_RESIDUAL_TOL,
        gt=0,
        description=desc.VERIFY_RESIDUAL_TOL,
    )
    workers: int = Field(
        default=defaults.VERIFY_WORKERS, ge=1, le=64, description=desc.VERIFY_WORKERS
    )


class LaumonConfig(PrefixedConfig):
    """Truncations of the affine Laumon partition sum."""

    max_boxes: int = Field(
        default=defaults.LAUMON_MAX_BOXES, ge=0, le=20, description=desc.LAUMON_MAX_BOXES
    )
    b_max: int = Field(
        default=defaults.LAUMON_B_MAX, ge=4, description=desc.LAUMON_B_MAX
    )
    p_order: int = Field(
        default=defaults.LAUMON_P_ORDER, ge=0, le=8, description=desc.LAUMON_P_ORDER
    )
    s_order: int = Field(
        default=defaults.LAUMON_S_ORDER, ge=0, le=16, description=desc.LAUMON_S_ORDER
    )
    tol: float = Field(default=defaults.LAUMON_TOL, gt=0, description=desc.LAUMON_TOL)
    precision: int = Field(
        default=defaults.LAUMON_PRECISION,
        ge=15,
        le=500,
        description=desc.LAUMON_PRECISION,
    )
    p: float = Field(default=defaults.LAUMON_P, gt=0, lt=1, description=desc.LAUMON_P)
    s: float = Field(default=defaults.LAUMON_S, gt=0, lt=1, description=desc.LAUMON_S)
    Q: float = Field(default=defaults.LAUMON_Q, gt=1, description=desc.LAUMON_Q)


class AppConfig(BaseModel):
    """The root configuration model for edaha."""

    general: GeneralConfig = Field(
        default_factory=GeneralConfig, description=desc.APP_GENERAL
    )
    numeric: NumericConfig = Field(
        default_factory=NumericConfig, description=desc.APP_NUMERIC
    )
    verify: VerifyConfig = Field(
        default_factory=VerifyConfig, description=desc.APP_VERIFY
    )
    laumon: LaumonConfig = Field(
        default_factory=LaumonConfig, description=desc.APP_LAUMON
    )
