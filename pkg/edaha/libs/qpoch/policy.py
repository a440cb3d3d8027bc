from pydantic import BaseModel, ConfigDict, Field, model_validator

from ...core.config import defaults
from ...core.config.model import NumericConfig


class NumericPolicy(BaseModel):
    """
    Precision, truncation and sampling settings for one numeric computation.

    Policies are frozen so they can be handed to worker threads as they are.
    """

    model_config = ConfigDict(frozen=True)

    precision: int = Field(default=defaults.NUMERIC_PRECISION, ge=15)
    max_product_index: int = Field(default=defaults.NUMERIC_MAX_PRODUCT_INDEX, ge=10)
    tol: float = Field(default=defaults.NUMERIC_TOL, gt=0)
    samples: int = Field(default=defaults.NUMERIC_SAMPLES, ge=1)
    seed: int = defaults.NUMERIC_SEED
    epsilon: float = Field(default=defaults.NUMERIC_EPSILON, gt=0, lt=1)

    @model_validator(mode="after")
    def _tol_matches_precision(self) -> "NumericPolicy":
        floor = 10.0 ** (3 - self.precision)
        if self.tol < floor:
            raise ValueError(
                f"tol={self.tol:.1e} is below what {self.precision} digits can certify ({floor:.1e})"
            )
        return self

    @classmethod
    def from_config(cls, config: NumericConfig, **overrides) -> "NumericPolicy":
        values = config.model_dump()
        values.update(overrides)
        return cls(**values)
