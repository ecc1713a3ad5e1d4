from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class LabSettings(BaseModel):
    """Tunables shared by the library defaults and the CLI flags."""

    model_config = ConfigDict(frozen=True)

    regular_denominator_bound: int = Field(default=10_000, ge=2)
    oracle_tolerance: float = Field(default=1e-9, gt=0)
    oracle_step_floor: float = Field(default=1e-12, gt=0)
    default_seed: int = 0
    spindle_max_size: int = Field(default=4, ge=2)
    spindle_max_depth: int = Field(default=4, ge=1)


DEFAULT_SETTINGS = LabSettings()
