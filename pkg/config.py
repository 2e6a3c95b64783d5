# config.py

"""
Runtime settings, read once from the environment (and a local .env file).

    QMH_MAX_CELLS        safety limit on m*n                      (9)
    QMH_MAX_RANK         safety limit on m+n                      (9)
    QMH_SEED             default sampling seed                    (20240601)
    QMH_RANDOM_SAMPLES   random rational samples per run          (200)
    QMH_TORUS_TRIALS     diagonal torus trials                    (50)
    QMH_DEGREE_BOUND     default Groebner degree bound            (unset)
    QMH_LOG_LEVEL        loguru level for stderr                  (WARNING)
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, model_validator

load_dotenv()

Format = Literal["json", "dot", "text"]
Suite = Literal["poset", "demazure", "rmatrix", "poisson", "all"]


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_cells: int = Field(9, ge=1)
    max_rank: int = Field(9, ge=2, le=9)
    seed: int = 20240601
    random_samples: int = Field(200, ge=0)
    torus_trials: int = Field(50, ge=0)
    degree_bound: Optional[int] = Field(None, ge=1)
    log_level: str = "WARNING"


def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    return int(raw)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    values = {
        "max_cells": _env_int("QMH_MAX_CELLS"),
        "max_rank": _env_int("QMH_MAX_RANK"),
        "seed": _env_int("QMH_SEED"),
        "random_samples": _env_int("QMH_RANDOM_SAMPLES"),
        "torus_trials": _env_int("QMH_TORUS_TRIALS"),
        "degree_bound": _env_int("QMH_DEGREE_BOUND"),
        "log_level": os.getenv("QMH_LOG_LEVEL"),
    }
    return Settings(**{k: v for k, v in values.items() if v is not None})


class RunConfig(BaseModel):
    """One command-line run, validated against the configured safety limits."""

    model_config = ConfigDict(frozen=True)

    command: str
    m: int = Field(2, ge=1)
    n: int = Field(2, ge=1)
    seed: int = 20240601
    degree_bound: Optional[int] = Field(None, ge=1)
    format: Format = "json"
    suite: Suite = "all"
    samples: int = Field(200, ge=0)
    torus_trials: int = Field(50, ge=0)
    max_cells: int = 9
    max_rank: int = 9

    @model_validator(mode="after")
    def _within_limits(self) -> "RunConfig":
        if self.m * self.n > self.max_cells:
            raise ValueError(f"m*n = {self.m * self.n} exceeds the limit {self.max_cells} (QMH_MAX_CELLS)")
        if self.m + self.n > self.max_rank:
            raise ValueError(f"m+n = {self.m + self.n} exceeds the limit {self.max_rank} (QMH_MAX_RANK)")
        return self

    @classmethod
    def from_settings(cls, settings: Settings, **values: object) -> "RunConfig":
        defaults = {
            "seed": settings.seed,
            "degree_bound": settings.degree_bound,
            "samples": settings.random_samples,
            "torus_trials": settings.torus_trials,
            "max_cells": settings.max_cells,
            "max_rank": settings.max_rank,
        }
        defaults.update({k: v for k, v in values.items() if v is not None})
        return cls(**defaults)
