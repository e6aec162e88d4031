"""
WildColor Configuration Management
==================================

Centralized configuration using Pydantic Settings. Every section reads
its own environment prefix; CLI flags override individual values per
invocation.
"""

from functools import lru_cache
from typing import Literal, Optional

from pydantic import Field
from pydantic_settings import BaseSettings


class EngineSettings(BaseSettings):
    """Deletion-contraction engine defaults"""

    memo_mode: Literal["labeled", "canonical"] = Field(
        default="labeled",
        description="Memo key mode; labeled keys are always collision-free",
    )
    edge_strategy: Literal["loops_first_max_degree", "first_edge"] = Field(
        default="loops_first_max_degree",
        description="Which edge deletion-contraction expands next",
    )
    drop_parallel_duplicates: bool = Field(default=True)
    factor_loops: bool = Field(default=True)

    class Config:
        env_prefix = "WILDCOLOR_ENGINE_"


class BudgetSettings(BaseSettings):
    """Caps on the exponential procedures"""

    # Brute-force oracle: (k+l)^n assignments
    bruteforce_max_vertices: int = Field(default=8, ge=0)
    bruteforce_max_colors: int = Field(default=6, ge=0)

    # Subset-expansion oracle
    subset_max_k: int = Field(default=4, ge=0)
    subset_max_vertices: int = Field(default=12, ge=0)

    # Canonical memo keys try every vertex permutation
    canonical_max_vertices: int = Field(default=10, ge=0)

    # Largest path/cycle compared against the sequences
    crosscheck_max_n: int = Field(default=12, ge=1)

    independence_max_vertices: int = Field(default=16, ge=0)

    class Config:
        env_prefix = "WILDCOLOR_BUDGET_"


class VerificationSettings(BaseSettings):
    """Verification sweep defaults"""

    random_graphs: int = Field(default=500, ge=0)
    random_seed: int = Field(default=20090101)
    random_max_vertices: int = Field(default=6, ge=1)
    random_max_edges: int = Field(default=8, ge=0)

    recurrence_terms: int = Field(default=12, ge=4)
    max_recurrence_order: int = Field(default=3, ge=1)

    class Config:
        env_prefix = "WILDCOLOR_VERIFY_"


class MonitoringSettings(BaseSettings):
    """Logging Configuration"""

    log_level: str = Field(default="WARNING")
    log_format: Literal["json", "text"] = Field(default="text")
    log_file: Optional[str] = Field(default=None)

    class Config:
        env_prefix = "WILDCOLOR_MONITOR_"


class Settings(BaseSettings):
    """Master Settings Configuration"""

    app_name: str = Field(default="WildColor")
    app_version: str = Field(default="1.0.0")

    engine: EngineSettings = Field(default_factory=EngineSettings)
    budget: BudgetSettings = Field(default_factory=BudgetSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    monitoring: MonitoringSettings = Field(default_factory=MonitoringSettings)

    class Config:
        env_prefix = "WILDCOLOR_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Global settings instance
settings = get_settings()
