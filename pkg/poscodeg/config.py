"""
Runtime configuration from environment / .env
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError

DEFAULT_NODE_BUDGET = 10**9

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class Settings:
    """Settings resolved from POSCODEG_* environment variables"""
    jobs: int = 1
    node_budget: int = DEFAULT_NODE_BUDGET
    results_dir: str = "results"
    suites_dir: str = "acceptance"


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def get_settings() -> Settings:
    """Read settings from the environment (after .env has been loaded)"""
    return Settings(
        jobs=_int_env("POSCODEG_JOBS", 1),
        node_budget=_int_env("POSCODEG_BUDGET", DEFAULT_NODE_BUDGET),
        results_dir=os.getenv("POSCODEG_RESULTS_DIR", "results"),
        suites_dir=os.getenv("POSCODEG_SUITES_DIR", "acceptance"),
    )


def resolve_jobs(jobs: Optional[int]) -> int:
    """Explicit --jobs wins; otherwise POSCODEG_JOBS; otherwise 1"""
    if jobs is not None:
        if jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {jobs}")
        return jobs
    return get_settings().jobs
