#!/usr/bin/env python3
"""
Runtime settings for affweyl.
Values come from the environment, optionally loaded from a .env file.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .errors import UsageError


@dataclass(frozen=True)
class Settings:
    max_box: int = 4                  # largest verification box accepted
    parabolic_cap: int = 1_000_000    # enumeration cap for finite parabolic subgroups
    bruhat_cache: int = 65536         # lru_cache size for Bruhat comparisons
    jobs: int = 1                     # worker processes for verification sweeps
    default_datum: str = "GL2"
    output_dir: str = "output"


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(
            f"{name} must be an integer, got '{raw}'.\n"
            f"Example: export {name}={default}"
        )
    if value < 1:
        raise UsageError(f"{name} must be positive, got {value}")
    return value


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Read settings from the environment after loading an optional .env file"""
    load_dotenv(env_file, override=False)
    return Settings(
        max_box=_int_env("AFFWEYL_MAX_BOX", Settings.max_box),
        parabolic_cap=_int_env("AFFWEYL_PARABOLIC_CAP", Settings.parabolic_cap),
        bruhat_cache=_int_env("AFFWEYL_BRUHAT_CACHE", Settings.bruhat_cache),
        jobs=_int_env("AFFWEYL_JOBS", Settings.jobs),
        default_datum=os.getenv("AFFWEYL_DEFAULT_DATUM", Settings.default_datum),
        output_dir=os.getenv("AFFWEYL_OUTPUT_DIR", Settings.output_dir),
    )
