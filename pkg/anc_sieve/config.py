"""Run configuration for anc_sieve.

Configuration is a tree of pydantic models. Files are merged in order, later
files overriding earlier ones key by key, so a shared base file can be combined
with a per-run file:

    ```python
    from anc_sieve.config import AncConfig, set_config

    config = AncConfig.load(["base.toml", "overnight.yml"])
    set_config(config)
    ```

The environment variable ``ANC_SIEVE_WORKERS`` overrides
``enumeration.workers``. Worker count never changes output order.
"""
import os
import pathlib
from enum import Enum
from typing import Any, Iterable, Optional, Union

import toml
import yaml
from pydantic import BaseModel, ConfigDict, Field

from .logger import AncLogger

WORKERS_ENV_VAR = "ANC_SIEVE_WORKERS"
"""Environment variable overriding the number of parallel workers."""


def default_workers() -> int:
    """Number of workers when nothing is configured: the CPU count."""
    return os.cpu_count() or 1


class EnumerationStrategy(str, Enum):
    """How connected annular noncrossing permutations are generated.

    | Strategy     | Candidates                                                        |
    |--------------|-------------------------------------------------------------------|
    | blocks       | set partitions of [n+m], each block completed to clockwise cycles |
    | exhaustive   | every permutation of [n+m], split by first image across workers   |

    Both keep exactly the candidates passing the noncrossing criterion, so they
    return the same catalog; ``exhaustive`` is the slow cross-check.
    """
    BLOCKS = "blocks"
    EXHAUSTIVE = "exhaustive"


class EnumerationConfig(BaseModel):
    """Enumeration bound, strategy and parallelism."""
    model_config = ConfigDict(extra="forbid", validate_assignment=True)

    max_total: int = Field(default=10, ge=1)
    """Largest n+m that may be enumerated."""
    strategy: EnumerationStrategy = EnumerationStrategy.BLOCKS
    workers: int = Field(default_factory=default_workers, ge=1)


class VerifyConfig(BaseModel):
    """Default sweep bounds for the verification suites."""
    model_config = ConfigDict(extra="forbid")

    csp_max_total: int = Field(default=8, ge=2)
    unequal_max_total: int = Field(default=8, ge=2)
    counts_max_total: int = Field(default=9, ge=2)
    type_b_max_half: int = Field(default=2, ge=1)
    """Type-B sweep covers anc_B(n, m) for n, m up to this value."""
    matchings_max_total: int = Field(default=10, ge=2)
    bijection_max_total: int = Field(default=6, ge=2)
    sum_chain_max: int = Field(default=6, ge=1)
    sum2_max_n: int = Field(default=10, ge=1)
    sum3_max_n: int = Field(default=10, ge=0)
    sum1_max: int = Field(default=6, ge=0)
    vandermonde_max: int = Field(default=8, ge=0)
    root_eval_max_n: int = Field(default=24, ge=1)
    power_max: int = Field(default=8, ge=1)
    polynomiality_max_N: int = Field(default=12, ge=1)
    disc_max_n: int = Field(default=7, ge=1)
    disc_q_max_n: int = Field(default=8, ge=1)
    disc_csp_max_n: int = Field(default=6, ge=1)
    progress: bool = False
    """Show tqdm progress bars (on stderr)."""


class RenderConfig(BaseModel):
    """Default drawing options for annulus diagrams."""
    model_config = ConfigDict(extra="forbid")

    canvas_px: int = Field(default=480, ge=64)
    stroke_width: float = Field(default=1.5, gt=0)
    font_size: float = Field(default=10.0, gt=0)


class AncConfig(BaseModel):
    """Complete anc_sieve configuration."""
    model_config = ConfigDict(extra="forbid")

    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    verify: VerifyConfig = Field(default_factory=VerifyConfig)
    render: RenderConfig = Field(default_factory=RenderConfig)

    @classmethod
    def load(cls, paths: Iterable[Union[str, pathlib.Path]] = ()) -> "AncConfig":
        """Reads and merges YAML/TOML files, then applies environment overrides.

        Args:
            paths: configuration files, ``.toml`` or ``.yml``/``.yaml``

        Returns:
            The validated configuration.
        """
        merged: dict[str, Any] = {}
        for path in paths:
            path = pathlib.Path(path)
            AncLogger.debug(f"Reading configuration {path}")
            _deep_update(merged, _read_config_file(path))

        workers = os.environ.get(WORKERS_ENV_VAR)
        if workers:
            try:
                merged.setdefault("enumeration", {})["workers"] = int(workers)
            except ValueError:
                raise ValueError(f"{WORKERS_ENV_VAR} must be a positive integer; got '{workers}'")
        config = cls.model_validate(merged)
        AncLogger.debug(f"{config=}")
        return config


def _read_config_file(path: pathlib.Path) -> dict[str, Any]:
    suffix = path.suffix.lower()
    if suffix == ".toml":
        return toml.load(path)
    if suffix in (".yml", ".yaml"):
        with open(path, encoding="utf-8") as f:
            return yaml.safe_load(f) or {}
    raise ValueError(f"Unsupported configuration file type: '{path}'")


def _deep_update(target: dict[str, Any], update: dict[str, Any]) -> None:
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(target.get(key), dict):
            _deep_update(target[key], value)
        else:
            target[key] = value


def load_anc_config(*paths: Union[str, pathlib.Path]) -> AncConfig:
    """Shorthand for `AncConfig.load`."""
    return AncConfig.load(paths)


_active_config: Optional[AncConfig] = None


def get_config() -> AncConfig:
    """Returns the process-wide configuration, loading defaults on first use."""
    global _active_config
    if _active_config is None:
        _active_config = AncConfig.load()
    return _active_config


def set_config(config: AncConfig) -> None:
    """Replaces the process-wide configuration."""
    global _active_config
    _active_config = config
