"""Configuration management for gfgmin."""
import os
import json5
from pathlib import Path
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field


class OracleConfig(BaseModel):
    """Lasso sampling used as a secondary differential check."""
    model_config = ConfigDict(populate_by_name=True)

    lassos: int = Field(1000, ge=1)
    max_lasso_length: int = Field(6, ge=1, alias="maxLassoLength")
    seed: int = 42


class PipelineConfig(BaseModel):
    """Defaults for the minimization pipeline flags."""
    model_config = ConfigDict(populate_by_name=True)

    add_sink: bool = Field(False, alias="addSink")
    determinize: bool = False


class GeneratorConfig(BaseModel):
    """Defaults for random automaton generation."""
    model_config = ConfigDict(populate_by_name=True)

    states: int = Field(4, ge=1)
    symbols: int = Field(2, ge=1, le=26)
    alpha_probability: float = Field(0.3, ge=0.0, le=1.0, alias="alphaProbability")
    nondeterminism_probability: float = Field(0.2, ge=0.0, le=1.0, alias="nondeterminismProbability")


class Config(BaseModel):
    """Main configuration container."""
    model_config = ConfigDict(populate_by_name=True)

    oracle_config: OracleConfig = Field(default_factory=OracleConfig, alias="oracleConfig")
    pipeline_config: PipelineConfig = Field(default_factory=PipelineConfig, alias="pipelineConfig")
    generator_config: GeneratorConfig = Field(default_factory=GeneratorConfig, alias="generatorConfig")
    log_level: str = Field("WARNING", alias="logLevel")


def load_config(config_path: Optional[str] = None) -> Config:
    """Load configuration from a JSON5 file.

    Args:
        config_path: Optional path to config file. If not provided,
            looks for ./gfgmin.json5 or ~/gfgmin.json5 and falls back
            to defaults when neither exists

    Returns:
        Config object, with the seed overridden by GFGMIN_SEED when set

    Raises:
        FileNotFoundError: If an explicit config file does not exist
        ValueError: If the config file or GFGMIN_SEED is invalid
    """
    if config_path and not Path(config_path).exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")
    if not config_path:
        local_config = Path("./gfgmin.json5")
        home_config = Path.home() / "gfgmin.json5"

        if local_config.exists():
            config_path = str(local_config)
        elif home_config.exists():
            config_path = str(home_config)

    config_data = {}
    if config_path:
        with open(config_path) as f:
            config_data = json5.load(f) or {}

    config = Config(**config_data)

    seed = os.environ.get("GFGMIN_SEED")
    if seed is not None:
        try:
            config.oracle_config.seed = int(seed)
        except ValueError:
            raise ValueError(f"GFGMIN_SEED must be an integer, got {seed!r}") from None
    return config
