# -*- coding: utf-8 -*-
#
# This file is part of the Dhvani project.
# Copyright (C) 2025  Dhvani developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA
"""This module is responsible for loading the pipeline configuration."""

import dataclasses
import logging
import logging.config
import os
from typing import Any, Dict, Mapping, Optional

import toml

from dhvani.lib.alignment import AlignConfig
from dhvani.lib.augment import AugmentConfig
from dhvani.lib.chunking import ChunkConfig
from dhvani.lib.exceptions import ConfigurationError
from dhvani.lib.postproc import DedupConfig
from dhvani.lib.textnorm import NormConfig

_log = logging.getLogger(__name__)

#: Environment variable overriding the level of the ``dhvani`` logger.
LOG_LEVEL_ENV = "DHVANI_LOG_LEVEL"

#: Typed sections of the pipeline configuration; their field names are valid
#: (lower-case) keys in a configuration file.
SECTIONS = dict(
    chunk=ChunkConfig,
    align=AlignConfig,
    norm=NormConfig,
    augment=AugmentConfig,
    dedup=DedupConfig,
)

#: A dictionary of pipeline-level configuration defaults.
DEFAULTS = dict(
    # Seed mixed with every file URI to derive per-file random streams
    GLOBAL_SEED=0,
    # Number of parallel workers used by the runner
    WORKERS=1,
    # Number of trailing files reserved for development in prepare-diar
    DEV_FILES=2,
    # Fraction of aligned chunks held out for validation in prepare-asr
    VAL_FRACTION=0.10,
    # Minimum diarization segment duration kept by filter-diar
    MIN_SEGMENT_S=0.3,
    # DER collar around reference boundaries, in seconds
    COLLAR_S=0.0,
    DHVANI_LOG_CONFIG={
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"simple": {"format": "[%(name)s %(levelname)s] %(message)s"}},
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "formatter": "simple",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "dhvani": {"level": "INFO", "propagate": False, "handlers": ["console"]}
        },
        # The root logger configuration; this is a catch-all configuration
        # that applies to all log messages not handled by a different logger
        "root": {"level": "WARNING", "handlers": ["console"]},
    },
)

# Start with a basic logging configuration, which will be replaced by any user-
# specified logging configuration when the configuration is loaded.
logging.config.dictConfig(DEFAULTS["DHVANI_LOG_CONFIG"])  # type: ignore


def _known_keys():
    keys = set(DEFAULTS)
    for section in SECTIONS.values():
        keys.update(field.name.upper() for field in dataclasses.fields(section))
    return keys


def load(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from a file and merge it with the default configuration.

    The file is flat TOML: every key mirrors a field of one of the typed
    configuration sections (for example ``chunk_seconds = 25.0`` or
    ``snr_db = [5, 20]``) or a pipeline-level default. Keys are case-insensitive
    and stored upper-cased.

    Args:
        config_path: Path to the configuration file. When ``None`` only the
            defaults are returned.

    Returns:
        The merged configuration dictionary.

    Raises:
        ConfigurationError: If the file does not exist or is not valid TOML.
    """
    config = DEFAULTS.copy()
    if config_path is None:
        return config

    if not os.path.exists(config_path):
        raise ConfigurationError(config_path, "configuration file does not exist")

    _log.info("Loading Dhvani configuration from %s", config_path)
    with open(config_path, encoding="utf-8") as fd:
        try:
            file_config = toml.loads(fd.read())
        except toml.TomlDecodeError as e:
            _log.error("Failed to parse %s: %s", config_path, str(e))
            raise ConfigurationError(config_path, str(e)) from e

    known = _known_keys()
    for key in file_config:
        if key.upper() not in known:
            _log.warning("Ignoring unknown configuration key %s", key)
            continue
        config[key.upper()] = file_config[key]
    return config


def configure_logging(config: Mapping[str, Any]) -> None:
    """
    Apply the logging configuration and the ``DHVANI_LOG_LEVEL`` override.

    Args:
        config: A configuration dictionary as returned by :func:`load`.
    """
    logging.config.dictConfig(config["DHVANI_LOG_CONFIG"])
    level = os.environ.get(LOG_LEVEL_ENV)
    if level:
        logging.getLogger("dhvani").setLevel(level.upper())


@dataclasses.dataclass(frozen=True)
class PipelineConfig:
    """
    Every setting of a pipeline run, grouped in typed sections.

    Attributes:
        global_seed: Seed mixed with file URIs to derive per-file seeds.
        chunk: Chunking settings.
        align: Alignment settings.
        norm: Text normalization settings.
        augment: Augmentation settings.
        dedup: Hallucination removal settings.
        workers: Number of parallel workers, at least one.
    """

    global_seed: int = 0
    chunk: ChunkConfig = dataclasses.field(default_factory=ChunkConfig)
    align: AlignConfig = dataclasses.field(default_factory=AlignConfig)
    norm: NormConfig = dataclasses.field(default_factory=NormConfig)
    augment: AugmentConfig = dataclasses.field(default_factory=AugmentConfig)
    dedup: DedupConfig = dataclasses.field(default_factory=DedupConfig)
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigurationError("workers", "must be at least 1")
        if not 0 <= self.global_seed < 2**64:
            raise ConfigurationError("global_seed", "must fit in 64 bits")

    @classmethod
    def from_config(
        cls, config: Mapping[str, Any], overrides: Optional[Mapping[str, Any]] = None
    ) -> "PipelineConfig":
        """
        Build a typed configuration from a configuration dictionary.

        Args:
            config: Dictionary as returned by :func:`load`.
            overrides: Lower-case keys (typically from command-line flags) that
                take precedence over the dictionary. ``None`` values are ignored.

        Returns:
            The validated pipeline configuration.
        """
        merged = dict(config)
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key.upper()] = value

        sections = {}
        for name, section in SECTIONS.items():
            kwargs = {
                field.name: merged[field.name.upper()]
                for field in dataclasses.fields(section)
                if field.name.upper() in merged
            }
            try:
                sections[name] = section(**kwargs)
            except (TypeError, ValueError) as err:
                raise ConfigurationError(name, str(err)) from err

        return cls(
            global_seed=int(merged.get("GLOBAL_SEED", 0)),
            workers=int(merged.get("WORKERS", 1)),
            **sections,
        )
