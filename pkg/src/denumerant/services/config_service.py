"""Configuration service for loading and saving denumerant settings."""
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import dotenv_values
from pydantic import ValidationError

from ..models.config import DenumerantConfig

logger = logging.getLogger(__name__)

DIR_DENUMERANT = ".denumerant"


class ConfigurationError(Exception):
    """Custom exception for configuration-related errors."""
    pass


class ConfigurationService:
    """Loads settings from .denumerant/config.json, a project .env and the process env."""

    def __init__(self, project_root: Optional[Path] = None):
        self.project_root = project_root or Path.cwd()
        self.config_dir = self.project_root / DIR_DENUMERANT
        self.config_file = self.config_dir / "config.json"
        self.env_file = self.project_root / ".env"

        self._config: Optional[DenumerantConfig] = None

    @property
    def config(self) -> DenumerantConfig:
        if self._config is None:
            return self.load_configuration()
        return self._config

    def load_configuration(self, overrides: Optional[Dict[str, Any]] = None) -> DenumerantConfig:
        """Load configuration.

        Precedence, highest first:
        1. explicit overrides (command-line flags)
        2. process environment (DENUMERANT_ prefix)
        3. .env file in the project root
        4. .denumerant/config.json
        5. model defaults

        Raises:
            ConfigurationError: If configuration cannot be loaded or is invalid
        """
        try:
            config_data: Dict[str, Any] = {}
            if self.config_file.exists():
                try:
                    with open(self.config_file, "r", encoding="utf-8") as f:
                        config_data = json.load(f)
                except json.JSONDecodeError as e:
                    raise ConfigurationError(f"Invalid JSON in config file: {e}")
                except IOError as e:
                    raise ConfigurationError(f"Cannot read config file: {e}")
                if not isinstance(config_data, dict):
                    raise ConfigurationError("Config file must hold a JSON object")

            merged = {
                **config_data,
                **self._load_env_file(),
                **self._load_environment_variables(),
                **{k: v for k, v in (overrides or {}).items() if v is not None},
            }
            try:
                config = DenumerantConfig.model_validate(merged)
            except ValidationError as e:
                raise ConfigurationError(f"Invalid configuration data: {e}")

            self._config = config
            logger.debug("Loaded configuration: %s", config.to_config_dict())
            return config

        except Exception as e:
            if isinstance(e, ConfigurationError):
                raise
            raise ConfigurationError(f"Unexpected error loading configuration: {e}")

    def _strip_prefix(self, items: Dict[str, Optional[str]]) -> Dict[str, Any]:
        prefix = DenumerantConfig.Config.env_prefix
        result: Dict[str, Any] = {}
        for key, value in items.items():
            if value is not None and key.upper().startswith(prefix):
                result[key[len(prefix):].lower()] = value
        return result

    def _load_env_file(self) -> Dict[str, Any]:
        if not self.env_file.exists():
            return {}
        return self._strip_prefix(dict(dotenv_values(self.env_file)))

    def _load_environment_variables(self) -> Dict[str, Any]:
        """Environment variables with the DENUMERANT_ prefix, prefix removed."""
        return self._strip_prefix(dict(os.environ))

    def save_configuration(self, config: Optional[DenumerantConfig] = None) -> None:
        """Write non-default fields to .denumerant/config.json."""
        config = config or self.config
        try:
            self.config_dir.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(config.to_config_dict(), f, indent=2)
        except IOError as e:
            raise ConfigurationError(f"Cannot write config file: {e}")
        self._config = config
