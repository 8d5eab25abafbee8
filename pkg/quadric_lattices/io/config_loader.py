"""
JSON configuration file loader.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict

from quadric_lattices.core.constants import Command, DEFAULT_SAMPLES, DEFAULT_SEED, OutputFormat, Suite, X_STANDARD_BASIS
from quadric_lattices.core.parameters import RunParameters
from quadric_lattices.io.cli_parser import apply_cli_overrides
from quadric_lattices.utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)


class ConfigLoader:
    """
    Load run parameters from a JSON configuration file.
    """

    @staticmethod
    def load(filepath: str) -> RunParameters:
        """
        Load and parse JSON configuration file.

        Args:
            filepath: Path to JSON configuration file

        Returns:
            RunParameters object

        Raises:
            ConfigurationError: If file cannot be loaded or is invalid
        """
        path = Path(filepath)
        if not path.exists():
            raise ConfigurationError(f"Configuration file not found: {filepath}")

        try:
            with open(path, 'r') as f:
                config = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in configuration file: {e}") from e
        except OSError as e:
            raise ConfigurationError(f"Error reading configuration file: {e}") from e

        try:
            params = ConfigLoader._extract_parameters(config)
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"Error parsing configuration: {e}") from e
        logger.info("Loaded %r from %s", params, filepath)
        return params

    @staticmethod
    def _extract_parameters(config: Dict[str, Any]) -> RunParameters:
        """
        Extract run parameters from a configuration dictionary.

        Keys may be nested under "run_parameters" or sit at top level; only
        "n" is required.

        Raises:
            KeyError: If n is missing
            ValueError: If an enum value is unknown
        """
        if not isinstance(config, dict):
            raise TypeError(f"configuration must be a JSON object, got {type(config).__name__}")
        params = config.get('run_parameters', config)

        return RunParameters(
            n=params['n'],
            command=Command.from_string(params.get('command', Command.VERIFY.value)),
            suite=Suite.from_string(params.get('suite', Suite.ALL.value)),
            output_format=OutputFormat.from_string(params.get('format', OutputFormat.TEXT.value)),
            out=params.get('out'),
            unsafe_cap=bool(params.get('unsafe_cap', False)),
            samples=params.get('samples', DEFAULT_SAMPLES),
            seed=params.get('seed', DEFAULT_SEED),
            workers=params.get('workers'),
            export_object=params.get('object'),
            class_coords=params.get('class'),
            basis=params.get('basis', X_STANDARD_BASIS),
        )

    @staticmethod
    def merge_with_cli(parameters: RunParameters, args) -> RunParameters:
        """
        Merge CLI arguments with config-loaded parameters (CLI overrides).

        Args:
            parameters: Parameters loaded from config
            args: Parsed CLI arguments

        Returns:
            Updated RunParameters object
        """
        return apply_cli_overrides(parameters, args)
