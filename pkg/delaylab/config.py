import os
import pathlib

import yaml
from dotenv import load_dotenv

load_dotenv()


class Config:
    # Runtime environment: development, test or production
    APP_ENV = os.environ.get("APP_ENV", "development")
    LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")

    # Property-lab defaults
    DEFAULT_SEED = int(os.environ.get("DELAYLAB_SEED", 42))
    DEFAULT_BUDGET = int(os.environ.get("DELAYLAB_BUDGET", 12))

    # Gate truth tables stay explicit up to this fan-in
    MAX_GATE_FAN_IN = 8

    base_dir = pathlib.Path(__file__).resolve().parent.parent
    CONFIG_DIR = pathlib.Path(os.environ.get("DELAYLAB_CONFIG_DIR", base_dir / "configs"))

    @staticmethod
    def load_yaml(name, environment=None):
        """Load a YAML config by name, merging the environment-specific block."""
        if environment is None:
            environment = os.environ.get("APP_ENV", Config.APP_ENV)

        config_path = Config.CONFIG_DIR / f"{name}.yml"
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_path, "r") as file:
            config_data = yaml.safe_load(file) or {}

        # Start with default configuration
        result = {}
        if "default" in config_data:
            result.update(config_data["default"])

        # Override with environment-specific configuration
        if "environments" in config_data and environment in config_data["environments"]:
            result.update(config_data["environments"][environment])

        # Add other sections if they exist (e.g., 'loggers', 'suite')
        for section in config_data:
            if section not in ("default", "environments", "version"):
                result[section] = config_data[section]

        return result
