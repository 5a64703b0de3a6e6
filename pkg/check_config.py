#!/usr/bin/env python3
"""
Check Configuration Management
Handles loading, saving, and validation of fuzzing profiles.
"""

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List

import yaml

from logic.errors import ConfigError
from logic.semantics import DEFAULT_BRUTE_FORCE_CAP
from utils.logging_helper import get_backend_logger

GENERATOR_MODES = ("any", "positive", "signed", "call_consistent", "stratified")
MAX_SEED = 2 ** 64


@dataclass
class GeneratorConfig:
    """Shape of randomly generated programs."""
    atom_count: int = 8
    rule_count: int = 14
    max_pos: int = 2
    max_neg: int = 2
    mode: str = "any"
    seed: int = 0
    max_rejections: int = 1000


@dataclass
class EngineSettings:
    """Resource limits shared by every command."""
    cap: int = DEFAULT_BRUTE_FORCE_CAP
    workers: int = 1  # 0 = one per physical core


@dataclass
class FuzzProfile:
    """A stored fuzzing run: which property, how many trials, what programs."""
    property: str
    trials: int = 1000
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    settings: EngineSettings = field(default_factory=EngineSettings)
    name: str = ""


class CheckConfigManager:
    """Manages fuzzing profiles on disk."""

    def __init__(self):
        """Initialize the config manager."""
        self.logger = get_backend_logger(__name__)

    def create_profile(self, property_name: str, name: str = "") -> FuzzProfile:
        """Create a profile with default generator settings."""
        return FuzzProfile(property=property_name, name=name or property_name)

    def save_profile(self, profile: FuzzProfile, filepath: str) -> bool:
        """Save a profile to a YAML file."""
        self.logger.info(f"Saving profile '{profile.name}' to file: {filepath}")

        try:
            filepath_obj = Path(filepath)
            filepath_obj.parent.mkdir(parents=True, exist_ok=True)

            with open(filepath_obj, 'w') as f:
                yaml.dump(self._profile_to_dict(profile), f, default_flow_style=False, indent=2, sort_keys=True)

            self.logger.info(f"Successfully saved profile to: {filepath}")
            return True

        except (OSError, PermissionError) as e:
            self.logger.error(f"File system error saving profile: {e}")
            return False
        except yaml.YAMLError as e:
            self.logger.error(f"YAML serialization error: {e}")
            return False

    def load_profile_from_file(self, filepath: str) -> FuzzProfile:
        """Load and validate a profile from a YAML file."""
        self.logger.info(f"Loading profile from file: {filepath}")

        try:
            with open(filepath, 'r') as f:
                profile_dict = yaml.safe_load(f)
        except (OSError, PermissionError) as e:
            raise ConfigError(f"Cannot read profile file '{filepath}': {e}")
        except yaml.YAMLError as e:
            raise ConfigError(f"YAML parsing error in profile file '{filepath}': {e}")

        if not isinstance(profile_dict, dict):
            raise ConfigError(f"Profile file '{filepath}' does not contain a mapping")

        try:
            profile = self._dict_to_profile(profile_dict)
        except TypeError as e:
            raise ConfigError(f"Unknown or missing profile fields in '{filepath}': {e}")

        errors = self.validate_profile(profile)
        if errors:
            raise ConfigError(f"Invalid profile '{filepath}'", errors)

        self.logger.info(f"Successfully loaded profile: {profile.name}")
        return profile

    def validate_profile(self, profile: FuzzProfile) -> List[str]:
        """Validate a profile and return a list of errors."""
        from metatheory.checkers import PROPERTIES

        errors = []
        if profile.property not in PROPERTIES:
            errors.append(f"Unknown property '{profile.property}'")
        if not isinstance(profile.trials, int) or profile.trials < 1:
            errors.append("Trials must be a positive integer")

        errors.extend(self.validate_generator(profile.generator))
        errors.extend(self.validate_settings(profile.settings))

        if errors:
            self.logger.warning(f"Profile validation found {len(errors)} errors")
            for error in errors:
                self.logger.warning(f"  - {error}")
        return errors

    def validate_generator(self, config: GeneratorConfig) -> List[str]:
        """Validate generator settings."""
        errors = []

        for name in ("atom_count", "rule_count", "max_rejections"):
            value = getattr(config, name)
            if not isinstance(value, int) or value < 1:
                errors.append(f"{name} must be a positive integer")
        for name in ("max_pos", "max_neg"):
            value = getattr(config, name)
            if not isinstance(value, int) or value < 0:
                errors.append(f"{name} must be a non-negative integer")
        if config.mode not in GENERATOR_MODES:
            errors.append(f"Mode must be one of: {', '.join(GENERATOR_MODES)}")
        if not isinstance(config.seed, int) or not (0 <= config.seed < MAX_SEED):
            errors.append("Seed must be an unsigned 64-bit integer")

        return errors

    def validate_settings(self, settings: EngineSettings) -> List[str]:
        """Validate engine limits."""
        errors = []

        if not isinstance(settings.cap, int) or settings.cap < 0:
            errors.append("Brute-force cap must be a non-negative integer")
        if not isinstance(settings.workers, int) or settings.workers < 0:
            errors.append("Workers must be a non-negative integer")

        return errors

    def _profile_to_dict(self, profile: FuzzProfile) -> Dict[str, Any]:
        """Convert profile dataclass to dictionary."""
        return {
            "name": profile.name,
            "property": profile.property,
            "trials": profile.trials,
            "generator": asdict(profile.generator),
            "settings": asdict(profile.settings),
        }

    def _dict_to_profile(self, data: Dict[str, Any]) -> FuzzProfile:
        """Convert dictionary to profile dataclass."""
        return FuzzProfile(
            name=data.get("name", ""),
            property=data.get("property", ""),
            trials=data.get("trials", 1000),
            generator=GeneratorConfig(**(data.get("generator") or {})),
            settings=EngineSettings(**(data.get("settings") or {})),
        )
