#!/usr/bin/env python3
"""
Version utilities for stablecheck.
"""

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from functools import lru_cache
from pathlib import Path

PYPROJECT = Path(__file__).parent / "pyproject.toml"


@lru_cache(maxsize=1)
def get_version() -> str:
    """Version declared in pyproject.toml, or "unknown" outside a checkout."""
    try:
        with open(PYPROJECT, "rb") as f:
            data = tomllib.load(f)
        return data["tool"]["poetry"]["version"]
    except (FileNotFoundError, KeyError, tomllib.TOMLDecodeError):
        return "unknown"


def version_banner() -> str:
    """One-line banner printed by `stablecheck --version`."""
    return f"stablecheck {get_version()} (brute-force answer sets, splitting sequences, metatheory fuzzing)"


if __name__ == "__main__":
    print(get_version())
