import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Dict

CONFIG_PATH = Path(__file__).parent.parent.parent / "config" / "main_config.json"

def create_directory_if_not_exists(path: str) -> bool:
    """
    Create a directory if it doesn't exist.

    Args:
        path: Directory path to create

    Returns:
        bool: True if directory exists or was created, False if failed
    """
    try:
        Path(path).mkdir(parents=True, exist_ok=True)
        return True
    except OSError:
        return False

def load_json_file(filepath: Path) -> Optional[Dict[str, Any]]:
    """
    Load data from a JSON file.

    Args:
        filepath: Path to JSON file

    Returns:
        dict: Parsed JSON data or None if the file is missing or malformed
    """
    try:
        with open(filepath, 'r', encoding='utf-8') as f:
            return json.load(f)
    except (FileNotFoundError, json.JSONDecodeError):
        return None

@lru_cache(maxsize=1)
def load_main_config() -> Dict[str, Any]:
    """Load config/main_config.json once; an absent file yields built-in defaults."""
    return load_json_file(CONFIG_PATH) or {}

def load_section(name: str) -> Dict[str, Any]:
    """Return one top-level section of the main configuration (empty if absent)."""
    return dict(load_main_config().get(name, {}))

def load_base_settings() -> Dict[str, Any]:
    return load_section("base_settings")
