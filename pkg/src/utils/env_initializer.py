import os
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Environment variables only tune logging; results never depend on them
OPTIONAL_ENV_VARS = {
    "LOG_LEVEL": "Logging level (default from config/main_config.json)",
    "ALGEBRA_LOG_DIR": "Directory for rotating log files when file logging is enabled",
}

def initialize_env(env_path: Optional[Path] = None) -> bool:
    """
    Load optional environment overrides from a .env file.

    Args:
        env_path: Optional custom path to .env file. If None, looks in project root.

    Returns:
        bool: True if a .env file was found and loaded.
    """
    if env_path is None:
        env_path = Path(__file__).parent.parent.parent / ".env"

    if not env_path.exists():
        return False
    load_dotenv(dotenv_path=env_path, override=False)
    return True

def get_env_variable(name: str, default: Optional[str] = None) -> Optional[str]:
    """
    Get one of the known optional environment variables.

    Raises:
        KeyError: If the variable is not one this project reads
    """
    if name not in OPTIONAL_ENV_VARS:
        raise KeyError(f"Unknown environment variable: {name}")
    return os.getenv(name, default)
