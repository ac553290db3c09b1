#!/usr/bin/env python3
import sys

# Optional .env overrides (logging only) are loaded before anything logs
from src.utils.env_initializer import initialize_env
initialize_env()

from src.cli import run
from src.utils.logging_utils import setup_logging

logger = setup_logging("main")

def main():
    """Command-line entry point; see `python main.py --help` for the verbs."""
    try:
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        sys.exit(130)
    except Exception as e:
        logger.critical(f"Fatal error in main execution: {str(e)}")
        print(f"CRITICAL ERROR: {str(e)}", file=sys.stderr)
        sys.exit(1)

if __name__ == "__main__":
    main()
