from src.utils.file_utils import load_section

_section = load_section("cli")

class CLIConfig:
    """Configuration for the command-line front end"""

    def __init__(self):
        self.default_mode = _section.get("default_mode", "text")
        # Significant digits for the floating-point norms
        self.float_digits = int(_section.get("float_digits", 12))

# Singleton config instance
config = CLIConfig()
