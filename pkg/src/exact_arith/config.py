from src.utils.file_utils import load_section

_section = load_section("exact_arith")

class ExactArithConfig:
    """Configuration for the exact arithmetic package"""

    def __init__(self):
        # Mixed-conductor arithmetic promotes to the lcm; beyond this it fails
        self.max_conductor = int(_section.get("max_conductor", 2**32 - 1))

# Singleton config instance
config = ExactArithConfig()
