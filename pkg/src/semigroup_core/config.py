from src.utils.file_utils import load_section

_section = load_section("semigroup_core")

class SemigroupConfig:
    """Configuration for the semigroup normal-form package"""

    def __init__(self):
        # x-degrees add under multiplication; y-exponents are unbounded
        self.max_x_degree = int(_section.get("max_x_degree", 2**31))

# Singleton config instance
config = SemigroupConfig()
