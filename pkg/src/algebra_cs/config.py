from src.utils.file_utils import load_section

_section = load_section("algebra_cs")

class AlgebraConfig:
    """Configuration for the semigroup algebra package"""

    def __init__(self):
        # Equispaced points on the circle used for the B-norm sup
        self.default_grid = int(_section.get("default_grid", 256))

# Singleton config instance
config = AlgebraConfig()
