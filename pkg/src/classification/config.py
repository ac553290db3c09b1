from src.utils.file_utils import load_section

_section = load_section("classification")

class ClassificationConfig:
    """Configuration for the prime selection and G_1 checks"""

    def __init__(self):
        # Roots of unity of order up to this are scanned for zeros of phi
        self.max_root_order = int(_section.get("max_root_order", 64))
        # Shortest truncation accepted by verify_g1_invariance
        self.g1_min_length = int(_section.get("g1_min_length", 6))
        # Primes tried by prime_for_polynomial before giving up
        self.max_prime_steps = int(_section.get("max_prime_steps", 1000))

# Singleton config instance
config = ClassificationConfig()
