from src.utils.file_utils import load_section

_section = load_section("representations")

class RepresentationsConfig:
    """Configuration for representations and the separation search"""

    def __init__(self):
        # Largest orbit length tried by separate()
        self.max_k = int(_section.get("max_k", 12))
        # Representations are built for k <= this (Y lives in Q(zeta_(2^k - 1)))
        self.max_rep_k = int(_section.get("max_rep_k", 16))

# Singleton config instance
config = RepresentationsConfig()
