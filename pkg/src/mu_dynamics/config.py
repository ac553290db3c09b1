from src.utils.file_utils import load_section

_section = load_section("mu_dynamics")

class MuDynamicsConfig:
    """Configuration for the doubling-map dynamics package"""

    def __init__(self):
        # enumerate_mu_orbits scans all residues mod 2^k - 1
        self.max_enumeration_k = int(_section.get("max_enumeration_k", 24))
        # in_chain_Vp evaluates at 2^p points in Q(zeta_(2^p))
        self.max_chain_p = int(_section.get("max_chain_p", 12))

# Singleton config instance
config = MuDynamicsConfig()
