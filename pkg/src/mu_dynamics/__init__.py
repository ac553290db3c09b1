from .orbits import (
    FiniteSet,
    MuOrbit,
    SquareClosedSet,
    doubling_orbit,
    enumerate_mu_orbits,
    is_minimal,
    is_square_closed,
    max_circular_gap,
    square_closed_set,
    sub_orbits,
)
from .chain import chain_generator, chain_values, fold, in_chain_Vp
from .witness import cyclic_witness, is_certified_positive
