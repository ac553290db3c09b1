import time
from fractions import Fraction
from typing import Dict, Tuple

from src.exact_arith import Cyclotomic
from src.utils.errors import ConstraintError
from src.utils.logging_utils import setup_logging, log_operation
from src.wiener_fourier import CoeffSeq
from .orbits import FiniteSet, MuOrbit, sub_orbits

logger = setup_logging("mu_dynamics")


def _cycles(K: FiniteSet):
    if isinstance(K, MuOrbit):
        return [K.cycle]
    return [orbit.cycle for orbit in sub_orbits(K)]


def cyclic_witness(f: CoeffSeq, K: FiniteSet) -> Tuple[Cyclotomic, ...]:
    """
    Values of h = sum_n 2^-n g(zeta^(2^n)), g = f * conj(f), at the points of K.

    Along a doubling cycle of length k the series is k-periodic and sums to
    h(zeta_j) = (1 / (1 - 2^-k)) * sum_(i<k) 2^-i g(zeta_(j+i)), so every value
    is exact. On a minimal K the values are all positive as soon as f is not
    identically zero there; on a reducible K they vanish on every cycle
    where f does.

    Args:
        f: Trigonometric polynomial
        K: MuOrbit or SquareClosedSet

    Returns:
        tuple: h at each point of K, in K.points order

    Raises:
        ConstraintError: f vanishes on all of K
    """
    start_time = time.time()
    g: Dict[int, Cyclotomic] = {}
    for e in K.points:
        value = f.evaluate(K.N, e)
        g[e] = value * value.conjugate()
    if all(v.is_zero() for v in g.values()):
        raise ConstraintError(f"f vanishes identically on K ({K})")

    h: Dict[int, Cyclotomic] = {}
    for cycle in _cycles(K):
        k = len(cycle)
        scale = Fraction(1 << k, (1 << k) - 1)
        for j, e in enumerate(cycle):
            total = Cyclotomic.zero()
            for i in range(k):
                total = total + g[cycle[(j + i) % k]] * Fraction(1, 1 << i)
            h[e] = total * scale

    log_operation(logger, "cyclic_witness", "completed", {
        "N": K.N,
        "points": len(K.points),
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return tuple(h[e] for e in K.points)


def is_certified_positive(value: Cyclotomic) -> bool:
    """Exactly real and nonzero, with a positive embedding."""
    if value.is_zero() or not value.is_real():
        return False
    if value.is_rational():
        return value.as_rational() > 0
    return value.complex_embedding().real > 0
