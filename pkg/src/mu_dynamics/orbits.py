"""
Finite square-closed sets of odd-order roots of unity.

A point zeta_N^e is stored as its residue e mod N. Squaring becomes
doubling, which permutes Z/N for odd N, so every finite square-closed set
is a disjoint union of doubling cycles, and the minimal ones (finite
mu-sets) are exactly the single cycles.
"""
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from sympy.ntheory import n_order

from src.utils.errors import CapacityError, ConstraintError
from src.utils.logging_utils import setup_logging, log_operation
from .config import config

logger = setup_logging("mu_dynamics")


def _check_modulus(N: int) -> None:
    if N < 1 or N % 2 == 0:
        raise ConstraintError(f"N must be odd and positive, got {N}")


def _cycle_from(N: int, e: int) -> Tuple[int, ...]:
    start = e % N
    cycle = [start]
    current = (2 * start) % N
    while current != start:
        cycle.append(current)
        current = (2 * current) % N
    return tuple(cycle)


@dataclass(frozen=True)
class MuOrbit:
    """A single doubling cycle {e, 2e, 4e, ...} mod N, points in cycle order."""

    N: int
    cycle: Tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.N)
        if not self.cycle:
            raise ConstraintError("an orbit has at least one point")
        if _cycle_from(self.N, self.cycle[0]) != self.cycle:
            raise ConstraintError(f"{list(self.cycle)} is not a doubling cycle mod {self.N}")
        # Cycle length is the order of 2 modulo the reduced denominator of e/N
        denominator = self.N // math.gcd(self.N, self.cycle[0])
        expected = 1 if denominator == 1 else int(n_order(2, denominator))
        if expected != len(self.cycle):
            raise ConstraintError(f"cycle length {len(self.cycle)} disagrees with multiplicative order {expected}")

    @property
    def k(self) -> int:
        return len(self.cycle)

    @property
    def points(self) -> Tuple[int, ...]:
        return self.cycle

    @property
    def exps(self) -> Tuple[int, ...]:
        return tuple(sorted(self.cycle))

    def angles(self) -> List[Fraction]:
        """Point angles in turns, e/N."""
        return [Fraction(e, self.N) for e in self.cycle]

    def __str__(self) -> str:
        return f"N={self.N} k={self.k} exps=[{','.join(str(e) for e in self.exps)}]"


@dataclass(frozen=True)
class SquareClosedSet:
    """A finite set of residues mod N closed under doubling, points sorted."""

    N: int
    exps: Tuple[int, ...]

    def __post_init__(self):
        _check_modulus(self.N)
        object.__setattr__(self, "exps", tuple(sorted({e % self.N for e in self.exps})))
        if not is_square_closed(self.exps, self.N):
            raise ConstraintError(f"{list(self.exps)} is not square-closed mod {self.N}")

    @property
    def points(self) -> Tuple[int, ...]:
        return self.exps

    def angles(self) -> List[Fraction]:
        return [Fraction(e, self.N) for e in self.exps]

    def __str__(self) -> str:
        return f"N={self.N} exps=[{','.join(str(e) for e in self.exps)}]"


FiniteSet = Union[MuOrbit, SquareClosedSet]


def doubling_orbit(N: int, e: int) -> MuOrbit:
    """The orbit of zeta_N^e under squaring, starting at e mod N."""
    _check_modulus(N)
    return MuOrbit(N, _cycle_from(N, e))


def square_closed_set(N: int, exps: Iterable[int]) -> SquareClosedSet:
    return SquareClosedSet(N, tuple(exps))


def is_square_closed(exps: Iterable[int], N: int) -> bool:
    _check_modulus(N)
    members = {e % N for e in exps}
    return all((2 * e) % N in members for e in members)


def is_minimal(s: FiniteSet) -> bool:
    """Nonempty and a single doubling cycle."""
    if isinstance(s, MuOrbit):
        return True
    if not s.exps:
        return False
    return len(_cycle_from(s.N, s.exps[0])) == len(s.exps)


def sub_orbits(s: FiniteSet) -> List[MuOrbit]:
    """Cycle decomposition, ordered by smallest element; each cycle starts there."""
    if isinstance(s, MuOrbit):
        return [doubling_orbit(s.N, min(s.cycle))]
    seen = set()
    orbits = []
    for e in s.exps:
        if e not in seen:
            orbit = doubling_orbit(s.N, e)
            seen.update(orbit.cycle)
            orbits.append(orbit)
    return orbits


def enumerate_mu_orbits(k: int) -> List[MuOrbit]:
    """
    All doubling cycles of length exactly k on Z/(2^k - 1).

    Every zeta with zeta^(2^k) = zeta is a (2^k - 1)-th root of unity, so
    this lists each finite mu-set with minimal parameter k once. Orbits
    are ordered by, and start at, their smallest element.

    Raises:
        ConstraintError: k < 1
        CapacityError: k above the enumeration guard
    """
    if k < 1:
        raise ConstraintError(f"k must be positive, got {k}")
    if k > config.max_enumeration_k:
        raise CapacityError(f"k={k} exceeds enumeration guard {config.max_enumeration_k}")
    start_time = time.time()
    N = (1 << k) - 1
    seen = bytearray(N)
    orbits = []
    for e in range(N):
        if seen[e]:
            continue
        cycle = _cycle_from(N, e)
        for point in cycle:
            seen[point] = 1
        if len(cycle) == k:
            orbits.append(MuOrbit(N, cycle))
    log_operation(logger, "enumerate_mu_orbits", "completed", {
        "k": k,
        "orbits": len(orbits),
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return orbits


def max_circular_gap(orbits: Sequence[FiniteSet]) -> float:
    """Largest gap in radians between consecutive points of the union on the circle."""
    turns = sorted({Fraction(e, s.N) for s in orbits for e in s.points})
    if not turns:
        return 2 * math.pi
    angles = 2 * np.pi * np.array([float(t) for t in turns])
    gaps = np.diff(np.append(angles, angles[0] + 2 * np.pi))
    return float(np.max(gaps))
