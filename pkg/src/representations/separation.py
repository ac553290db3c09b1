import time
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from src.algebra_cs import AlgebraElement, extract_phi
from src.mu_dynamics import enumerate_mu_orbits
from src.utils.errors import CapacityError, ConstraintError, InternalError
from src.utils.logging_utils import setup_logging, log_operation
from .config import config
from .matrices import Matrix
from .reps import Character, MatrixRep, Mode, evaluate_character, evaluate_rep, make_character, make_rep

logger = setup_logging("representations")

Separator = Union[Character, MatrixRep]


def gamma_candidates(a: AlgebraElement) -> List[Fraction]:
    """1, 1/2, ..., 1/(D+1) with D the largest x-degree of a."""
    return [Fraction(1, j) for j in range(1, a.max_x_degree() + 2)]


def separate(a: AlgebraElement, max_k: Optional[int] = None) -> Tuple[Separator, Matrix]:
    """
    Find an irreducible representation that does not kill a.

    With m the smallest x-degree carrying a nonzero phi_m, the search runs
    over k = 1, 2, ... and the minimal orbits of length k (by smallest
    element e) until phi_m(zeta_(2^k-1)^e) != 0. For that alpha,
    pi(a) = sum_j gamma^j X^j phi_j(Y) is a nonzero polynomial in gamma of
    degree at most D, so one of D+1 distinct gammas works. The order is
    fixed, so the result is deterministic.

    Args:
        a: Nonzero element of CS
        max_k: Largest orbit length tried (default from config)

    Returns:
        (separator, witness): a Character (k = 1) with its 1x1 value, or a
        MatrixRep with pi(a)

    Raises:
        ConstraintError: a is zero
        CapacityError: no k <= max_k has a non-root of phi_m
    """
    if a.is_zero():
        raise ConstraintError("cannot separate the zero element")
    max_k = config.max_k if max_k is None else max_k
    start_time = time.time()
    log_operation(logger, "separate", "started", {"terms": len(a.terms), "max_k": max_k}, level="DEBUG")

    m = min(a.x_degrees())
    phi = extract_phi(a, m)
    for k in range(1, max_k + 1):
        N = (1 << k) - 1
        for orbit in enumerate_mu_orbits(k):
            e = orbit.cycle[0]
            if phi.evaluate_root(N, e).is_zero():
                continue
            for gamma in gamma_candidates(a):
                if k == 1:
                    chi = make_character(gamma, 1, Mode.BANACH)
                    witness = Matrix.from_rows([[evaluate_character(chi, a)]])
                    separator: Separator = chi
                else:
                    separator = make_rep(k, e, gamma, Mode.BANACH)
                    witness = evaluate_rep(separator, a)
                if not witness.is_zero():
                    log_operation(logger, "separate", "completed", {
                        "separator": str(separator),
                        "duration_sec": time.time() - start_time
                    })
                    return separator, witness
            log_operation(logger, "separate", "failed", {"element": str(a), "k": k, "e": e}, level="ERROR")
            raise InternalError(f"every gamma candidate kills {a} at k={k}, e={e}")

    log_operation(logger, "separate", "failed", {"element": str(a), "max_k": max_k}, level="WARNING")
    raise CapacityError(f"no separating representation with k <= {max_k}")
