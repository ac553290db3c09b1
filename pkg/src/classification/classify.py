"""
Constructive steps of the classification of irreducible right modules:
choosing a prime whose roots of unity avoid the zeros of a polynomial,
direct finiteness, and the two-dimensional sequence space G_1.
"""
import math
import time
from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

from sympy import nextprime, primefactors

from src.algebra_cs import AlgebraElement, LaurentPoly, product
from src.algebra_cs.algebra import Scalar
from src.exact_arith import Cyclotomic, as_cyclotomic, format_cyclotomic
from src.mu_dynamics import doubling_orbit
from src.representations import (
    AvgSequence,
    Matrix,
    MatrixRep,
    Mode,
    avg_act_x,
    avg_act_y,
    evaluate_rep,
    make_rep,
)
from src.utils.errors import CapacityError, ConstraintError, InternalError
from src.utils.logging_utils import setup_logging, log_operation
from .config import config

logger = setup_logging("classification")


def choose_prime(betas: Iterable[Union[Fraction, int, str]]) -> int:
    """
    Smallest odd prime p above every odd prime dividing a denominator of
    the betas, with p * beta not an integer for each beta.

    Raises:
        ConstraintError: some beta outside (0, 1)
    """
    start_time = time.time()
    normalized = [Fraction(b) for b in betas]
    for beta in normalized:
        if not 0 < beta < 1:
            raise ConstraintError(f"beta={beta} is not strictly between 0 and 1")
    odd_primes = {q for beta in normalized for q in primefactors(beta.denominator) if q != 2}
    p = int(nextprime(max(odd_primes, default=2)))
    while any((p * beta).denominator == 1 for beta in normalized):
        p = int(nextprime(p))
    log_operation(logger, "choose_prime", "completed", {
        "betas": len(normalized),
        "prime": p,
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return p


def root_of_unity_angles(phi: LaurentPoly, max_order: Optional[int] = None) -> List[Fraction]:
    """Angles beta in (0, 1), in turns, with phi(exp(2 pi i beta)) = 0 exactly, orders <= max_order."""
    max_order = config.max_root_order if max_order is None else max_order
    if phi.is_zero():
        raise ConstraintError("the zero polynomial vanishes everywhere")
    angles = []
    for n in range(2, max_order + 1):
        for e in range(1, n):
            if math.gcd(e, n) == 1 and phi.evaluate_root(n, e).is_zero():
                angles.append(Fraction(e, n))
    return sorted(angles)


def prime_for_polynomial(phi: LaurentPoly) -> int:
    """
    An odd prime p with phi(zeta_p^(2^j)) != 0 for every j.

    Starts from choose_prime on the rational zero angles of phi and moves
    to the next prime while some point of the doubling orbit of zeta_p is
    still a zero.

    Raises:
        ConstraintError: phi is zero
        CapacityError: no prime found within the configured number of steps
    """
    p = choose_prime(root_of_unity_angles(phi))
    for _ in range(config.max_prime_steps):
        orbit = doubling_orbit(p, 1)
        if all(not phi.evaluate_root(p, e).is_zero() for e in orbit.cycle):
            return p
        p = int(nextprime(p))
    raise CapacityError(f"no suitable prime within {config.max_prime_steps} steps")


class Verdict(str, Enum):
    BOTH_IDENTITIES = "both-identities"
    NEITHER = "neither"
    VIOLATION = "violation"


def direct_finiteness_verdict(ba_is_one: bool, ab_is_one: bool) -> Verdict:
    if ba_is_one and ab_is_one:
        return Verdict.BOTH_IDENTITIES
    if not ba_is_one and not ab_is_one:
        return Verdict.NEITHER
    return Verdict.VIOLATION


def _settle(verdict: Verdict, context: dict) -> Verdict:
    if verdict is Verdict.VIOLATION:
        log_operation(logger, "direct_finiteness", "failed", context, level="ERROR")
        raise InternalError(f"direct finiteness violated: {context}")
    log_operation(logger, "direct_finiteness", "completed", {**context, "verdict": verdict.value}, level="DEBUG")
    return verdict


def check_direct_finiteness(a: AlgebraElement, b: AlgebraElement) -> Verdict:
    """
    Compare ba = 1 with ab = 1 exactly.

    Raises:
        InternalError: exactly one of the products is the identity
    """
    one = AlgebraElement.one()
    verdict = direct_finiteness_verdict(product(b, a) == one, product(a, b) == one)
    return _settle(verdict, {"a": str(a), "b": str(b)})


def rep_direct_finiteness(rep: MatrixRep, a: AlgebraElement, b: AlgebraElement) -> Verdict:
    """The same comparison for pi(b) pi(a) and pi(a) pi(b) under one representation."""
    pa, pb = evaluate_rep(rep, a), evaluate_rep(rep, b)
    identity = Matrix.identity(rep.k)
    verdict = direct_finiteness_verdict(pb @ pa == identity, pa @ pb == identity)
    return _settle(verdict, {"rep": rep.descriptor(), "a": str(a), "b": str(b)})


def _check_g1_parameters(alpha: Cyclotomic, beta: Cyclotomic, M: int) -> None:
    if alpha ** 4 != alpha or alpha ** 2 == alpha:
        raise ConstraintError(f"alpha={format_cyclotomic(alpha)} is not a primitive cube root of unity")
    if beta.is_zero():
        raise ConstraintError("beta must be nonzero")
    if M < config.g1_min_length:
        raise ConstraintError(f"truncation length {M} below {config.g1_min_length}")


def g1_basis(alpha: Scalar, beta: Scalar, M: int) -> Tuple[AvgSequence, AvgSequence]:
    """Truncations to length M of the sequences with g(j+2) = beta^2 g(j) and (g(0), g(1)) = (1, 0), (0, 1)."""
    alpha, beta = as_cyclotomic(alpha), as_cyclotomic(beta)
    _check_g1_parameters(alpha, beta, M)
    ratio = beta * beta
    basis = []
    for start in ((1, 0), (0, 1)):
        values = [as_cyclotomic(start[0]), as_cyclotomic(start[1])]
        while len(values) < M:
            values.append(values[-2] * ratio)
        basis.append(AvgSequence(tuple(values), alpha))
    return basis[0], basis[1]


def satisfies_g1(g: AvgSequence, beta: Scalar) -> bool:
    ratio = as_cyclotomic(beta) ** 2
    return all(g.values[j + 2] == ratio * g.values[j] for j in range(len(g.values) - 2))


def verify_g1_invariance(alpha: Scalar, beta: Scalar, M: int = 8) -> bool:
    """
    x and y map the truncated G_1 into sequences that still satisfy
    g(j+2) = beta^2 g(j); with alpha^4 = alpha the weights alpha^(2^m) are
    2-periodic, which is what keeps the recurrence.

    Raises:
        ConstraintError: alpha not a primitive cube root, beta = 0, or M too short
    """
    start_time = time.time()
    basis = g1_basis(alpha, beta, M)
    holds = all(
        satisfies_g1(avg_act_x(g), beta) and satisfies_g1(avg_act_y(g), beta)
        for g in basis
    )
    log_operation(logger, "verify_g1_invariance", "completed", {
        "alpha": format_cyclotomic(as_cyclotomic(alpha)),
        "beta": format_cyclotomic(as_cyclotomic(beta)),
        "holds": holds,
        "duration_sec": time.time() - start_time
    }, level="DEBUG")
    return holds


def g1_action_matrices(alpha: Scalar, beta: Scalar, M: int = 8) -> Tuple[Matrix, Matrix]:
    """Matrices of x and y on G_1 in the basis of g1_basis; row i holds the coordinates (g(0), g(1)) of b_i . x."""
    basis = g1_basis(alpha, beta, M)
    x_rows = [avg_act_x(g).values[:2] for g in basis]
    y_rows = [avg_act_y(g).values[:2] for g in basis]
    return Matrix.from_rows(x_rows), Matrix.from_rows(y_rows)


def g1_equivalent_to_rep(alpha: Scalar, beta: Scalar) -> bool:
    """
    True when the action on G_1 is conjugate to pi_(alpha, beta) by P = diag(1, beta).

    Raises:
        ConstraintError: alpha not a primitive cube root, or beta zero or not Gaussian-rational
    """
    alpha, beta = as_cyclotomic(alpha), as_cyclotomic(beta)
    exponent = next((e for e in (1, 2) if Cyclotomic.root_of_unity(3, e) == alpha), None)
    if exponent is None:
        raise ConstraintError(f"alpha={format_cyclotomic(alpha)} is not a primitive cube root of unity")
    x_g, y_g = g1_action_matrices(alpha, beta)
    rep = make_rep(2, exponent, beta, Mode.ALGEBRAIC)
    P = Matrix.diag([1, beta])
    P_inv = Matrix.diag([1, beta.inverse()])
    return P @ x_g @ P_inv == rep.x_matrix() and P @ y_g @ P_inv == rep.Y
