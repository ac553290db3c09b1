"""The invariant chain V_1 > V_2 > ... of trigonometric polynomials vanishing on 2^p-th roots of unity."""
from typing import List

from src.exact_arith import Cyclotomic
from src.utils.errors import CapacityError, ConstraintError
from src.wiener_fourier import CoeffSeq
from .config import config


def _check_depth(p: int) -> int:
    if p < 1:
        raise ConstraintError(f"p must be positive, got {p}")
    if p > config.max_chain_p:
        raise CapacityError(f"p={p} exceeds chain cap {config.max_chain_p}")
    return 1 << p


def fold(f: CoeffSeq, period: int) -> CoeffSeq:
    """Reduce f modulo zeta^period - 1: coefficients summed by index class."""
    return CoeffSeq.from_pairs((n % period, c) for n, c in f.coeffs)


def chain_values(f: CoeffSeq, p: int) -> List[Cyclotomic]:
    """f(zeta_(2^p) ** e) for e = 0 .. 2^p - 1, exactly."""
    period = _check_depth(p)
    folded = fold(f, period)
    return [folded.evaluate(period, e) for e in range(period)]


def in_chain_Vp(f: CoeffSeq, p: int) -> bool:
    """
    True iff f vanishes at every 2^p-th root of unity.

    The values at the 2^p-th roots are the discrete Fourier transform of
    the folded coefficients, and that transform is invertible, so f lies
    in V_p exactly when every folded coefficient is zero.

    Raises:
        CapacityError: p above the configured cap
    """
    return fold(f, _check_depth(p)).is_zero()


def chain_generator(p: int) -> CoeffSeq:
    """zeta^(2^p) - 1, which generates V_p as an ideal."""
    return CoeffSeq.from_pairs([(_check_depth(p), 1), (0, -1)])
