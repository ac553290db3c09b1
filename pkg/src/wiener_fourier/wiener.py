"""
Finitely supported coefficient sequences on Z.

A CoeffSeq is at once a vector of the left module V_A (basis delta_n), a
trigonometric polynomial f(zeta) = sum c_n zeta^n in V_B, and an element of
the Wiener algebra W under convolution.
"""
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from src.algebra_cs import AlgebraElement, LaurentPoly, parse_scalar
from src.algebra_cs.algebra import Scalar, _collect
from src.exact_arith import Cyclotomic, encode_cyclotomic, format_cyclotomic
from src.utils.errors import ConstraintError, InternalError, NotInvertibleError, ParseError
from src.utils.logging_utils import setup_logging, log_operation

logger = setup_logging("wiener_fourier")


@dataclass(frozen=True, eq=False)
class CoeffSeq:
    """(index, coefficient) pairs sorted by index, no zero coefficients."""

    coeffs: Tuple[Tuple[int, Cyclotomic], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[int, Scalar]) -> "CoeffSeq":
        return cls(_collect(mapping.items()))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, Scalar]]) -> "CoeffSeq":
        return cls(_collect(pairs))

    @classmethod
    def delta(cls, n: int, c: Scalar = 1) -> "CoeffSeq":
        return cls(_collect([(n, c)]))

    @classmethod
    def zero(cls) -> "CoeffSeq":
        return cls(())

    @classmethod
    def from_laurent(cls, phi: LaurentPoly) -> "CoeffSeq":
        return cls(phi.coeffs)

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly(self.coeffs)

    def as_dict(self) -> Dict[int, Cyclotomic]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, n: int) -> Cyclotomic:
        return self.as_dict().get(n, Cyclotomic.zero())

    def support(self) -> List[int]:
        return [n for n, _ in self.coeffs]

    def max_abs_index(self) -> int:
        return max((abs(n) for n, _ in self.coeffs), default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffSeq):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(
            n == p and c == d for (n, c), (p, d) in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __add__(self, other: "CoeffSeq") -> "CoeffSeq":
        return CoeffSeq(_collect(list(self.coeffs) + list(other.coeffs)))

    def __neg__(self) -> "CoeffSeq":
        return CoeffSeq(tuple((n, -c) for n, c in self.coeffs))

    def __sub__(self, other: "CoeffSeq") -> "CoeffSeq":
        return self + (-other)

    def scale(self, c: Scalar) -> "CoeffSeq":
        return CoeffSeq(_collect((n, a * c) for n, a in self.coeffs))

    def evaluate(self, order: int, e: int) -> Cyclotomic:
        """f(zeta_order ** e) exactly."""
        return self.as_laurent().evaluate_root(order, e)

    def __str__(self) -> str:
        return format_sequence(self)


def _monomial_left(m: int, n: int, index: int) -> Optional[int]:
    """Image index of delta_index under x^m y^n acting on the left, or None if killed."""
    index -= n
    for _ in range(m):
        if index == 0:
            return 0
        if index % 2:
            return None
        index //= 2
    return index


def left_act(a: AlgebraElement, v: CoeffSeq) -> CoeffSeq:
    """
    The left module V_A: x delta_2n = delta_n, x delta_2n-1 = 0, y delta_n = delta_n-1.

    A term x^m y^n acts on delta_j by shifting to j - n and then halving m
    times, killing the vector as soon as an odd index must be halved.
    """
    pairs = []
    for s, c in a.terms:
        for j, d in v.coeffs:
            target = _monomial_left(s.m, s.n, j)
            if target is not None:
                pairs.append((target, c * d))
    return CoeffSeq(_collect(pairs))


def right_act(v: CoeffSeq, a: AlgebraElement) -> CoeffSeq:
    """The dual right action: delta_j x^m y^n = delta_(2^m j + n)."""
    return CoeffSeq(_collect(
        ((j << s.m) + s.n, d * c) for j, d in v.coeffs for s, c in a.terms
    ))


def pairing(v: CoeffSeq, w: CoeffSeq) -> Cyclotomic:
    """<sum a_n delta_n, sum b_n delta_n> = sum a_n b_n, bilinear (no conjugation)."""
    other = w.as_dict()
    total = Cyclotomic.zero()
    for n, c in v.coeffs:
        if n in other:
            total = total + c * other[n]
    return total


def wiener_product(f: CoeffSeq, g: CoeffSeq) -> CoeffSeq:
    """Convolution in l1(Z), i.e. pointwise product of the trigonometric polynomials."""
    return CoeffSeq(_collect((n + p, a * b) for n, a in f.coeffs for p, b in g.coeffs))


def map_to_delta0(xi: CoeffSeq, k: int, N: int) -> CoeffSeq:
    """
    xi_k^-1 x^N y^k xi under the left action.

    For finitely supported xi the result is exactly delta_0 once N exceeds
    the bit-length of every index of y^k xi.

    Raises:
        NotInvertibleError: xi has no coefficient at index k
    """
    if N < 0:
        raise ConstraintError(f"N must be nonnegative, got {N}")
    pivot = xi.coefficient(k)
    if pivot.is_zero():
        raise NotInvertibleError(f"coefficient of xi at index {k} is zero")
    moved = left_act(AlgebraElement.monomial(N, k), xi)
    return moved.scale(pivot.inverse())


def convergence_depth(xi: CoeffSeq, k: int) -> int:
    """Smallest N guaranteed by the halving argument: 1 + bit-length of the largest shifted index."""
    return 1 + max((abs(n - k).bit_length() for n, _ in xi.coeffs), default=0)


def faithfulness_witness(a: AlgebraElement) -> Optional[int]:
    """
    Smallest |j| (positive j first) with delta_j . a != 0, or None when a = 0.

    At a vanishing j a term of top x-degree must collide with a term of lower
    x-degree, and each such pair collides for at most one j, so fewer than
    (number of terms) values of j vanish.

    Raises:
        InternalError: no witness within the bound for a nonzero a
    """
    if a.is_zero():
        return None
    start_time = time.time()
    bound = 1 + len(a.terms)
    for size in range(bound + 1):
        for j in ((size, -size) if size else (0,)):
            if not right_act(CoeffSeq.delta(j), a).is_zero():
                log_operation(logger, "faithfulness_witness", "completed", {
                    "terms": len(a.terms),
                    "witness": j,
                    "duration_sec": time.time() - start_time
                }, level="DEBUG")
                return j
    log_operation(logger, "faithfulness_witness", "failed", {
        "element": str(a), "bound": bound
    }, level="ERROR")
    raise InternalError(f"no faithfulness witness for {a} within |j| <= {bound}")


def format_sequence(v: CoeffSeq) -> str:
    """'c@n' pairs, e.g. '1@0, -1/2@3'; zero is the empty string."""
    parts = []
    for n, c in v.coeffs:
        text = format_cyclotomic(c)
        if not c.is_rational():
            text = f"({text})"
        parts.append(f"{text}@{n}")
    return ", ".join(parts)


def parse_sequence(text: str) -> CoeffSeq:
    """
    Parse 'c@n' pairs separated by commas. A pair without '@n' sits at index 0.

    Raises:
        ParseError: Malformed coefficient or index
    """
    pairs = []
    offset = 0
    for chunk in text.split(","):
        if chunk.strip():
            coeff_text, _, index_text = chunk.partition("@")
            try:
                index = int(index_text.strip()) if index_text.strip() else 0
            except ValueError:
                raise ParseError(f"bad index {index_text.strip()!r}", offset + len(coeff_text) + 1) from None
            try:
                coefficient = parse_scalar(coeff_text)
            except ParseError as e:
                raise ParseError(f"bad coefficient {coeff_text.strip()!r}", offset + e.position) from None
            pairs.append((index, coefficient))
        offset += len(chunk) + 1
    return CoeffSeq.from_pairs(pairs)


def encode_sequence(v: CoeffSeq) -> List[dict]:
    return [{"n": str(n), "coefficient": encode_cyclotomic(c)} for n, c in v.coeffs]
